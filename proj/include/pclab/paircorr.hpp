#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "pclab/quadrature.hpp"
#include "pclab/zerodata.hpp"

namespace pclab {

struct PairCorrParams {
  double X;
  double T;
  double tau;
  double pair_tol = 0.0;  // per-pair w threshold; 0 = exact O(N^2)
};

struct FValue {
  double value = 0.0;
  std::uint64_t pairs_exact = 0;
  std::uint64_t pairs_skipped = 0;
  double truncation_bound = 0.0;  // certified bound on the skipped mass
};

struct PhiValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

struct IdentityPair {
  double lhs = 0.0;
  double rhs = 0.0;
  double budget = 0.0;
};

// w(u) = 4 / (4 + u^2).
double pair_weight(double u);

// Extended pair correlation over the signed window {±γ}:
//   F(X,T,τ) = Σ X^{i(γ-γ')} w(τ(γ-γ')),
// computed trig-free over positive ordinates via the symmetric cosine
// expansion. pair_tol > 0 skips pairs with w below the threshold using a
// sorted two-pointer band; the skipped mass bound is returned.
FValue f_tau(const SignedZeroWindow& win, const PairCorrParams& p);

// Montgomery's F(X,T): f_tau at tau = 1.
FValue f_montgomery(const SignedZeroWindow& win, double X, double pair_tol = 0.0);

// Φ(X,t,τ) = |Σ_γ X^{iγ} / (1 + τ²(t-γ)²)| over the signed window, with a
// certified bound for the zeros above the window height. Reusable evaluator:
// the X-dependent phases are precomputed once.
class PhiEvaluator {
 public:
  PhiEvaluator(const SignedZeroWindow& win, double X, double tau);
  std::complex<double> field(double t) const;  // V(t)
  double operator()(double t) const;           // |V(t)|
  // Bound on the omitted |γ| > win.T mass at height t (needs |t| <= T - 2).
  double tail_bound(double t) const;

 private:
  std::vector<double> gam_, re_, im_;
  double T_, tau_;
};

// Single Φ evaluation; throws InsufficientHeight (reporting the required
// window height) when the tail bound exceeds tail_tol.
PhiValue phi(const SignedZeroWindow& win, double X, double t, double tau,
             double tail_tol = 1e-3);

// 𝒥(X,T,τ) = 4τ ∫_{-T}^{T} Φ(X,t,τ)² dt (computed as twice the [0,T] half;
// the integrand is even). tail_bound covers the Φ window-truncation bias.
Integral jcal(const SignedZeroWindow& win, double X, double T, double tau,
              const QuadratureSpec& q);

// ∫ dt / [(1+τ²(t-γ)²)(1+τ²(t-γ')²)]  vs  (π/2τ) w(τ(γ-γ')).
IdentityPair residue_identity_check(double gamma, double gamma_p, double tau,
                                    const QuadratureSpec& q);

// ∫ |Σ_γ X^{iγ} e^{iγv}|² e^{-2|v|/τ} dv  vs  τ·F(X,T,τ).
IdentityPair tauF_integral_check(const SignedZeroWindow& win, double X, double tau,
                                 const QuadratureSpec& q);

// F(X,T,τ) vs F(X,T)/τ² + ((τ²-1)/τ³) ∫_0^∞ F(u,T) a(u,X,τ)² du/u, the
// integral taken over a uniform grid in v = log(u/X) against the kernel
// e^{-2|v|/τ}. budget = lhs truncation + grid interpolation (Richardson) +
// sampling-alias bound + kernel tail bound.
IdentityPair hbg_identity_check(const ZeroOrdinates& Z, double X, double T,
                                double tau, const QuadratureSpec& q);

}  // namespace pclab
