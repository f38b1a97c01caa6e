#pragma once

#include <complex>
#include <cstdint>

#include "pclab/arith.hpp"
#include "pclab/zerodata.hpp"

namespace pclab {

// Parameters of the two-sided explicit-formula verification. sigma0 is the
// derived abscissa 1/2 + 1/tau (always >= 3/2 for tau <= 1).
struct Lemma4Params {
  double X;
  double t;
  double tau;
  double sigma0;
  double zero_T;
  std::uint64_t prime_N;
};

// Validates X >= 2, |t| >= 1, tau in (0,1] and fills sigma0.
Lemma4Params make_lemma4_params(double X, double t, double tau, double zero_T,
                                std::uint64_t prime_N);

struct ZldValue {
  std::complex<double> value;
  double tail_bound = 0.0;
};

// zeta'/zeta(s) for Re s >= 3/2: the von Mangoldt Dirichlet series over the
// table, continued past the table end with the integral of the smooth density
// (-N^{1-s}/(s-1)); the residual is bounded by the classical psi-remainder
// estimate sqrt(x) log^2 x / (8 pi). Throws InsufficientSieve when that bound
// exceeds tol.
ZldValue zeta_log_deriv(std::complex<double> s, const LambdaTable& table,
                        double tol);

// -zeta'/zeta(1-s) for Re s >= 3/2, via the functional equation
//   -z'/z(1-s) = z'/z(s) + psi(s/2)/2 + psi((1-s)/2)/2 - log pi
// with the digamma terms evaluated exactly.
ZldValue zeta_log_deriv_reflected(std::complex<double> s,
                                  const LambdaTable& table, double tol);

// Descending prime-power sum: sum_{n <= X} Lambda(n) (X/n)^e.
std::complex<double> lambda_power_sum(const LambdaTable& table, double X,
                                      std::complex<double> e);

struct Lemma4Side {
  std::complex<double> value;
  double tail_bound = 0.0;
};

// Zero side: (2 sigma - 1) sum_gamma X^{i gamma}/((sigma-1/2)^2 + (t-gamma)^2)
// over the signed window; tail_bound certifies the ordinates above win.T.
Lemma4Side lemma4_lhs(const Lemma4Params& p, const SignedZeroWindow& win);

// Prime/archimedean side: the two prime-power sums (the ascending one
// integral-continued past prime_N), the reflected zeta'/zeta term, the
// rational term, and the trivial-zero series. tail_bound carries the
// truncation residuals plus the conventional remainder allowances
// X^{-5/2}/|t| + X^{1/2-sigma}.
Lemma4Side lemma4_rhs(const Lemma4Params& p, const LambdaTable& table);

struct Lemma4Report {
  std::complex<double> lhs, rhs;
  double gap = 0.0;
  double budget = 0.0;
};

Lemma4Report verify_lemma4(const Lemma4Params& p, const SignedZeroWindow& win,
                           const LambdaTable& table);

}  // namespace pclab
