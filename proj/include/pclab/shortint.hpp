#pragma once

#include <complex>

#include "pclab/arith.hpp"
#include "pclab/quadrature.hpp"
#include "pclab/zerodata.hpp"

namespace pclab {

// J(X,tau,theta) = int_X^{X(1+tau)} (psi(x + theta x) - psi(x) - theta x)^2 dx.
struct ShortIntervalSpec {
  double X;
  double tau;
  double theta;
};

// int_X^{X+Y} (psi(x+h) - psi(x) - h)^2 dx.
struct SVSpec {
  double X;
  double Y;
  double h;
};

// kappa = log(1+theta)/2 ties the sine-kernel scale to the interval width.
struct TauberianParams {
  double kappa;
  double theta;
  double Z;  // zero-sum truncation height
};
TauberianParams make_tauberian(double theta, double Z);

// Exact value of J: between consecutive breakpoints {p^k} and {p^k/(1+theta)}
// the integrand is a quadratic polynomial, integrated in closed form.
// Throws InsufficientSieve unless the table covers X(1+tau)(1+theta).
double j_exact(const ShortIntervalSpec& spec, const LambdaTable& table);

// Asymptotic shape (1 + tau/2) tau theta X^2 log(1/theta).
double j_rhs(const ShortIntervalSpec& spec);

struct SVResult {
  double value = 0.0;  // exact piecewise integral
  double rhs = 0.0;    // Y h log(X/h)
};
SVResult sv_integral(const SVSpec& spec, const LambdaTable& table);

// c(theta, s) = ((1+theta)^s - 1)/s, with the s -> 0 limit log(1+theta) and a
// series branch below |s| = 1e-8.
std::complex<double> c_coeff(double theta, std::complex<double> s);

// int_A^B x^{1+i delta} dx in closed form, stable for small delta and for
// B/A near 1.
std::complex<double> power_integral(double A, double B, double delta);

// I(X,tau,kappa) = 4 tau int_0^inf (sin(kappa t)/t)^2 Phi(X,t,tau)^2 dt over
// the window's Phi; the cut tail is bounded by the log-growth envelope of
// Phi and carried in tail_bound.
Integral i_integral(const SignedZeroWindow& win, double X, double tau,
                    double kappa, const QuadratureSpec& q);

// U(X,tau,theta) = int_X^{X(1+tau)} |sum_{|gamma|<=Z} c(theta,rho) x^rho|^2 dx
// with rho = 1/2 + i gamma, expanded into closed-form pair integrals.
// Throws HeightExceeded if Z > win.T.
double u_integral(const SignedZeroWindow& win, double X, double tau,
                  double theta, double Z);

struct Lemma10Result {
  double J = 0.0;
  double U = 0.0;
  double rel_gap = 0.0;
};
// Requires Z >= X log^2 X (RangeViolation otherwise); both sides computed
// independently.
Lemma10Result lemma10_check(const ShortIntervalSpec& spec,
                            const LambdaTable& table,
                            const SignedZeroWindow& win, double Z);

struct Lemma9Result {
  double lhs = 0.0;
  double rhs = 0.0;
  double err_scale = 0.0;
};
// Requires 0 < theta <= tau <= 1 and Z >= 1/theta. lhs is the sine-kernel
// integral of Phi^2, rhs the closed-form Lorentzian pair sum over
// |gamma| <= Z; err_scale = theta^2 tau^{-3} log^4(2/theta)
//                         + log^4(2Z)/(tau^2 Z).
Lemma9Result lemma9_check(double theta, double tau, double X, double Z,
                          const SignedZeroWindow& win, const QuadratureSpec& q);

}  // namespace pclab
