#include "pclab/explicitformula.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pclab/errors.hpp"
#include "pclab/paircorr.hpp"
#include "pclab/special.hpp"
#include "pclab/summation.hpp"

namespace pclab {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Cx = std::complex<double>;

// The tail sum_{n>N} Lambda(n) n^{-s} is continued by two steps of partial
// summation: with R(x) = psi(x) - x + log 2pi,
//   tail = N^{1-s}/(s-1) - R(N) N^{-s} + s int_N^inf R(x) x^{-s-1} dx,
// the first two terms computed exactly from the table and the last bounded
// by the RH envelope |R(x)| <= sqrt(x) log^2 x / (8 pi) (Schoenfeld).
double dirichlet_tail_residual(Cx s, double N) {
  const double d = s.real() - 0.5;
  const double lg = std::log(N);
  const double integral = (1.0 / (8.0 * kPi)) * std::pow(N, -d) *
                          (lg * lg / d + 2.0 * lg / (d * d) + 2.0 / (d * d * d));
  return std::abs(s) * integral;
}

// N^{1-s}/(s-1) - R(N) N^{-s}, the computable part of the continued tail.
Cx dirichlet_tail_main(Cx s, double N, const LambdaTable& table) {
  const double RN = psi(table, N) - N + std::log(2.0 * kPi);
  return std::exp(-s * std::log(N)) * (N / (s - 1.0) - RN);
}

}  // namespace

Lemma4Params make_lemma4_params(double X, double t, double tau, double zero_T,
                                std::uint64_t prime_N) {
  if (!(X >= 2.0)) throw RangeViolation("lemma4 requires X >= 2");
  if (!(std::fabs(t) >= 1.0)) throw RangeViolation("lemma4 requires |t| >= 1");
  if (!(tau > 0.0 && tau <= 1.0))
    throw RangeViolation("lemma4 requires tau in (0,1]");
  Lemma4Params p;
  p.X = X;
  p.t = t;
  p.tau = tau;
  p.sigma0 = 0.5 + 1.0 / tau;
  p.zero_T = zero_T;
  p.prime_N = prime_N;
  return p;
}

ZldValue zeta_log_deriv(Cx s, const LambdaTable& table, double tol) {
  if (!(s.real() >= 1.5))
    throw Error("zeta_log_deriv requires Re s >= 3/2");
  if (table.range_end < 100)
    throw InsufficientSieve("zeta_log_deriv needs a table past 100");
  const double N = static_cast<double>(table.range_end);
  const double resid = dirichlet_tail_residual(s, N);
  if (resid > tol)
    throw InsufficientSieve("zeta_log_deriv tail residual " +
                            std::to_string(resid) + " exceeds tol " +
                            std::to_string(tol) + " at table end " +
                            std::to_string(table.range_end));
  CompensatedSum re, im;
  for (std::size_t i = 0; i < table.n.size(); ++i) {
    const double ln = std::log(static_cast<double>(table.n[i]));
    const double r = table.lambda[i] * std::exp(-s.real() * ln);
    const double ph = s.imag() * ln;
    re.add(r * std::cos(ph));
    im.add(-r * std::sin(ph));
  }
  ZldValue out;
  const Cx series(re.value(), im.value());
  out.value = -series - dirichlet_tail_main(s, N, table);
  out.tail_bound = resid;
  return out;
}

ZldValue zeta_log_deriv_reflected(Cx s, const LambdaTable& table, double tol) {
  ZldValue z = zeta_log_deriv(s, table, tol);
  z.value += 0.5 * digamma(0.5 * s) + 0.5 * digamma(0.5 * (1.0 - s)) -
             std::log(kPi);
  return z;
}

Cx lambda_power_sum(const LambdaTable& table, double X, Cx e) {
  if (!(X >= 1.0)) throw RangeViolation("lambda_power_sum requires X >= 1");
  if (X > static_cast<double>(table.range_end))
    throw InsufficientSieve("lambda_power_sum: X = " + std::to_string(X) +
                            " beyond table end " +
                            std::to_string(table.range_end));
  CompensatedSum re, im;
  for (std::size_t i = 0;
       i < table.n.size() && static_cast<double>(table.n[i]) <= X; ++i) {
    const double lr = std::log(X / static_cast<double>(table.n[i]));
    const double r = table.lambda[i] * std::exp(e.real() * lr);
    const double ph = e.imag() * lr;
    re.add(r * std::cos(ph));
    im.add(r * std::sin(ph));
  }
  return {re.value(), im.value()};
}

Lemma4Side lemma4_lhs(const Lemma4Params& p, const SignedZeroWindow& win) {
  if (win.T != p.zero_T)
    throw Error("lemma4_lhs: window height does not match zero_T");
  PhiEvaluator ev(win, p.X, p.tau);
  // 1/((sigma-1/2)^2 + (t-gamma)^2) = tau^2 / (1 + tau^2 (t-gamma)^2)
  // since sigma - 1/2 = 1/tau exactly by construction.
  const double scale = (2.0 * p.sigma0 - 1.0) * p.tau * p.tau;
  Lemma4Side out;
  out.value = scale * ev.field(p.t);
  out.tail_bound = scale * ev.tail_bound(p.t);
  return out;
}

Lemma4Side lemma4_rhs(const Lemma4Params& p, const LambdaTable& table) {
  const double X = p.X, t = p.t, sig = p.sigma0;
  if (p.prime_N > table.range_end)
    throw InsufficientSieve("lemma4_rhs: prime_N beyond the table end");
  if (static_cast<double>(p.prime_N) <= X)
    throw RangeViolation("lemma4_rhs: prime_N must exceed X");
  const double N = static_cast<double>(p.prime_N);
  const double rootX = std::sqrt(X);

  // Descending sum over n <= X.
  const Cx S1 = lambda_power_sum(table, X, Cx(1.0 - sig, t));

  // Ascending sum over X < n <= prime_N, then the integral continuation of
  // the remainder: int_N^inf (X/x)^{sigma+it} dx = (X/N)^{sigma+it} N/(s-1).
  const Cx e_asc(sig, t);
  CompensatedSum re2, im2;
  for (std::size_t i = 0; i < table.n.size(); ++i) {
    const double n = static_cast<double>(table.n[i]);
    if (n <= X) continue;
    if (n > N) break;
    const double lr = std::log(X / n);
    const double r = table.lambda[i] * std::exp(sig * lr);
    const double ph = t * lr;
    re2.add(r * std::cos(ph));
    im2.add(r * std::sin(ph));
  }
  const Cx asc_cont = std::exp(e_asc * std::log(X)) *
                      dirichlet_tail_main(e_asc, N, table);
  const Cx S2 = Cx(re2.value(), im2.value()) + asc_cont;

  // Reflected zeta'/zeta term times X^{1/2-sigma+it}.
  const ZldValue refl = zeta_log_deriv_reflected(
      Cx(sig, -t), table, std::numeric_limits<double>::infinity());
  const Cx Xpow = std::exp(Cx(0.5 - sig, t) * std::log(X));
  const Cx term3 = refl.value * Xpow;

  // Rational term X^{1/2} (2 sigma - 1)/((sigma-1+it)(sigma-it)).
  const Cx term4 =
      rootX * (2.0 * sig - 1.0) / (Cx(sig - 1.0, t) * Cx(sig, -t));

  // Trivial-zero series: geometric in X^{-2}, summed to convergence.
  CompensatedSum re5, im5;
  double pw = 1.0;
  double trunc5 = 0.0;
  for (int n = 1; n <= 64; ++n) {
    pw /= X * X;
    const Cx d = pw / (Cx(sig - 1.0 - 2.0 * n, -t) * Cx(sig + 2.0 * n, t));
    re5.add(d.real());
    im5.add(d.imag());
    if (pw < 1e-22) break;
    trunc5 = pw / (X * X);
  }
  const Cx term5 =
      -(2.0 * sig - 1.0) / rootX * Cx(re5.value(), im5.value());

  Lemma4Side out;
  out.value = -(S1 + S2) / rootX + term3 + term4 + term5;

  // Budget: psi-remainder residuals of the two continued tails, plus the
  // conventional remainder allowances with constant 1.
  const double resid_asc =
      std::pow(X, sig - 0.5) * dirichlet_tail_residual(e_asc, N);
  const double resid_refl = refl.tail_bound * std::pow(X, 0.5 - sig);
  out.tail_bound = resid_asc + resid_refl +
                   std::pow(X, -2.5) / std::fabs(t) + std::pow(X, 0.5 - sig) +
                   (2.0 * sig - 1.0) * trunc5 / rootX;
  return out;
}

Lemma4Report verify_lemma4(const Lemma4Params& p, const SignedZeroWindow& win,
                           const LambdaTable& table) {
  const Lemma4Side L = lemma4_lhs(p, win);
  const Lemma4Side R = lemma4_rhs(p, table);
  Lemma4Report rep;
  rep.lhs = L.value;
  rep.rhs = R.value;
  rep.gap = std::abs(L.value - R.value);
  rep.budget = L.tail_bound + R.tail_bound;
  return rep;
}

}  // namespace pclab
