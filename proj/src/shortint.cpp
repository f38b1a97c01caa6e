#include "pclab/shortint.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "pclab/errors.hpp"
#include "pclab/paircorr.hpp"
#include "pclab/parallel.hpp"
#include "pclab/summation.hpp"

namespace pclab {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Cx = std::complex<double>;

// (e^w - 1)/w, series below |w| = 1e-4 where the direct subtraction cancels.
Cx cexpm1_over(Cx w) {
  if (std::abs(w) < 1e-4)
    return 1.0 + w * (0.5 + w * (1.0 / 6.0 + w * (1.0 / 24.0)));
  return (std::exp(w) - 1.0) / w;
}

// First table index whose prime power exceeds a (same floor comparison as
// the psi query, so events and initial values never double-count an entry).
std::size_t first_above(const LambdaTable& table, double a) {
  const auto cap = static_cast<std::uint64_t>(std::floor(a));
  return static_cast<std::size_t>(
      std::upper_bound(table.n.begin(), table.n.end(), cap) - table.n.begin());
}

struct Event {
  double x;
  double jump;
};

}  // namespace

TauberianParams make_tauberian(double theta, double Z) {
  if (!(theta > 0.0)) throw Error("make_tauberian: theta must be positive");
  if (!(Z > 0.0)) throw Error("make_tauberian: Z must be positive");
  return {0.5 * std::log1p(theta), theta, Z};
}

double j_exact(const ShortIntervalSpec& spec, const LambdaTable& table) {
  if (!(spec.X >= 2.0)) throw Error("j_exact: X must be >= 2");
  if (!(spec.tau > 0.0 && spec.tau <= 1.0))
    throw Error("j_exact: tau must lie in (0, 1]");
  if (!(spec.theta > 0.0 && spec.theta <= 1.0))
    throw Error("j_exact: theta must lie in (0, 1]");
  const double A = spec.X;
  const double B = spec.X * (1.0 + spec.tau);
  const double s = 1.0 + spec.theta;
  if (B * s > static_cast<double>(table.range_end))
    throw InsufficientSieve("j_exact needs the Lambda table up to " +
                            std::to_string(B * s) + ", have " +
                            std::to_string(table.range_end));

  // D(x) = psi((1+theta)x) - psi(x) is a step function; it drops by Lambda(n)
  // when x crosses a prime power n and rises by Lambda(n) when x crosses
  // n/(1+theta). Coincident breakpoints just stack zero-width panels.
  std::vector<Event> ev;
  for (std::size_t i = first_above(table, A); i < table.n.size(); ++i) {
    const double n = static_cast<double>(table.n[i]);
    if (n > B) break;
    ev.push_back({n, -table.lambda[i]});
  }
  for (std::size_t i = first_above(table, s * A); i < table.n.size(); ++i) {
    const double n = static_cast<double>(table.n[i]);
    if (n > s * B) break;
    ev.push_back({std::min(std::max(n / s, A), B), table.lambda[i]});
  }
  std::sort(ev.begin(), ev.end(),
            [](const Event& a, const Event& b) { return a.x < b.x; });

  // Between breakpoints the integrand (D - theta x)^2 is a quadratic; the
  // factored antiderivative below avoids the 1/theta cancellation.
  CompensatedSum acc;
  double x = A;
  double D = psi(table, s * A) - psi(table, A);
  const double th = spec.theta;
  auto flush = [&](double to) {
    if (to <= x) return;
    const double u = D - th * x;
    const double v = D - th * to;
    acc.add((to - x) * (u * u + u * v + v * v) / 3.0);
    x = to;
  };
  for (const Event& e : ev) {
    flush(e.x);
    D += e.jump;
  }
  flush(B);
  return acc.value();
}

double j_rhs(const ShortIntervalSpec& spec) {
  return (1.0 + spec.tau / 2.0) * spec.tau * spec.theta * spec.X * spec.X *
         std::log(1.0 / spec.theta);
}

SVResult sv_integral(const SVSpec& spec, const LambdaTable& table) {
  if (!(spec.X >= 2.0)) throw Error("sv_integral: X must be >= 2");
  if (!(spec.h > 0.0)) throw Error("sv_integral: h must be positive");
  if (!(spec.Y >= spec.h && spec.Y <= spec.X))
    throw Error("sv_integral: Y must lie in [h, X]");
  const double A = spec.X;
  const double B = spec.X + spec.Y;
  if (B + spec.h > static_cast<double>(table.range_end))
    throw InsufficientSieve("sv_integral needs the Lambda table up to " +
                            std::to_string(B + spec.h) + ", have " +
                            std::to_string(table.range_end));

  // D(x) = psi(x+h) - psi(x): the integrand (D-h)^2 is piecewise constant
  // with breakpoints at prime powers n and at n - h.
  std::vector<Event> ev;
  for (std::size_t i = first_above(table, A); i < table.n.size(); ++i) {
    const double n = static_cast<double>(table.n[i]);
    if (n > B) break;
    ev.push_back({n, -table.lambda[i]});
  }
  for (std::size_t i = first_above(table, A + spec.h); i < table.n.size(); ++i) {
    const double n = static_cast<double>(table.n[i]);
    if (n > B + spec.h) break;
    ev.push_back({std::min(std::max(n - spec.h, A), B), table.lambda[i]});
  }
  std::sort(ev.begin(), ev.end(),
            [](const Event& a, const Event& b) { return a.x < b.x; });

  CompensatedSum acc;
  double x = A;
  double D = psi(table, A + spec.h) - psi(table, A);
  auto flush = [&](double to) {
    if (to <= x) return;
    const double u = D - spec.h;
    acc.add((to - x) * u * u);
    x = to;
  };
  for (const Event& e : ev) {
    flush(e.x);
    D += e.jump;
  }
  flush(B);
  return {acc.value(), spec.Y * spec.h * std::log(spec.X / spec.h)};
}

std::complex<double> c_coeff(double theta, std::complex<double> s) {
  if (!(theta > 0.0)) throw Error("c_coeff: theta must be positive");
  const double L = std::log1p(theta);
  if (std::abs(s) < 1e-8) {
    const Cx w = s * L;
    return L * (1.0 + w * (0.5 + w * (1.0 / 6.0)));
  }
  return L * cexpm1_over(s * L);
}

std::complex<double> power_integral(double A, double B, double delta) {
  if (!(A > 0.0 && B > A)) throw Error("power_integral: requires 0 < A < B");
  // int_A^B x^{1+id} dx = A^{2+id} L (e^{(2+id)L} - 1)/((2+id)L), L = log(B/A);
  // stable uniformly in delta and in B/A -> 1.
  const double L = std::log(B / A);
  const double lA = std::log(A);
  const Cx head = (A * A) * std::polar(1.0, delta * lA);
  const Cx p(2.0, delta);
  return head * L * cexpm1_over(p * L);
}

Integral i_integral(const SignedZeroWindow& win, double X, double tau,
                    double kappa, const QuadratureSpec& q) {
  if (!(kappa > 0.0)) throw Error("i_integral: kappa must be positive");
  if (!(tau > 0.0 && tau <= 1.0)) throw Error("i_integral: tau must lie in (0, 1]");
  if (!(win.T >= 14.0))
    throw InsufficientHeight("i_integral needs a window of height >= 14");
  const PhiEvaluator ev(win, X, tau);
  const double Tc = 2.0 * win.T;
  auto f = [&](double t) {
    const double w = kappa * t;
    const double sc = std::fabs(w) < 1e-8 ? kappa * (1.0 - w * w / 6.0)
                                          : std::sin(w) / t;
    const double p = ev(t);
    return sc * sc * p * p;
  };
  const int cells =
      static_cast<int>(std::min(60000.0, std::max(64.0, std::ceil(Tc))));
  const Integral raw = integrate(f, 0.0, Tc, q, cells);
  // Beyond the cut the window is empty and Phi(t) <= log(2t)/tau (density
  // envelope); the sine factor contributes mean square 1/2 plus one
  // oscillation term.
  const double L2 = std::log(2.0 * Tc);
  const double env = (L2 * L2 + 2.0 * L2 + 2.0) / Tc;
  const double osc = L2 * L2 / (2.0 * kappa * Tc * Tc);
  const double cut = (0.5 * env + osc) / (tau * tau);
  Integral out;
  out.value = 4.0 * tau * raw.value;
  out.quad_error = 4.0 * tau * raw.quad_error;
  out.tail_bound = 4.0 * tau * (raw.tail_bound + cut);
  return out;
}

double u_integral(const SignedZeroWindow& win, double X, double tau,
                  double theta, double Z) {
  if (!(X >= 2.0)) throw Error("u_integral: X must be >= 2");
  if (!(tau > 0.0 && tau <= 1.0)) throw Error("u_integral: tau must lie in (0, 1]");
  if (!(theta > 0.0)) throw Error("u_integral: theta must be positive");
  if (Z > win.T)
    throw HeightExceeded("u_integral: Z = " + std::to_string(Z) +
                         " exceeds the window height T = " + std::to_string(win.T));
  const auto& g = win.positives;
  const auto m = static_cast<std::size_t>(
      std::upper_bound(g.begin(), g.end(), Z) - g.begin());
  if (m == 0) return 0.0;

  const double A = X;
  const double B = X * (1.0 + tau);
  const double lA = std::log(A);
  const double lB = std::log(B);
  const double A2 = A * A;
  const double B2 = B * B;
  std::vector<Cx> c(m), pA(m), pB(m);
  for (std::size_t i = 0; i < m; ++i) {
    c[i] = c_coeff(theta, Cx(0.5, g[i]));
    pA[i] = std::polar(1.0, g[i] * lA);
    pB[i] = std::polar(1.0, g[i] * lB);
  }

  // |sum_{|gamma|<=Z} c x^rho|^2 expanded over signed ordinate pairs; the
  // mirror of +gamma carries the conjugate coefficient, so each positive
  // ordered pair folds four sign combinations into two real parts, and
  // B^{2+i delta} splits into the precomputed single-ordinate phases.
  struct Slot {
    CompensatedSum sum;
  };
  auto slots = map_blocks<Slot>(
      m, 256, [&](std::uint64_t lo, std::uint64_t hi, Slot& slot) {
        for (std::size_t i = lo; i < hi; ++i) {
          double row = 0.0;
          for (std::size_t j = 0; j < i; ++j) {
            const Cx idiff = (B2 * pB[i] * std::conj(pB[j]) -
                              A2 * pA[i] * std::conj(pA[j])) /
                             Cx(2.0, g[i] - g[j]);
            const Cx isum =
                (B2 * pB[i] * pB[j] - A2 * pA[i] * pA[j]) / Cx(2.0, g[i] + g[j]);
            row += 4.0 * ((c[i] * std::conj(c[j]) * idiff).real() +
                          (c[i] * c[j] * isum).real());
          }
          const Cx idg =
              (B2 * pB[i] * pB[i] - A2 * pA[i] * pA[i]) / Cx(2.0, 2.0 * g[i]);
          row += std::norm(c[i]) * (B2 - A2) + 2.0 * (c[i] * c[i] * idg).real();
          slot.sum.add(row);
        }
      });
  CompensatedSum total;
  for (const auto& s : slots) total.merge(s.sum);
  return total.value();
}

Lemma10Result lemma10_check(const ShortIntervalSpec& spec,
                            const LambdaTable& table,
                            const SignedZeroWindow& win, double Z) {
  const double lx = std::log(spec.X);
  if (!(Z >= spec.X * lx * lx))
    throw RangeViolation("lemma10_check requires Z >= X log^2 X = " +
                         std::to_string(spec.X * lx * lx) + ", got Z = " +
                         std::to_string(Z));
  Lemma10Result r;
  r.J = j_exact(spec, table);
  r.U = u_integral(win, spec.X, spec.tau, spec.theta, Z);
  const double denom = std::max(r.J, r.U);
  r.rel_gap = denom > 0.0 ? std::fabs(r.J - r.U) / denom : 0.0;
  return r;
}

Lemma9Result lemma9_check(double theta, double tau, double X, double Z,
                          const SignedZeroWindow& win, const QuadratureSpec& q) {
  if (!(theta > 0.0 && theta <= tau && tau <= 1.0))
    throw RangeViolation("lemma9_check requires 0 < theta <= tau <= 1");
  if (!(Z >= 1.0 / theta))
    throw RangeViolation("lemma9_check requires Z >= 1/theta = " +
                         std::to_string(1.0 / theta));
  if (Z > win.T)
    throw HeightExceeded("lemma9_check: Z = " + std::to_string(Z) +
                         " exceeds the window height T = " + std::to_string(win.T));
  Lemma9Result r;

  // lhs: |c(theta,it)|^2 = 4 sin^2(kappa t)/t^2, so the two-sided integral of
  // |c|^2 Phi^2 is (2/tau) times the one-sided sine-kernel integral.
  const double kappa = 0.5 * std::log1p(theta);
  r.lhs = (2.0 / tau) * i_integral(win, X, tau, kappa, q).value;

  // rhs: Lorentzian cross terms integrate to (pi/2tau) w(tau(gamma-gamma')),
  // folded over signed ordinates exactly as in u_integral.
  const auto& g = win.positives;
  const auto m = static_cast<std::size_t>(
      std::upper_bound(g.begin(), g.end(), Z) - g.begin());
  const double lX = std::log(X);
  std::vector<Cx> d(m);
  for (std::size_t i = 0; i < m; ++i)
    d[i] = c_coeff(theta, Cx(0.5, g[i])) * std::polar(1.0, g[i] * lX);
  CompensatedSum acc;
  for (std::size_t i = 0; i < m; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < i; ++j) {
      row += 4.0 * ((d[i] * std::conj(d[j])).real() *
                        pair_weight(tau * (g[i] - g[j])) +
                    (d[i] * d[j]).real() * pair_weight(tau * (g[i] + g[j])));
    }
    row += 2.0 * std::norm(d[i]) +
           2.0 * (d[i] * d[i]).real() * pair_weight(2.0 * tau * g[i]);
    acc.add(row);
  }
  r.rhs = (kPi / (2.0 * tau)) * acc.value();

  const double l4t = std::pow(std::log(2.0 / theta), 4);
  const double l4z = std::pow(std::log(2.0 * Z), 4);
  r.err_scale = theta * theta * l4t / (tau * tau * tau) + l4z / (tau * tau * Z);
  return r;
}

}  // namespace pclab
