#include "pclab/paircorr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pclab/errors.hpp"
#include "pclab/parallel.hpp"
#include "pclab/summation.hpp"

namespace pclab {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
}

double pair_weight(double u) { return 4.0 / (4.0 + u * u); }

FValue f_tau(const SignedZeroWindow& win, const PairCorrParams& p) {
  if (win.T != p.T) throw Error("f_tau: window height does not match parameters");
  if (!(p.tau > 0.0 && p.tau <= 1.0) || !(p.pair_tol >= 0.0 && p.pair_tol < 1.0))
    throw Error("f_tau: tau must be in (0,1], pair_tol in [0,1)");
  const auto& g = win.positives;
  const std::size_t n = g.size();
  FValue out;
  if (n == 0) return out;

  const double L = std::log(p.X);
  const double tau = p.tau;
  // w(tau*d) >= pair_tol exactly when |d| <= band.
  const double band = (p.pair_tol > 0.0)
                          ? (2.0 / tau) * std::sqrt(1.0 / p.pair_tol - 1.0)
                          : std::numeric_limits<double>::infinity();

  std::vector<double> c(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = std::cos(g[i] * L);
    s[i] = std::sin(g[i] * L);
  }

  // Row-block decomposition; fixed block size keeps the reduction identical
  // for any worker count.
  struct Slot {
    CompensatedSum sum;
    std::uint64_t exact = 0;
  };
  auto slots = map_blocks<Slot>(n, 1024, [&](std::uint64_t lo, std::uint64_t hi, Slot& slot) {
    for (std::size_t i = lo; i < hi; ++i) {
      const double gi = g[i], ci = c[i], si = s[i];
      // difference part, j < i with g[i] - g[j] <= band
      std::size_t jd = 0;
      if (std::isfinite(band))
        jd = static_cast<std::size_t>(
            std::lower_bound(g.begin(), g.begin() + i, gi - band) - g.begin());
      double acc_d = 0.0;
      for (std::size_t j = jd; j < i; ++j) {
        const double d = tau * (gi - g[j]);
        acc_d += (ci * c[j] + si * s[j]) * (4.0 / (4.0 + d * d));
      }
      // sum part, j <= i with g[i] + g[j] <= band
      std::size_t js = i + 1;
      if (std::isfinite(band))
        js = static_cast<std::size_t>(
            std::upper_bound(g.begin(), g.begin() + i + 1, band - gi) - g.begin());
      double acc_s = 0.0;
      const std::size_t js_off = std::min(js, i);
      for (std::size_t j = 0; j < js_off; ++j) {
        const double u = tau * (gi + g[j]);
        acc_s += (ci * c[j] - si * s[j]) * (4.0 / (4.0 + u * u));
      }
      slot.sum.add(4.0 * acc_d);
      slot.sum.add(4.0 * acc_s);
      slot.sum.add(2.0);  // diagonal difference pair, w(0) = 1
      slot.exact += 4 * (i - jd) + 4 * js_off + 2;
      if (js > i) {  // diagonal sum pair +gamma_i, -gamma_i in band
        const double u = 2.0 * tau * gi;
        slot.sum.add(2.0 * (ci * ci - si * si) * (4.0 / (4.0 + u * u)));
        slot.exact += 2;
      }
    }
  });

  CompensatedSum total;
  for (auto& sl : slots) {
    total.merge(sl.sum);
    out.pairs_exact += sl.exact;
  }
  out.value = total.value();
  out.pairs_skipped = 4 * static_cast<std::uint64_t>(n) * n - out.pairs_exact;
  out.truncation_bound = p.pair_tol * static_cast<double>(out.pairs_skipped);
  return out;
}

FValue f_montgomery(const SignedZeroWindow& win, double X, double pair_tol) {
  return f_tau(win, {X, win.T, 1.0, pair_tol});
}

PhiEvaluator::PhiEvaluator(const SignedZeroWindow& win, double X, double tau)
    : gam_(win.positives), T_(win.T), tau_(tau) {
  const double L = std::log(X);
  re_.resize(gam_.size());
  im_.resize(gam_.size());
  for (std::size_t i = 0; i < gam_.size(); ++i) {
    re_[i] = std::cos(gam_[i] * L);
    im_[i] = std::sin(gam_[i] * L);
  }
}

std::complex<double> PhiEvaluator::field(double t) const {
  double re = 0.0, im = 0.0;
  const double tau2 = tau_ * tau_;
  for (std::size_t i = 0; i < gam_.size(); ++i) {
    const double d1 = t - gam_[i], d2 = t + gam_[i];
    const double k1 = 1.0 / (1.0 + tau2 * d1 * d1);
    const double k2 = 1.0 / (1.0 + tau2 * d2 * d2);
    re += (k1 + k2) * re_[i];
    im += (k1 - k2) * im_[i];
  }
  return {re, im};
}

double PhiEvaluator::operator()(double t) const {
  const std::complex<double> v = field(t);
  return std::sqrt(v.real() * v.real() + v.imag() * v.imag());
}

double PhiEvaluator::tail_bound(double t) const {
  // Zeros above the window height contribute at most
  //   2 * (1/2pi tau^2) * int_a^inf log((v+c)/2pi) / v^2 dv
  // by the counting-function density, plus an allowance for the bounded
  // deviation of the actual counts from the smooth term.
  const double c = std::fabs(t);
  const double a = T_ - c;
  if (!(a >= 2.0) || T_ < 14.0)
    throw InsufficientHeight("phi: window height " + std::to_string(T_) +
                             " leaves no margin above |t| = " + std::to_string(c));
  const double lead = std::log(a + c) / a +
                      (c > 1e-9 ? std::log1p(c / a) / c : 1.0 / a);
  const double dens = (lead - std::log(kTwoPi) / a) / (kPi * tau_ * tau_);
  return dens + 12.0 / (tau_ * tau_ * a * a);
}

PhiValue phi(const SignedZeroWindow& win, double X, double t, double tau,
             double tail_tol) {
  PhiEvaluator ev(win, X, tau);
  PhiValue out;
  out.tail_bound = ev.tail_bound(t);
  if (out.tail_bound > tail_tol) {
    // Estimate the window height that would meet the tolerance.
    double a = win.T - std::fabs(t);
    for (int i = 0; i < 64 && (std::log(a + std::fabs(t)) + 1.0) /
                                      (kPi * tau * tau * a) > tail_tol;
         ++i)
      a *= 2.0;
    throw InsufficientHeight(
        "phi tail bound " + std::to_string(out.tail_bound) + " exceeds " +
        std::to_string(tail_tol) + "; need window height ~" +
        std::to_string(std::fabs(t) + a));
  }
  out.value = ev(t);
  return out;
}

Integral jcal(const SignedZeroWindow& win, double X, double T, double tau,
              const QuadratureSpec& q) {
  PhiEvaluator ev(win, X, tau);
  const double worst_tail = ev.tail_bound(T);  // throws if the margin is gone
  double phimax = 0.0;
  auto f = [&](double t) {
    const double v = ev(t);
    if (v > phimax) phimax = v;
    return v * v;
  };
  const int cells = static_cast<int>(std::min(4096.0, std::max(16.0, T)));
  Integral half = integrate(f, 0.0, T, q, cells);
  Integral out;
  out.value = 8.0 * tau * half.value;  // even integrand: [-T,T] = 2 x [0,T]
  out.quad_error = 8.0 * tau * half.quad_error;
  // Window-truncation bias of Phi^2, integrated.
  out.tail_bound = 8.0 * tau * T * (2.0 * phimax * worst_tail + worst_tail * worst_tail);
  return out;
}

IdentityPair residue_identity_check(double gamma, double gamma_p, double tau,
                                    const QuadratureSpec& q) {
  if (!(tau > 0.0 && tau <= 1.0))
    throw Error("residue check requires tau in (0,1]");
  const double tau2 = tau * tau;
  auto f = [&](double t) {
    const double d1 = t - gamma, d2 = t - gamma_p;
    return 1.0 / ((1.0 + tau2 * d1 * d1) * (1.0 + tau2 * d2 * d2));
  };
  // Beyond distance R from both centers the integrand is below 1/(tau R)^4.
  const double tol_tail = std::max(q.abs_tol, 1e-13) * 0.1;
  const double R = std::cbrt(2.0 / (3.0 * tau2 * tau2 * tol_tail));
  const double lo = std::min(gamma, gamma_p) - R;
  const double hi = std::max(gamma, gamma_p) + R;
  Integral I = integrate(f, lo, hi, q, 32);
  IdentityPair out;
  out.lhs = I.value;
  out.rhs = kPi / (2.0 * tau) * pair_weight(tau * (gamma - gamma_p));
  out.budget = I.quad_error + 2.0 / (3.0 * tau2 * tau2 * R * R * R);
  return out;
}

IdentityPair tauF_integral_check(const SignedZeroWindow& win, double X, double tau,
                                 const QuadratureSpec& q) {
  const auto& g = win.positives;
  if (g.empty()) throw Error("tauF check requires a nonempty window");
  FValue fv = f_tau(win, {X, win.T, tau, 0.0});
  IdentityPair out;
  out.rhs = tau * fv.value;

  const double L = std::log(X);
  const double n = static_cast<double>(g.size());
  const double bound0 = 4.0 * n * n * tau;  // integrand sup * kernel integral
  const double tol_tail =
      std::max(q.abs_tol, q.rel_tol * std::fabs(out.rhs)) * 0.1;
  const double V =
      std::max(3.0 * tau, 0.5 * tau * std::log(std::max(bound0 / tol_tail, 10.0)));
  auto f = [&](double v) {
    double csum = 0.0, comp = 0.0;
    for (double gam : g) {
      const double x = std::cos(gam * (L + v));
      const double t = csum + x;
      comp += (std::fabs(csum) >= std::fabs(x)) ? (csum - t) + x : (x - t) + csum;
      csum = t;
    }
    const double C = csum + comp;
    return 4.0 * C * C * std::exp(-2.0 * std::fabs(v) / tau);
  };
  // Half-wave initial cells: C^2 oscillates at up to twice the top ordinate.
  const int cells = static_cast<int>(
      std::min(60000.0, std::max(16.0, std::ceil(V * g.back() / kPi))));
  Integral left = integrate(f, -V, 0.0, q, cells);
  Integral right = integrate(f, 0.0, V, q, cells);
  out.lhs = left.value + right.value;
  out.budget = left.quad_error + right.quad_error +
               bound0 * std::exp(-2.0 * V / tau) + fv.truncation_bound * tau;
  return out;
}

namespace {

// Cached Montgomery-F evaluator over a fixed window: packed triangular
// weight tables make each F(u,T) grid node a streaming multiply-add pass.
class MontgomeryGrid {
 public:
  explicit MontgomeryGrid(const std::vector<double>& g) : g_(g) {
    const std::size_t n = g.size();
    wd_.resize(n * (n - 1) / 2);
    ws_.resize(n * (n - 1) / 2);
    wdiag_.resize(n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j, ++k) {
        const double d = g[i] - g[j], s = g[i] + g[j];
        wd_[k] = 4.0 / (4.0 + d * d);
        ws_[k] = 4.0 / (4.0 + s * s);
      }
      wdiag_[i] = 4.0 / (4.0 + 4.0 * g[i] * g[i]);
    }
    c_.resize(n);
    s_.resize(n);
  }

  // Amplitude mass of frequency components at or above omega; sampling on a
  // grid cannot represent them and their full amplitude is charged to the
  // alias budget.
  double alias_mass(double omega) const {
    CompensatedSum m;
    const std::size_t n = g_.size();
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j, ++k) {
        if (g_[i] - g_[j] >= omega) m.add(4.0 * wd_[k]);
        if (g_[i] + g_[j] >= omega) m.add(4.0 * ws_[k]);
      }
      if (2.0 * g_[i] >= omega) m.add(2.0 * wdiag_[i]);
    }
    return m.value();
  }

  double eval(double logu) {
    const std::size_t n = g_.size();
    for (std::size_t i = 0; i < n; ++i) {
      c_[i] = std::cos(g_[i] * logu);
      s_[i] = std::sin(g_[i] * logu);
    }
    CompensatedSum total;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double ci = c_[i], si = s_[i];
      double acc_d = 0.0, acc_s = 0.0;
      for (std::size_t j = 0; j < i; ++j, ++k) {
        const double cc = ci * c_[j], ss = si * s_[j];
        acc_d += (cc + ss) * wd_[k];
        acc_s += (cc - ss) * ws_[k];
      }
      total.add(4.0 * (acc_d + acc_s));
      total.add(2.0 + 2.0 * (ci * ci - si * si) * wdiag_[i]);
    }
    return total.value();
  }

 private:
  std::vector<double> g_, wd_, ws_, wdiag_, c_, s_;
};

// Composite Simpson over samples y_0..y_n (n even) with spacing h.
double simpson(const std::vector<double>& y, std::size_t from, std::size_t to,
               std::size_t stride, double h) {
  CompensatedSum s;
  s.add(y[from]);
  s.add(y[to]);
  bool odd = true;
  for (std::size_t i = from + stride; i < to; i += stride, odd = !odd)
    s.add((odd ? 4.0 : 2.0) * y[i]);
  return s.value() * (h * stride) / 3.0;
}

}  // namespace

IdentityPair hbg_identity_check(const ZeroOrdinates& Z, double X, double T,
                                double tau, const QuadratureSpec& q) {
  if (!(tau > 0.0 && tau <= 1.0)) throw Error("hbg check requires tau in (0,1]");
  SignedZeroWindow win = window(Z, T);
  const FValue lhs = f_tau(win, {X, T, tau, 0.0});
  const FValue fX = f_montgomery(win, X);
  IdentityPair out;
  out.lhs = lhs.value;
  if (tau == 1.0) {
    out.rhs = fX.value;
    out.budget = 0.0;
    return out;
  }
  if (win.positives.empty()) {
    out.rhs = 0.0;
    out.budget = 0.0;
    return out;
  }

  MontgomeryGrid grid(win.positives);
  const double coef = (tau * tau - 1.0) / (tau * tau * tau);
  const double F1 = f_montgomery(win, 1.0).value;  // sup over u of F(u,T)

  // Kernel-weighted integral over v = log(u/X): choose the cut V so the
  // discarded tail is a small fraction of the rhs scale.
  const double rhs_scale = std::fabs(fX.value) / (tau * tau) + 1.0;
  const double tol_tail =
      std::max(q.abs_tol, q.rel_tol * rhs_scale) * 0.25 / std::fabs(coef);
  double V = 0.5 * tau * std::log(std::max(F1 * tau / tol_tail, 10.0));
  constexpr double kH = 1e-3;
  const std::size_t nhalf = 4 * static_cast<std::size_t>(std::ceil(V / (4.0 * kH)));
  V = static_cast<double>(nhalf) * kH;

  const double L = std::log(X);
  std::vector<double> prod(2 * nhalf + 1);
  double fmin = 0.0;
  for (std::size_t k = 0; k <= 2 * nhalf; ++k) {
    const double v = (static_cast<double>(k) - static_cast<double>(nhalf)) * kH;
    const double F = grid.eval(L + v);
    if (F < fmin) fmin = F;
    prod[k] = F * std::exp(-2.0 * std::fabs(v) / tau);
  }
  if (fmin < -1e-8 * F1)
    throw Error("pair correlation turned negative on the grid: " + std::to_string(fmin));

  // Simpson per side (kernel has a kink at v = 0), with a half-resolution
  // pass for an empirical discretization estimate.
  const double I_h =
      simpson(prod, 0, nhalf, 1, kH) + simpson(prod, nhalf, 2 * nhalf, 1, kH);
  const double I_2h =
      simpson(prod, 0, nhalf, 2, kH) + simpson(prod, nhalf, 2 * nhalf, 2, kH);
  const double alias = grid.alias_mass(kPi / (2.0 * kH));

  out.rhs = fX.value / (tau * tau) + coef * I_h;
  out.budget = std::fabs(coef) * (std::fabs(I_h - I_2h) + alias * tau +
                                  F1 * tau * std::exp(-2.0 * V / tau));
  return out;
}

}  // namespace pclab
