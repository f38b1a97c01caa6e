#include "pclab/zetazero.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "pclab/errors.hpp"
#include "pclab/special.hpp"

namespace pclab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kEmRsSwitch = 6000.0;

using cplx = std::complex<double>;

// log n and 1/sqrt(n) memo shared by both evaluators.
const std::vector<double>& log_table(std::size_t n) {
  static std::vector<double> logs{0.0, 0.0};
  while (logs.size() <= n) logs.push_back(std::log(static_cast<double>(logs.size())));
  return logs;
}
const std::vector<double>& rsqrt_table(std::size_t n) {
  static std::vector<double> rs{0.0, 1.0};
  while (rs.size() <= n) rs.push_back(1.0 / std::sqrt(static_cast<double>(rs.size())));
  return rs;
}

// B_{2k} / (2k)! for the Euler-Maclaurin correction terms, k = 1..8.
const double kEmCoef[] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
};

// zeta(s) on the critical line by Euler-Maclaurin with N ~ 3 t / 2pi terms,
// which keeps the k-th correction decaying like 3^{-2k}.
cplx zeta_euler_maclaurin(cplx s) {
  const double t = std::abs(s.imag());
  const std::size_t n_terms =
      static_cast<std::size_t>(std::ceil(3.0 * t / kTwoPi)) + 30;
  const auto& logs = log_table(n_terms);
  const auto& rs = rsqrt_table(n_terms);

  // sum_{n<=N} n^{-s} with s = sigma + it: n^{-sigma} cis(-t log n).
  const double sigma = s.real();
  double re = 0.0, im = 0.0, re_c = 0.0, im_c = 0.0;
  for (std::size_t n = 1; n <= n_terms; ++n) {
    const double mag = (sigma == 0.5) ? rs[n] : std::pow(static_cast<double>(n), -sigma);
    const double ph = -t * logs[n];
    const double x = mag * std::cos(ph);
    const double y = mag * std::sin(ph);
    // Neumaier accumulation, inlined for the hot loop.
    double tr = re + x;
    re_c += (std::fabs(re) >= std::fabs(x)) ? (re - tr) + x : (x - tr) + re;
    re = tr;
    double ti = im + y;
    im_c += (std::fabs(im) >= std::fabs(y)) ? (im - ti) + y : (y - ti) + im;
    im = ti;
  }
  cplx sum(re + re_c, im + im_c);
  if (s.imag() < 0) sum = std::conj(sum);  // table built for t >= 0

  const double nn = static_cast<double>(n_terms);
  const cplx n_pow_ms = std::exp(-s * std::log(nn));  // N^{-s}
  cplx total = sum + nn * n_pow_ms / (s - 1.0) - 0.5 * n_pow_ms;

  // Correction terms: coef_k * prod_{j=0}^{2k-2}(s+j) * N^{-s-2k+1}.
  cplx prod = s;
  cplx npow = n_pow_ms / nn;  // N^{-s-1}
  const double inv_n2 = 1.0 / (nn * nn);
  for (int k = 0; k < 8; ++k) {
    if (k > 0) {
      prod *= (s + cplx(2.0 * k - 1.0)) * (s + cplx(2.0 * k));
      npow *= inv_n2;
    }
    total += kEmCoef[k] * prod * npow;
  }
  return total;
}

// Leading Riemann-Siegel remainder coefficient
// Psi(p) = cos(2pi(p^2 - p - 1/16)) / cos(2pi p), written in removable-
// singularity form near p = 1/4 and p = 3/4.
double rs_psi(double p) {
  if (std::fabs(p - 0.25) < 0.05) {
    const double u = p - 0.25;
    if (u == 0.0) return 0.5;
    return std::sin(kPi * u - kTwoPi * u * u) / std::sin(kTwoPi * u);
  }
  if (std::fabs(p - 0.75) < 0.05) {
    const double v = p - 0.75;
    if (v == 0.0) return 0.5;
    return std::sin(kTwoPi * v * v + kPi * v) / std::sin(kTwoPi * v);
  }
  return std::cos(kTwoPi * (p * p - p - 0.0625)) / std::cos(kTwoPi * p);
}

}  // namespace

double smooth_zero_count(double t) {
  return t / kTwoPi * std::log(t / (kTwoPi * 2.71828182845904523536)) + 0.875;
}

double hardy_z_euler_maclaurin(double t) {
  const cplx z = zeta_euler_maclaurin(cplx(0.5, t));
  const double th = riemann_siegel_theta(t);
  return (std::polar(1.0, th) * z).real();
}

double hardy_z_riemann_siegel(double t) {
  const double a = std::sqrt(t / kTwoPi);
  const std::size_t m = static_cast<std::size_t>(std::floor(a));
  const double p = a - static_cast<double>(m);
  const double th = riemann_siegel_theta(t);
  const auto& logs = log_table(m);
  const auto& rs = rsqrt_table(m);
  double sum = 0.0, comp = 0.0;
  for (std::size_t n = 1; n <= m; ++n) {
    const double x = rs[n] * std::cos(th - t * logs[n]);
    const double s = sum + x;
    comp += (std::fabs(sum) >= std::fabs(x)) ? (sum - s) + x : (x - s) + sum;
    sum = s;
  }
  double z = 2.0 * (sum + comp);
  const double corr = ((m % 2 == 1) ? 1.0 : -1.0) * std::pow(t / kTwoPi, -0.25) * rs_psi(p);
  return z + corr;
}

double hardy_z(double t) {
  return (t <= kEmRsSwitch) ? hardy_z_euler_maclaurin(t)
                            : hardy_z_riemann_siegel(t);
}

namespace {

// Local mean zero gap 2pi / log(t/2pi), floored near the origin.
double mean_gap(double t) {
  return kTwoPi / std::max(std::log(t / kTwoPi), 0.7);
}

// Polish a sign-change bracket [a,b] (za*zb < 0) by bisection with secant
// acceleration; returns the root of the computed Z.
double refine_zero(double a, double b, double za, double zb) {
  for (int it = 0; it < 80; ++it) {
    // Secant proposal, clipped to the bracket interior; fall back to midpoint.
    double m = (za != zb) ? (a - za * (b - a) / (zb - za)) : 0.5 * (a + b);
    const double lo = a + 0.05 * (b - a), hi = b - 0.05 * (b - a);
    if (!(m > lo && m < hi)) m = 0.5 * (a + b);
    const double zm = hardy_z(m);
    if (zm == 0.0) return m;
    if ((za < 0) == (zm < 0)) {
      a = m;
      za = zm;
    } else {
      b = m;
      zb = zm;
    }
    if (b - a < 1e-11 * std::max(1.0, a)) break;
  }
  return a - za * (b - a) / (zb - za);
}

// Scan [t0, t1] with the given step; append refined roots of sign changes
// strictly inside the interval.
void scan_interval(double t0, double t1, double step, std::vector<double>& out) {
  double prev_t = t0;
  double prev_z = hardy_z(prev_t);
  while (prev_t < t1) {
    const double cur_t = std::min(prev_t + step, t1);
    const double cur_z = hardy_z(cur_t);
    if ((prev_z < 0) != (cur_z < 0)) {
      out.push_back(refine_zero(prev_t, cur_t, prev_z, cur_z));
    }
    prev_t = cur_t;
    prev_z = cur_z;
    if (cur_t >= t1) break;
  }
}

}  // namespace

std::vector<double> find_zeros(
    std::size_t count, const std::function<void(std::size_t, double)>& progress) {
  std::vector<double> zeros;
  zeros.reserve(count + 64);

  // Primary scan at one eighth of the local mean gap, until a safety margin
  // beyond the requested count (rescans below may insert missed close pairs).
  const std::size_t target = count + 16;
  double t = 10.0;
  double z = hardy_z(t);
  std::size_t since_progress = 0;
  while (zeros.size() < target) {
    const double step = mean_gap(t) / 8.0;
    const double tn = t + step;
    const double zn = hardy_z(tn);
    if ((z < 0) != (zn < 0)) {
      zeros.push_back(refine_zero(t, tn, z, zn));
      if (progress && ++since_progress >= 2000) {
        since_progress = 0;
        progress(zeros.size(), tn);
      }
    }
    t = tn;
    z = zn;
  }

  // Recovery: a pair of zeros closer than the scan step hides between two
  // found zeros and shows up as a wide gap there. Rescan wide gaps at a
  // sixteenth of the step, escalating while the local count stays short of
  // the theta-based expectation.
  for (int level = 1; level <= 3; ++level) {
    const double fine = std::pow(16.0, level);
    std::vector<double> inserted;
    for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
      const double a = zeros[i], b = zeros[i + 1];
      const double gap = b - a;
      const double local = mean_gap(0.5 * (a + b));
      // Expected zeros strictly inside (a, b): theta increases by ~pi per
      // zero. Wide-but-genuine gaps have small expectation and stop
      // escalating after one clean rescan.
      const double expect =
          (riemann_siegel_theta(b) - riemann_siegel_theta(a)) / kPi - 1.0;
      const bool wide = gap > 1.7 * local;
      const bool deficit = expect > 1.6;
      if ((level == 1 && wide) || (level > 1 && deficit)) {
        std::vector<double> extra;
        scan_interval(a + 1e-9, b - 1e-9, local / (8.0 * fine), extra);
        for (double r : extra) inserted.push_back(r);
      }
    }
    if (!inserted.empty()) {
      zeros.insert(zeros.end(), inserted.begin(), inserted.end());
      std::sort(zeros.begin(), zeros.end());
      zeros.erase(std::unique(zeros.begin(), zeros.end(),
                              [](double x, double y) { return std::fabs(x - y) < 1e-8; }),
                  zeros.end());
    }
  }

  if (zeros.size() < count)
    throw Error("zero scan terminated with " + std::to_string(zeros.size()) +
                " zeros, wanted " + std::to_string(count));
  zeros.resize(count);
  if (progress) progress(zeros.size(), zeros.back());
  return zeros;
}

}  // namespace pclab
