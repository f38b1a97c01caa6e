#include "pclab/special.hpp"

#include <cmath>

namespace pclab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2Pi = 1.8378770664093454836;

// B_{2k} / (2k (2k-1)) for the Stirling series of log Gamma.
const double kStirling[] = {
    1.0 / 12.0,        -1.0 / 360.0,      1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,      -691.0 / 360360.0, 1.0 / 156.0,   -3617.0 / 122400.0,
};

// B_{2k} for the digamma asymptotic series.
const double kBern[] = {
    1.0 / 6.0,  -1.0 / 30.0,      1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0,  7.0 / 6.0,  -3617.0 / 510.0,
};

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  // Shift until |z| is comfortably in the asymptotic regime.
  std::complex<double> shift = 0.0;
  while (std::abs(z) < 12.0) {
    shift -= std::log(z);
    z += 1.0;
  }
  std::complex<double> r = (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi;
  const std::complex<double> z2 = z * z;
  std::complex<double> zp = z;
  for (double c : kStirling) {
    r += c / zp;
    zp *= z2;
  }
  return r + shift;
}

std::complex<double> digamma(std::complex<double> z) {
  std::complex<double> shift = 0.0;
  while (std::abs(z) < 12.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  std::complex<double> r = std::log(z) - 0.5 / z;
  const std::complex<double> z2 = z * z;
  std::complex<double> zp = z2;
  int k = 1;
  for (double b : kBern) {
    r -= b / (2.0 * k * zp);
    zp *= z2;
    ++k;
  }
  return r + shift;
}

double riemann_siegel_theta(double t) {
  const std::complex<double> lg = log_gamma({0.25, 0.5 * t});
  return lg.imag() - 0.5 * t * std::log(kPi);
}

std::complex<double> cot_pi(std::complex<double> z) {
  const std::complex<double> w = kPi * z;
  const double y = w.imag();
  const std::complex<double> i(0.0, 1.0);
  // cot w = -i (1 + 2 e^{2iw} / (1 - e^{2iw})); for large |Im w| the
  // exponential is tiny and the direct form would overflow.
  if (y > 20.0) {
    const std::complex<double> e = std::exp(2.0 * i * w);
    return -i * (1.0 + e) / (1.0 - e);
  }
  if (y < -20.0) {
    const std::complex<double> e = std::exp(-2.0 * i * w);
    return i * (1.0 + e) / (1.0 - e);
  }
  return std::cos(w) / std::sin(w);
}

}  // namespace pclab
