#pragma once

#include <complex>

namespace pclab {

// Principal branch of log Gamma(z) for Re(z) > 0 (Stirling with recurrence
// shift; accurate to ~1e-14 relative).
std::complex<double> log_gamma(std::complex<double> z);

// Digamma psi(z) for Re(z) > 0.
std::complex<double> digamma(std::complex<double> z);

// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
double riemann_siegel_theta(double t);

// cot(pi z) evaluated without overflow for large |Im z|.
std::complex<double> cot_pi(std::complex<double> z);

}  // namespace pclab
