#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace pclab {

// Hardy Z function Z(t) = e^{i theta(t)} zeta(1/2 + it); real-valued with the
// same zeros as zeta on the critical line.
double hardy_z(double t);

// Euler-Maclaurin evaluation; accurate to ~1e-8 absolute for 0 < t <= 7000
// (cost grows linearly with t).
double hardy_z_euler_maclaurin(double t);

// Riemann-Siegel evaluation with the leading correction term; error decays
// like (t/2pi)^{-3/4}, usable above t ~ 1000.
double hardy_z_riemann_siegel(double t);

// Smooth term of the zero-counting function:
// (t/2pi) log(t/(2pi e)) + 7/8.
double smooth_zero_count(double t);

// Locate the first `count` zeros of Z(t) on t > 0, in increasing order.
// Deterministic: fixed scan grid with sign-change bracketing, escalating
// rescans for suspiciously wide gaps (close pairs), then bracketed root
// polishing. `progress`, when set, is called with (zeros found, current t).
std::vector<double> find_zeros(
    std::size_t count,
    const std::function<void(std::size_t, double)>& progress = {});

}  // namespace pclab
