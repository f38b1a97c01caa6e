#pragma once

#include <functional>

namespace pclab {

// Tolerances and limits for the adaptive integrator. Improper integrals are
// cut where the integrand's analytic bound drops below tail_fraction*abs_tol;
// the analytic tail integral is then carried in the result's tail_bound, so
// every value travels with a certified budget.
struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_panel_depth = 48;
  double tail_fraction = 0.1;
};

struct Integral {
  double value = 0.0;
  double quad_error = 0.0;  // Gauss-Kronrod error estimate, summed over panels
  double tail_bound = 0.0;  // analytic bound on whatever was cut off
  double budget() const { return quad_error + tail_bound; }
};

// Adaptive Gauss-Kronrod 7/15 over [a, b]. init_cells pre-splits the range
// so oscillatory integrands are sampled below their period before the error
// estimator is trusted (a single K15 panel across many cycles can look
// deceptively converged). Throws QuadratureFailure when the tolerance cannot
// be met within max_panel_depth.
Integral integrate(const std::function<double(double)>& f, double a, double b,
                   const QuadratureSpec& spec, int init_cells = 1);

}  // namespace pclab
