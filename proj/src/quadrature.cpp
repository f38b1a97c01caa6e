#include "pclab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "pclab/errors.hpp"
#include "pclab/summation.hpp"

namespace pclab {

namespace {

// 15-point Kronrod nodes on [-1,1] and weights, with the embedded 7-point
// Gauss weights (QUADPACK dqk15 constants).
const double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
const double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
const double kWg[4] = {
    0.129484966168870, 0.279705391489277,
    0.381830050505119, 0.417959183673469};

struct PanelEval {
  double kronrod;
  double err;
};

PanelEval gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  double resk = kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) resk += kWgk[i] * (fv[i] + fv[14 - i]);
  for (int i = 0; i < 3; ++i) resg += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  PanelEval out;
  out.kronrod = resk * h;
  out.err = std::fabs((resk - resg) * h);
  if (!std::isfinite(out.kronrod))
    throw QuadratureFailure("non-finite integrand value in panel [" +
                            std::to_string(a) + ", " + std::to_string(b) + "]");
  return out;
}

struct Panel {
  double a, b, value, err;
  int depth;
};

// Worst-first ordering; ties broken on the left endpoint so the refinement
// sequence is deterministic.
struct PanelOrder {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.err != y.err) return x.err < y.err;
    return x.a > y.a;
  }
};

}  // namespace

Integral integrate(const std::function<double(double)>& f, double a, double b,
                   const QuadratureSpec& spec, int init_cells) {
  Integral out;
  if (a == b) return out;
  if (init_cells < 1) init_cells = 1;

  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
  double total = 0.0, total_err = 0.0;
  const double w = (b - a) / init_cells;
  for (int i = 0; i < init_cells; ++i) {
    const double pa = a + i * w;
    const double pb = (i + 1 == init_cells) ? b : a + (i + 1) * w;
    PanelEval e = gk15(f, pa, pb);
    heap.push({pa, pb, e.kronrod, e.err, 0});
    total += e.kronrod;
    total_err += e.err;
  }

  auto tol = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::fabs(total)); };

  while (total_err > tol()) {
    Panel worst = heap.top();
    if (worst.depth >= spec.max_panel_depth) {
      throw QuadratureFailure(
          "tolerance not reached: error " + std::to_string(total_err) +
          " > " + std::to_string(tol()) + " with panel depth exhausted near x=" +
          std::to_string(worst.a));
    }
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    PanelEval left = gk15(f, worst.a, m);
    PanelEval right = gk15(f, m, worst.b);
    total += left.kronrod + right.kronrod - worst.value;
    total_err += left.err + right.err - worst.err;
    heap.push({worst.a, m, left.kronrod, left.err, worst.depth + 1});
    heap.push({m, worst.b, right.kronrod, right.err, worst.depth + 1});
  }

  // Recombine leaves in position order with compensated summation so the
  // reported value does not depend on the refinement history bookkeeping.
  std::vector<Panel> leaves;
  leaves.reserve(heap.size());
  while (!heap.empty()) {
    leaves.push_back(heap.top());
    heap.pop();
  }
  std::sort(leaves.begin(), leaves.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  CompensatedSum v, e;
  for (const Panel& p : leaves) {
    v.add(p.value);
    e.add(p.err);
  }
  out.value = v.value();
  out.quad_error = e.value();
  return out;
}

}  // namespace pclab
