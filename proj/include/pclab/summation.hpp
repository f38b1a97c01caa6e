#pragma once

#include <cmath>

namespace pclab {

// Neumaier's variant of Kahan compensated summation: tracks the low-order
// bits lost at every add. All reductions that feed an identity check go
// through this, so blocked-parallel and serial runs produce the same digits.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double x) : sum_(x) {}

  void add(double x) {
    double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;  // low bits of x were lost
    else
      comp_ += (x - t) + sum_;  // low bits of sum_ were lost
    sum_ = t;
  }

  // Merging block partials: feed both the sum and its compensation through.
  void merge(const CompensatedSum& o) {
    add(o.sum_);
    add(o.comp_);
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace pclab
