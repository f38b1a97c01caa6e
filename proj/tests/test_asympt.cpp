#include "pclab/asympt.hpp"

#include <cmath>

#include "doctest.h"
#include "pclab/errors.hpp"

using namespace pclab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("theorem-1 error term is the geometric mean of the main terms") {
  // err^2 = pi^2 main1 main2 is exact algebra; check it across scales.
  for (double X : {2.0, 50.0, 1e4})
    for (double T : {100.0, 5e4})
      for (double tau : {0.25, 0.8, 1.0})
        for (double S : {0.1, 3.0}) {
          const Thm1Prediction p = thm1_prediction(X, T, tau, S);
          CHECK(p.main1 > 0.0);
          CHECK(p.main2 > 0.0);
          const double want = kPi * kPi * p.main1 * p.main2;
          CHECK(p.err_scale * p.err_scale ==
                doctest::Approx(want).epsilon(1e-12));
        }
}

TEST_CASE("theorem-1 prediction shapes") {
  // Large X at tau = 1: the secondary term vanishes against the first.
  const Thm1Prediction big = thm1_prediction(1e6, 1e4, 1.0, std::log(1e6));
  CHECK(big.main2 / big.main1 < 1e-9);
  CHECK(big.main1 == doctest::Approx((1e4 / kPi) * std::log(1e6)));

  // X = 1: the secondary term carries the full T log^2 T / (pi tau) weight.
  const Thm1Prediction unit = thm1_prediction(1.0, 1e4, 0.5, 1e-6);
  const double lt = std::log(1e4);
  CHECK(unit.main2 == doctest::Approx(1e4 * lt * lt / (kPi * 0.5)));

  // Monotone in T for fixed X, tau, S.
  const Thm1Prediction lo = thm1_prediction(50.0, 1e3, 0.8, 2.0);
  const Thm1Prediction hi = thm1_prediction(50.0, 2e3, 0.8, 2.0);
  CHECK(hi.main1 > lo.main1);
  CHECK(hi.main2 > lo.main2);
  CHECK(hi.main1 + hi.main2 > lo.main1 + lo.main2);
}

TEST_CASE("growth conditions") {
  // T = 1e6, X = 1e3, tau = 1, S ~ log X: comfortably satisfied.
  const double S = std::log(1e3);
  const ConditionReport r = conditions(1e3, 1e6, 1.0, S, S);
  CHECK(r.r12 == doctest::Approx(1e6 * S / 1e3));
  CHECK(r.r12 > 1e3);
  CHECK(r.satisfied(10.0));

  // X overwhelming T: the first ratio collapses below 1.
  const ConditionReport bad = conditions(1e9, 1e3, 1.0, S, S);
  CHECK(bad.r12 < 1.0);
  CHECK_FALSE(bad.satisfied(10.0));

  // All ratios positive and finite at a generic point.
  const ConditionReport g = conditions(50.0, 2000.0, 0.8, 1.7, 2.9);
  for (double v : {g.r12, g.r13, g.r14a, g.r14b, g.r14c}) {
    CHECK(v > 0.0);
    CHECK(std::isfinite(v));
  }
}

TEST_CASE("conjecture applicability and symmetry") {
  const ConjectureParams cp;  // M = 3, epsilon = 0.05

  // X = T: always applicable once tau clears the floor.
  const ConjectureValue sq = conjecture_prediction(5000.0, 5000.0, 0.9, cp);
  CHECK(sq.applicable);
  CHECK(sq.value == doctest::Approx((5000.0 / kPi) * std::log(5000.0)));

  // X = 1e5 against T = 5000 under M = 3: within the cap.
  const ConjectureValue in = conjecture_prediction(1e5, 5000.0, 0.9, cp);
  CHECK(in.applicable);
  CHECK(in.value == doctest::Approx((5000.0 / kPi) * std::log(5000.0)));

  // X = T^{M+1}: cap violated.
  const ConjectureValue out =
      conjecture_prediction(std::pow(5000.0, 4.0), 5000.0, 0.9, cp);
  CHECK_FALSE(out.applicable);

  // tau below the floor H^{-1+eps}.
  const ConjectureValue slow = conjecture_prediction(1e5, 5000.0, 1e-5, cp);
  CHECK_FALSE(slow.applicable);

  // The value depends only on {min, max}: swap symmetry of applicability and
  // of log H (the T/pi factor tracks the T argument).
  const ConjectureValue a = conjecture_prediction(300.0, 9000.0, 0.9, cp);
  const ConjectureValue b = conjecture_prediction(9000.0, 300.0, 0.9, cp);
  CHECK(a.applicable == b.applicable);
  CHECK(a.value / 9000.0 == doctest::Approx(b.value / 300.0).epsilon(1e-14));
}

TEST_CASE("corollary ratio") {
  const double T = 70000.0, X = std::sqrt(T);
  const double self = (T / kPi) * std::log(X);
  CHECK(corollary_ratio(self, X, T, 0.05) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(corollary_ratio(1.0, 1.2, T, 0.05), RangeViolation);
  CHECK_THROWS_AS(corollary_ratio(1.0, T, T, 0.05), RangeViolation);
}

TEST_CASE("short-interval ratio is the plain quotient") {
  CHECK(s_asymptotic_ratio(2.0, std::exp(4.0), 0.5) ==
        doctest::Approx(1.0).epsilon(1e-14));
}
