#include <cmath>
#include <sstream>

#include "doctest.h"
#include "pclab/errors.hpp"
#include "pclab/zerodata.hpp"
#include "pclab/zetazero.hpp"

using namespace pclab;

TEST_CASE("parse echoes well-formed input") {
  std::istringstream in("14.134725\n21.022040\n");
  auto z = parse_zero_file(in);
  REQUIRE(z.ordinates.size() == 2);
  CHECK(z.ordinates[0] == 14.134725);
  CHECK(z.ordinates[1] == 21.022040);
  CHECK(z.height_max == 21.022040);
  CHECK(z.origin == ZeroOrigin::kRiemannFile);
}

TEST_CASE("parse skips comments and blank lines") {
  std::istringstream in("# hdr\n\n  \n14.134725\n");
  auto z = parse_zero_file(in);
  REQUIRE(z.ordinates.size() == 1);
  CHECK(z.ordinates[0] == 14.134725);
}

TEST_CASE("parse rejects bad input") {
  std::istringstream nonmono("14.2\n14.1\n");
  CHECK_THROWS_AS(parse_zero_file(nonmono), MalformedDataset);
  std::istringstream nonpos("-3.0\n14.1\n");
  CHECK_THROWS_AS(parse_zero_file(nonpos), MalformedDataset);
  std::istringstream alpha("14.1\nzebra\n");
  CHECK_THROWS_WITH_AS(parse_zero_file(alpha), "line 2: not a number: 'zebra'", ParseError);
  std::istringstream empty("# only comments\n");
  CHECK_THROWS_AS(parse_zero_file(empty), MalformedDataset);
}

TEST_CASE("rvm deviation brackets and errors") {
  std::istringstream in("14.134725\n21.022040\n25.010858\n");
  auto z = parse_zero_file(in);
  // Just below the first zero: zero count, deviation = -(smooth term).
  const double t = 14.13;
  CHECK(rvm_deviation(z, t) == doctest::Approx(-smooth_zero_count(t)).epsilon(1e-12));
  CHECK(rvm_deviation(z, 25.010858) == doctest::Approx(3.0 - smooth_zero_count(25.010858)));
  CHECK_THROWS_AS(rvm_deviation(z, 26.0), HeightExceeded);
  CHECK_THROWS_AS(rvm_deviation(z, 1.0), HeightExceeded);
}

TEST_CASE("window semantics") {
  std::istringstream in("14.134725\n21.022040\n25.010858\n");
  auto z = parse_zero_file(in);
  auto w = window(z, 20.0);
  REQUIRE(w.positives.size() == 1);
  CHECK(w.positives[0] == 14.134725);
  // Closed boundary: an ordinate exactly at T is included.
  CHECK(window(z, 14.134725).positives.size() == 1);
  CHECK(window(z, 14.134724).positives.empty());
  CHECK(window(z, 1.0).positives.empty());
  CHECK_THROWS_AS(window(z, 25.2), HeightExceeded);
  CHECK_THROWS_AS(window(z, 0.0), HeightExceeded);
  // Monotone inclusion under widening, and re-windowing is idempotent.
  auto w1 = window(z, 21.5), w2 = window(z, 25.010858);
  CHECK(std::includes(w2.positives.begin(), w2.positives.end(),
                      w1.positives.begin(), w1.positives.end()));
  std::istringstream again("14.134725\n21.022040\n");
  auto zz = parse_zero_file(again);
  auto ww = window(zz, 21.0);
  CHECK(ww.positives == window(zz, 21.0).positives);
}

TEST_CASE("picket model tracks the smooth count") {
  auto z = synth_zeros(SynthModel::kPicket, 100.0, 0);
  CHECK(z.origin == ZeroOrigin::kPicketModel);
  // Smooth count at T = 100 is about 29.006.
  CHECK(z.ordinates.size() >= 28);
  CHECK(z.ordinates.size() <= 30);
  for (double T = 25.0; T <= 100.0; T += 7.3)
    CHECK(std::fabs(rvm_deviation(z, T)) <= 1.0);
}

TEST_CASE("poisson model is reproducible and concentrated") {
  auto a = synth_zeros(SynthModel::kPoisson, 1e4, 42);
  auto b = synth_zeros(SynthModel::kPoisson, 1e4, 42);
  CHECK(a.ordinates == b.ordinates);
  CHECK(a.origin == ZeroOrigin::kPoissonModel);
  auto c = synth_zeros(SynthModel::kPoisson, 1e4, 43);
  CHECK(a.ordinates != c.ordinates);
  const double n = static_cast<double>(a.ordinates.size());
  const double expected = smooth_zero_count(1e4);
  CHECK(std::fabs(n - expected) <= 5.0 * std::sqrt(expected));
}
