// Checks that need the full 100k-ordinate dataset (generated by the
// zetazeros tool; wired through the zeros_dataset ctest fixture). Everything
// here is gated on actually having that file, passed as --zeros=<path>.
#define DOCTEST_CONFIG_IMPLEMENT
#include <cmath>
#include <string>

#include "doctest.h"
#include "pclab/arith.hpp"
#include "pclab/explicitformula.hpp"
#include "pclab/paircorr.hpp"
#include "pclab/zerodata.hpp"

using namespace pclab;

namespace {

std::string g_zeros_path = "data/zeros_100k.txt";

const ZeroOrdinates& dataset() {
  static ZeroOrdinates z = load_zero_file(g_zeros_path);
  return z;
}

}  // namespace

TEST_CASE("dataset shape: 100k ordinates starting at the first zero") {
  const auto& z = dataset();
  REQUIRE(z.ordinates.size() == 100000);
  CHECK(z.ordinates[0] == doctest::Approx(14.134725).epsilon(1e-6));
  CHECK(z.height_max > 70000.0);
  CHECK(z.height_max < 80000.0);
}

TEST_CASE("zero counts track the smooth term across the dataset") {
  const auto& z = dataset();
  for (double t : {100.0, 1000.0, 10000.0, z.height_max}) {
    const double dev = rvm_deviation(z, t);
    CAPTURE(t);
    CHECK(dev >= -3.0);
    CHECK(dev <= 3.0);
  }
}

TEST_CASE("zero field at X = 1 peaks on a zero") {
  const auto& z = dataset();
  const SignedZeroWindow win = window(z, 5000.0);
  const PhiValue v = phi(win, 1.0, z.ordinates[0], 1.0);
  CHECK(v.value >= 0.9);
}

TEST_CASE("explicit-formula budget tightens with more zeros and primes") {
  const auto& z = dataset();
  const SignedZeroWindow win = window(z, 5000.0);
  const LambdaTable table = sieve_lambda(1000000);

  const auto at = [&](double zero_T, std::uint64_t prime_N) {
    return verify_lemma4(make_lemma4_params(50.0, 5.0, 0.5, zero_T, prime_N),
                         window(z, zero_T), table);
  };
  const Lemma4Report lo = at(2500.0, 100000);
  const Lemma4Report hi = at(5000.0, 1000000);
  CHECK(lo.gap <= lo.budget);
  CHECK(hi.gap <= hi.budget);
  CHECK(hi.budget < lo.budget);
  CHECK(hi.gap <= lo.budget);
  (void)win;
}

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a.rfind("--zeros=", 0) == 0) g_zeros_path = a.substr(8);
  }
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
