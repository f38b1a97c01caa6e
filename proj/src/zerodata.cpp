#include "pclab/zerodata.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "pclab/errors.hpp"
#include "pclab/zetazero.hpp"

namespace pclab {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

void validate_ascending(const std::vector<double>& v) {
  double prev = 0.0;
  for (double g : v) {
    if (!(g > prev))
      throw MalformedDataset("ordinates must be strictly increasing and positive (offender: " +
                             std::to_string(g) + " after " + std::to_string(prev) + ")");
    prev = g;
  }
}

}  // namespace

ZeroOrdinates parse_zero_file(std::istream& in) {
  ZeroOrdinates z;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    const char* begin = line.c_str() + i;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin)
      throw ParseError("line " + std::to_string(lineno) + ": not a number: '" + line + "'");
    while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
    if (*end != '\0')
      throw ParseError("line " + std::to_string(lineno) + ": trailing garbage: '" + line + "'");
    z.ordinates.push_back(v);
  }
  validate_ascending(z.ordinates);
  if (z.ordinates.empty()) throw MalformedDataset("empty ordinate file");
  z.height_max = z.ordinates.back();
  z.origin = ZeroOrigin::kRiemannFile;
  return z;
}

ZeroOrdinates load_zero_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open ordinate file: " + path);
  return parse_zero_file(f);
}

double rvm_deviation(const ZeroOrdinates& z, double T) {
  if (!(T >= 2.0 && T <= z.height_max))
    throw HeightExceeded("rvm_deviation: T = " + std::to_string(T) +
                         " outside [2, " + std::to_string(z.height_max) + "]");
  const auto it = std::upper_bound(z.ordinates.begin(), z.ordinates.end(), T);
  const double count = static_cast<double>(it - z.ordinates.begin());
  return count - smooth_zero_count(T);
}

SignedZeroWindow window(const ZeroOrdinates& z, double T) {
  if (!(T > 0.0) || T > z.height_max)
    throw HeightExceeded("window: T = " + std::to_string(T) + " outside (0, " +
                         std::to_string(z.height_max) + "]");
  SignedZeroWindow w;
  w.T = T;
  const auto it = std::upper_bound(z.ordinates.begin(), z.ordinates.end(), T);
  w.positives.assign(z.ordinates.begin(), it);
  return w;
}

ZeroOrdinates synth_zeros(SynthModel model, double T, std::uint64_t seed) {
  if (!(T >= 20.0)) throw Error("synth_zeros requires T >= 20");
  ZeroOrdinates z;
  if (model == SynthModel::kPicket) {
    // Invert the smooth counting term at integer heights by Newton steps.
    double t = 18.0;
    for (std::size_t k = 1;; ++k) {
      const double target = static_cast<double>(k);
      for (int it = 0; it < 60; ++it) {
        const double f = smooth_zero_count(t) - target;
        const double d = std::log(t / kTwoPi) / kTwoPi;
        const double step = f / d;
        t -= step;
        if (t < 7.0) t = 7.0;
        if (std::fabs(step) < 1e-12 * t) break;
      }
      if (t > T) break;
      z.ordinates.push_back(t);
      t += kTwoPi / std::log(t / kTwoPi);  // warm start near the next one
    }
    z.origin = ZeroOrigin::kPicketModel;
  } else {
    // Exponential gaps at the local mean density (1/2pi) log(t/2pi).
    // Uniform variates are mapped explicitly from the generator words so the
    // stream is reproducible across platforms.
    std::mt19937_64 rng(seed);
    auto uniform = [&rng] {
      return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    double t = 14.0;
    while (true) {
      const double density = std::log(std::max(t, 15.0) / kTwoPi) / kTwoPi;
      const double gap = -std::log1p(-uniform()) / density;
      t += gap;
      if (t > T) break;
      z.ordinates.push_back(t);
    }
    z.origin = ZeroOrigin::kPoissonModel;
  }
  if (z.ordinates.empty())
    throw Error("synth_zeros produced no ordinates below T");
  validate_ascending(z.ordinates);
  z.height_max = z.ordinates.back();
  return z;
}

}  // namespace pclab
