#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace pclab {

enum class ZeroOrigin { kRiemannFile, kPoissonModel, kPicketModel };

// Validated ascending positive zero ordinates.
struct ZeroOrdinates {
  std::vector<double> ordinates;
  double height_max = 0.0;
  ZeroOrigin origin = ZeroOrigin::kRiemannFile;
};

// Ordinates in (0, T]; consumers account for the mirrored -gamma copies
// analytically.
struct SignedZeroWindow {
  std::vector<double> positives;
  double T = 0.0;
};

// Parse a plain-text dataset: one decimal ordinate per line, '#' comments and
// blank lines allowed. Throws ParseError (with line number) on bad tokens,
// MalformedDataset on non-increasing or non-positive entries.
ZeroOrdinates parse_zero_file(std::istream& in);
ZeroOrdinates load_zero_file(const std::string& path);

// N_data(T) - [(T/2pi) log(T/(2pi e)) + 7/8]. Throws HeightExceeded unless
// 2 <= T <= height_max.
double rvm_deviation(const ZeroOrdinates& z, double T);

// All ordinates in (0, T], boundary included. Throws HeightExceeded if
// T > height_max or T <= 0.
SignedZeroWindow window(const ZeroOrdinates& z, double T);

enum class SynthModel { kPoisson, kPicket };

// Synthetic contrast datasets up to height T (T >= 20): picket places
// ordinates deterministically so the counting function tracks the smooth
// zero-count term; poisson draws exponential gaps at the local mean density,
// reproducibly from the seed.
ZeroOrdinates synth_zeros(SynthModel model, double T, std::uint64_t seed);

}  // namespace pclab
