#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pclab/quadrature.hpp"

namespace pclab {

struct GridPoint {
  double X = 0.0;
  double T = 0.0;
  double tau = 0.0;
  double theta = 0.0;
};

// Plain-text run configuration: `key = value` lines under `[section]`
// headers. Sections: [inputs] (zeros, sieve_cache or sieve_n), [tolerances]
// (abs_tol, rel_tol, pair_tol), [asympt] (epsilon, M, lambda), and one
// [family:<tag>] section per experiment family with repeated
// `point = X, T, tau, theta` lines.
struct RunConfig {
  std::string zero_path;
  std::string sieve_cache_path;
  std::uint64_t sieve_n = 2000000;
  QuadratureSpec tolerances;
  double pair_tol = 1e-8;
  double epsilon = 0.05;
  double M = 3.0;
  double lambda = 10.0;
  std::vector<std::pair<std::string, GridPoint>> grid;  // in file order
};

RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

struct ReportRow {
  std::string family;
  GridPoint params;
  double computed = 0.0;
  double reference = 0.0;
  double ratio = 0.0;   // computed/reference when reference != 0
  double budget = 0.0;
  std::string status;   // pass | monitored | skipped | fail
};

// Evaluate every grid point of its family. Families: ftau, residue, tauf,
// hbg, lemma4, conjecture, j, sv, lemma9, lemma10 (see README for the
// meaning of each tuple slot). Rows are deterministic functions of the
// config and input files; points whose preconditions fail come back as
// skipped rows.
std::vector<ReportRow> run(const RunConfig& config);

// Exact schema: family,X,T,tau,theta,computed,reference,ratio,budget,status
// with 17-significant-digit decimals so values round-trip.
std::string emit_csv(const std::vector<ReportRow>& rows);

struct PlotSpec {
  std::string x_param = "X";  // X | T | tau | theta
  std::string title;
};

// Log-log ratio-vs-parameter polyline chart (SVG 1.1), one call per family.
std::string emit_svg(const std::vector<ReportRow>& rows, const PlotSpec& spec);

}  // namespace pclab
