// Command-line front end for the pair-correlation laboratory. One binary,
// nested subcommands: dataset utilities (zeros ...), sieve utilities
// (arith ...), one-off family evaluations that emit ReportRow CSV on stdout
// (pc / explicit / asympt / si ...), and the config-driven `run` driver that
// writes per-family CSV and SVG reports into an output directory.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pclab/arith.hpp"
#include "pclab/errors.hpp"
#include "pclab/report.hpp"
#include "pclab/zerodata.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// Evaluate a single (family, point) through the report pipeline so one-off
// CLI calls produce exactly the rows `pclab run` would.
void emit_single(const std::string& family, pclab::GridPoint g,
                 const std::string& zeros, const std::string& sieve,
                 double sieve_n, double pair_tol) {
  pclab::RunConfig cfg;
  cfg.zero_path = zeros;
  cfg.sieve_cache_path = sieve;
  cfg.sieve_n = static_cast<std::uint64_t>(sieve_n);
  if (pair_tol >= 0.0) cfg.pair_tol = pair_tol;
  cfg.grid.emplace_back(family, g);
  std::fputs(pclab::emit_csv(pclab::run(cfg)).c_str(), stdout);
}

// Axis for the per-family SVG: the first parameter that actually varies
// across the family's rows.
std::string pick_x_param(const std::vector<pclab::ReportRow>& rows) {
  const struct {
    const char* name;
    double pclab::GridPoint::*field;
  } axes[] = {{"X", &pclab::GridPoint::X},
              {"T", &pclab::GridPoint::T},
              {"tau", &pclab::GridPoint::tau},
              {"theta", &pclab::GridPoint::theta}};
  for (const auto& ax : axes) {
    double lo = rows.front().params.*ax.field;
    double hi = lo;
    for (const auto& r : rows) {
      lo = std::min(lo, r.params.*ax.field);
      hi = std::max(hi, r.params.*ax.field);
    }
    if (hi > lo) return ax.name;
  }
  return "X";
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw pclab::Error("cannot open " + path.string() + " for writing");
  f << body;
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
  const auto cfg = pclab::load_config(config_path);
  const auto rows = pclab::run(cfg);

  std::vector<std::string> order;
  std::map<std::string, std::vector<pclab::ReportRow>> by_family;
  for (const auto& r : rows) {
    if (!by_family.count(r.family)) order.push_back(r.family);
    by_family[r.family].push_back(r);
  }

  std::filesystem::create_directories(out_dir);
  std::size_t fails = 0;
  for (const auto& fam : order) {
    const auto& sub = by_family[fam];
    write_file(std::filesystem::path(out_dir) / (fam + ".csv"),
               pclab::emit_csv(sub));
    write_file(std::filesystem::path(out_dir) / (fam + ".svg"),
               pclab::emit_svg(sub, {pick_x_param(sub), fam}));
    std::size_t pass = 0, mon = 0, skip = 0, fail = 0;
    for (const auto& r : sub) {
      if (r.status == "pass") ++pass;
      else if (r.status == "monitored") ++mon;
      else if (r.status == "skipped") ++skip;
      else ++fail;
    }
    fails += fail;
    std::fprintf(stderr,
                 "%s: %zu rows (%zu pass, %zu monitored, %zu skipped, %zu "
                 "fail) -> %s/%s.{csv,svg}\n",
                 fam.c_str(), sub.size(), pass, mon, skip, fail,
                 out_dir.c_str(), fam.c_str());
  }
  return fails ? 1 : 0;
}

void cmd_zeros_validate(const std::string& path, const std::string& grid) {
  const auto z = pclab::load_zero_file(path);
  std::printf("count = %zu\n", z.ordinates.size());
  std::printf("height_max = %.9f\n", z.height_max);

  std::vector<double> heights;
  if (!grid.empty()) {
    std::size_t pos = 0;
    while (pos < grid.size()) {
      const std::size_t comma = grid.find(',', pos);
      const std::string tok =
          grid.substr(pos, comma == std::string::npos ? comma : comma - pos);
      heights.push_back(std::stod(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    for (double frac : {0.25, 0.5, 0.75, 1.0})
      if (frac * z.height_max >= 2.0) heights.push_back(frac * z.height_max);
  }
  for (double t : heights) {
    try {
      std::printf("deviation at T = %-12.6g %+.6f\n", t,
                  pclab::rvm_deviation(z, t));
    } catch (const pclab::Error& e) {
      std::printf("deviation at T = %-12.6g unavailable (%s)\n", t, e.what());
    }
  }
}

void cmd_zeros_synth(const std::string& model, double T, std::uint64_t seed,
                     const std::string& out) {
  const auto m = model == "poisson" ? pclab::SynthModel::kPoisson
                                    : pclab::SynthModel::kPicket;
  const auto z = pclab::synth_zeros(m, T, seed);
  std::ofstream f(out);
  if (!f) throw pclab::Error("cannot open " + out + " for writing");
  char buf[64];
  std::snprintf(buf, sizeof buf, "# synthetic ordinates: model=%s T=%g seed=%llu\n",
                model.c_str(), T, static_cast<unsigned long long>(seed));
  f << buf;
  for (double g : z.ordinates) {
    std::snprintf(buf, sizeof buf, "%.9f\n", g);
    f << buf;
  }
  std::fprintf(stderr, "wrote %zu ordinates up to %.3f to %s\n",
               z.ordinates.size(), z.height_max, out.c_str());
}

void cmd_arith_sieve(double N, const std::string& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto table = pclab::sieve_lambda(static_cast<std::uint64_t>(N));
  std::fprintf(stderr, "sieved to %llu: %zu prime powers in %.2f s\n",
               static_cast<unsigned long long>(table.range_end),
               table.n.size(), seconds_since(start));
  pclab::save_lambda_cache(table, out);
  std::fprintf(stderr, "wrote %s\n", out.c_str());
}

void cmd_arith_s(double X, double tau, const std::string& sieve, double N,
                 double tail_tol, bool tilde) {
  const auto table = sieve.empty()
                         ? pclab::sieve_lambda(static_cast<std::uint64_t>(N))
                         : pclab::load_lambda_cache(sieve);
  const pclab::SWeightParams params{X, tau, tail_tol};
  const auto s = tilde ? pclab::s_tilde(params, table) : pclab::s_sum(params, table);
  std::printf("%s(X=%g, tau=%g) = %.17g   (tail <= %.3g, table to %llu)\n",
              tilde ? "S~" : "S", X, tau, s.value, s.tail_bound,
              static_cast<unsigned long long>(table.range_end));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pair-correlation laboratory"};
  app.require_subcommand(1);
  int rc = 0;

  // run
  auto* run_cmd = app.add_subcommand(
      "run", "evaluate a config grid, write <family>.csv/.svg per family");
  std::string run_config, run_out;
  run_cmd->add_option("--config", run_config, "run configuration file")->required();
  run_cmd->add_option("--out-dir", run_out, "output directory")->required();
  run_cmd->callback([&] { rc = cmd_run(run_config, run_out); });

  // zeros
  auto* zeros_cmd = app.add_subcommand("zeros", "zero dataset utilities");
  zeros_cmd->require_subcommand(1);

  auto* zv = zeros_cmd->add_subcommand(
      "validate", "parse a dataset, print count and zero-count deviations");
  std::string zv_path, zv_grid;
  zv->add_option("path", zv_path, "dataset path")->required();
  zv->add_option("--rvm-grid", zv_grid, "comma-separated heights to check");
  zv->callback([&] { cmd_zeros_validate(zv_path, zv_grid); });

  auto* zs = zeros_cmd->add_subcommand("synth",
                                       "write a synthetic contrast dataset");
  std::string zs_model = "picket", zs_out;
  double zs_T = 1e4;
  std::uint64_t zs_seed = 7;
  zs->add_option("--model", zs_model, "poisson or picket")
      ->check(CLI::IsMember({"poisson", "picket"}));
  zs->add_option("--T", zs_T, "height to fill up to");
  zs->add_option("--seed", zs_seed, "random seed");
  zs->add_option("--out", zs_out, "output path")->required();
  zs->callback([&] { cmd_zeros_synth(zs_model, zs_T, zs_seed, zs_out); });

  // arith
  auto* arith_cmd = app.add_subcommand("arith", "von Mangoldt sieve utilities");
  arith_cmd->require_subcommand(1);

  auto* as = arith_cmd->add_subcommand("sieve", "sieve Lambda and write a cache");
  double as_N = 1e7;
  std::string as_out;
  as->add_option("--N", as_N, "sieve range end");
  as->add_option("--out", as_out, "cache path")->required();
  as->callback([&] { cmd_arith_sieve(as_N, as_out); });

  auto* asum = arith_cmd->add_subcommand("s", "weighted prime sum S(X, tau)");
  double asum_X = 1e6, asum_tau = 0.1, asum_N = 2e6, asum_tol = 1e-9;
  std::string asum_sieve;
  bool asum_tilde = false;
  asum->add_option("--X", asum_X, "center")->required();
  asum->add_option("--tau", asum_tau, "weight parameter")->required();
  asum->add_option("--sieve", asum_sieve, "Lambda cache path");
  asum->add_option("--N", asum_N, "sieve range when no cache is given");
  asum->add_option("--tail-tol", asum_tol, "certified tail tolerance");
  asum->add_flag("--tilde", asum_tilde, "compute S~ (no 1/n factor)");
  asum->callback([&] {
    cmd_arith_s(asum_X, asum_tau, asum_sieve, asum_N, asum_tol, asum_tilde);
  });

  // pc
  auto* pc_cmd = app.add_subcommand("pc", "pair-correlation evaluations");
  pc_cmd->require_subcommand(1);

  auto* pf = pc_cmd->add_subcommand(
      "ftau", "F(X, T, tau) against the two-term prediction");
  std::string pf_zeros, pf_sieve;
  double pf_X = 50, pf_T = 2000, pf_tau = 1.0, pf_N = 2e6, pf_ptol = -1.0;
  bool pf_exact = false;
  pf->add_option("--zeros", pf_zeros, "zero dataset path")->required();
  pf->add_option("--X", pf_X, "oscillation parameter")->required();
  pf->add_option("--T", pf_T, "window height")->required();
  pf->add_option("--tau", pf_tau, "weight parameter")->required();
  pf->add_option("--sieve", pf_sieve, "Lambda cache for the prediction");
  pf->add_option("--N", pf_N, "sieve range when no cache is given");
  pf->add_option("--pair-tol", pf_ptol, "pair truncation tolerance");
  pf->add_flag("--exact", pf_exact, "no pair truncation (pair-tol 0)");
  pf->callback([&] {
    emit_single("ftau", {pf_X, pf_T, pf_tau, 0.0}, pf_zeros, pf_sieve, pf_N,
                pf_exact ? 0.0 : pf_ptol);
  });

  auto* pi = pc_cmd->add_subcommand(
      "identity18", "windowed-average identity check");
  std::string pi_zeros;
  double pi_X = 50, pi_T = 2000, pi_tau = 0.8;
  pi->add_option("--zeros", pi_zeros, "zero dataset path")->required();
  pi->add_option("--X", pi_X, "oscillation parameter")->required();
  pi->add_option("--T", pi_T, "window height")->required();
  pi->add_option("--tau", pi_tau, "weight parameter")->required();
  pi->callback([&] {
    emit_single("hbg", {pi_X, pi_T, pi_tau, 0.0}, pi_zeros, "", 2e6, -1.0);
  });

  auto* pr = pc_cmd->add_subcommand(
      "check-residue", "kernel residue identity (quadrature validation)");
  double pr_g = 0.0, pr_g2 = 1.0, pr_tau = 0.5;
  pr->add_option("--gamma", pr_g, "first ordinate");
  pr->add_option("--gamma2", pr_g2, "second ordinate");
  pr->add_option("--tau", pr_tau, "weight parameter")->required();
  pr->callback([&] {
    emit_single("residue", {pr_g, pr_g2, pr_tau, 0.0}, "", "", 2e6, -1.0);
  });

  auto* pt = pc_cmd->add_subcommand(
      "tauf", "tau-averaged F integral identity");
  std::string pt_zeros;
  double pt_X = 10, pt_T = 500, pt_tau = 1.0;
  pt->add_option("--zeros", pt_zeros, "zero dataset path")->required();
  pt->add_option("--X", pt_X, "oscillation parameter")->required();
  pt->add_option("--T", pt_T, "window height")->required();
  pt->add_option("--tau", pt_tau, "weight parameter")->required();
  pt->callback([&] {
    emit_single("tauf", {pt_X, pt_T, pt_tau, 0.0}, pt_zeros, "", 2e6, -1.0);
  });

  // explicit
  auto* ex_cmd = app.add_subcommand("explicit", "explicit-formula checks");
  ex_cmd->require_subcommand(1);

  auto* ev = ex_cmd->add_subcommand(
      "verify", "zero-sum vs prime-sum comparison at (X, t)");
  std::string ev_zeros, ev_sieve;
  double ev_X = 50, ev_t = 5, ev_tau = 0.5, ev_N = 2e6;
  ev->add_option("--X", ev_X, "oscillation parameter")->required();
  ev->add_option("--t", ev_t, "evaluation height")->required();
  ev->add_option("--tau", ev_tau, "weight parameter")->required();
  ev->add_option("--zeros", ev_zeros, "zero dataset path")->required();
  ev->add_option("--sieve", ev_sieve, "Lambda cache path");
  ev->add_option("--N", ev_N, "sieve range when no cache is given");
  ev->callback([&] {
    emit_single("lemma4", {ev_X, ev_t, ev_tau, 0.0}, ev_zeros, ev_sieve, ev_N,
                -1.0);
  });

  // asympt
  auto* asy_cmd = app.add_subcommand("asympt", "asymptotic comparisons");
  asy_cmd->require_subcommand(1);

  auto* sw = asy_cmd->add_subcommand(
      "sweep", "evaluate a config grid and print the CSV to stdout");
  std::string sw_zeros, sw_sieve, sw_grid;
  sw->add_option("--grid", sw_grid, "run configuration file")->required();
  sw->add_option("--zeros", sw_zeros, "override [inputs] zeros");
  sw->add_option("--sieve", sw_sieve, "override [inputs] sieve_cache");
  sw->callback([&] {
    auto cfg = pclab::load_config(sw_grid);
    if (!sw_zeros.empty()) cfg.zero_path = sw_zeros;
    if (!sw_sieve.empty()) cfg.sieve_cache_path = sw_sieve;
    std::fputs(pclab::emit_csv(pclab::run(cfg)).c_str(), stdout);
  });

  // si
  auto* si_cmd = app.add_subcommand("si", "short-interval checks");
  si_cmd->require_subcommand(1);

  auto* sj = si_cmd->add_subcommand(
      "j", "exact short-interval variance J vs its first-order form");
  std::string sj_sieve;
  double sj_X = 1e6, sj_tau = 0.5, sj_theta = 1e-3, sj_N = 2e6;
  sj->add_option("--X", sj_X, "interval base")->required();
  sj->add_option("--tau", sj_tau, "interval length ratio")->required();
  sj->add_option("--theta", sj_theta, "interval width")->required();
  sj->add_option("--sieve", sj_sieve, "Lambda cache path");
  sj->add_option("--N", sj_N, "sieve range when no cache is given");
  sj->callback([&] {
    emit_single("j", {sj_X, 0.0, sj_tau, sj_theta}, "", sj_sieve, sj_N, -1.0);
  });

  auto* sl = si_cmd->add_subcommand(
      "lemma10", "prime-side J vs zero-side U comparison");
  std::string sl_zeros, sl_sieve;
  double sl_X = 500, sl_tau = 0.5, sl_theta = 0.05, sl_Z = 0.0, sl_N = 2e6;
  sl->add_option("--X", sl_X, "interval base")->required();
  sl->add_option("--tau", sl_tau, "interval length ratio")->required();
  sl->add_option("--theta", sl_theta, "interval width")->required();
  sl->add_option("--zeros", sl_zeros, "zero dataset path")->required();
  sl->add_option("--sieve", sl_sieve, "Lambda cache path");
  sl->add_option("--N", sl_N, "sieve range when no cache is given");
  sl->add_option("--Z", sl_Z, "zero-sum height (default X log^2 X)");
  sl->callback([&] {
    emit_single("lemma10", {sl_X, sl_Z, sl_tau, sl_theta}, sl_zeros, sl_sieve,
                sl_N, -1.0);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const pclab::Error& e) {
    std::fprintf(stderr, "pclab: %s\n", e.what());
    return 1;
  }
  return rc;
}
