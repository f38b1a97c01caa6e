#include "pclab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pclab/arith.hpp"
#include "pclab/asympt.hpp"
#include "pclab/errors.hpp"
#include "pclab/explicitformula.hpp"
#include "pclab/paircorr.hpp"
#include "pclab/parallel.hpp"
#include "pclab/shortint.hpp"
#include "pclab/zerodata.hpp"

namespace pclab {

namespace {

const char* kFamilies[] = {"ftau",       "residue", "tauf",   "hbg",
                           "lemma4",     "conjecture", "j",   "sv",
                           "lemma9",     "lemma10"};

bool known_family(const std::string& f) {
  for (const char* k : kFamilies)
    if (f == k) return true;
  return false;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double num(const std::string& v, int line) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (trim(v.substr(used)).empty()) return x;
  } catch (const std::exception&) {
  }
  throw ParseError("config line " + std::to_string(line) +
                   ": expected a number, got \"" + v + "\"");
}

GridPoint parse_point(const std::string& v, int line) {
  GridPoint g;
  double* slot[4] = {&g.X, &g.T, &g.tau, &g.theta};
  std::stringstream ss(v);
  std::string item;
  int k = 0;
  while (std::getline(ss, item, ',')) {
    if (k >= 4)
      throw ParseError("config line " + std::to_string(line) +
                       ": a point has at most four components");
    *slot[k++] = num(trim(item), line);
  }
  if (k == 0)
    throw ParseError("config line " + std::to_string(line) + ": empty point");
  return g;
}

struct RunInputs {
  const RunConfig* cfg = nullptr;
  ZeroOrdinates zeros;
  bool have_zeros = false;
  LambdaTable table;
  bool have_table = false;
};

const ZeroOrdinates& need_zeros(const RunInputs& in, const std::string& fam) {
  if (!in.have_zeros)
    throw Error("family " + fam + " needs [inputs] zeros in the config");
  return in.zeros;
}

const LambdaTable& need_table(const RunInputs& in) { return in.table; }

ReportRow eval_point(const std::string& fam, const GridPoint& g,
                     const RunInputs& in) {
  const RunConfig& cfg = *in.cfg;
  const QuadratureSpec& q = cfg.tolerances;
  ReportRow row{fam, g, 0.0, 0.0, 0.0, 0.0, "monitored"};
  if (fam == "ftau") {
    const SignedZeroWindow win = window(need_zeros(in, fam), g.T);
    const FValue F = f_tau(win, {g.X, g.T, g.tau, cfg.pair_tol});
    const TailedValue S = s_sum({g.X, g.tau, 0.05}, need_table(in));
    const Thm1Prediction p = thm1_prediction(g.X, g.T, g.tau, S.value);
    row.computed = F.value;
    row.reference = p.main1 + p.main2;
    row.budget = F.truncation_bound;
  } else if (fam == "residue") {
    // tuple: (gamma, gamma', tau)
    const IdentityPair r = residue_identity_check(g.X, g.T, g.tau, q);
    row.computed = r.lhs;
    row.reference = r.rhs;
    row.budget = r.budget;
    row.status =
        std::fabs(r.lhs - r.rhs) <= std::max(r.budget, 1e-9) ? "pass" : "fail";
  } else if (fam == "tauf") {
    const SignedZeroWindow win = window(need_zeros(in, fam), g.T);
    const IdentityPair r = tauF_integral_check(win, g.X, g.tau, q);
    row.computed = r.lhs;
    row.reference = r.rhs;
    row.budget = r.budget;
    row.status = std::fabs(r.lhs - r.rhs) <=
                         std::max(r.budget, 1e-6 * std::fabs(r.rhs))
                     ? "pass"
                     : "fail";
  } else if (fam == "hbg") {
    const IdentityPair r =
        hbg_identity_check(need_zeros(in, fam), g.X, g.T, g.tau, q);
    row.computed = r.lhs;
    row.reference = r.rhs;
    row.budget = r.budget;
    row.status = std::fabs(r.lhs - r.rhs) <= r.budget ? "pass" : "fail";
  } else if (fam == "lemma4") {
    // tuple: (X, t, tau); fixed zero window height 5000, primes to 1e6
    const LambdaTable& table = need_table(in);
    const double prime_N =
        std::min(1e6, static_cast<double>(table.range_end));
    const Lemma4Params p =
        make_lemma4_params(g.X, g.T, g.tau, 5000.0, prime_N);
    const SignedZeroWindow win = window(need_zeros(in, fam), 5000.0);
    const Lemma4Report r = verify_lemma4(p, win, table);
    row.computed = r.gap;
    row.reference = std::abs(r.lhs);
    row.budget = r.budget;
    row.status =
        (r.gap <= r.budget && r.gap <= 1e-3 * std::abs(r.lhs)) ? "pass"
                                                               : "fail";
  } else if (fam == "conjecture") {
    const SignedZeroWindow win = window(need_zeros(in, fam), g.T);
    const FValue F = f_tau(win, {g.X, g.T, g.tau, cfg.pair_tol});
    const ConjectureValue c =
        conjecture_prediction(g.X, g.T, g.tau, {cfg.M, cfg.epsilon});
    row.computed = F.value;
    row.reference = c.value;
    row.budget = F.truncation_bound;
    if (!c.applicable) row.status = "skipped";
  } else if (fam == "j") {
    const ShortIntervalSpec sp{g.X, g.tau, g.theta};
    row.computed = j_exact(sp, need_table(in));
    row.reference = j_rhs(sp);
  } else if (fam == "sv") {
    // tuple: (X, Y, -, h)
    const SVResult r = sv_integral({g.X, g.T, g.theta}, need_table(in));
    row.computed = r.value;
    row.reference = r.rhs;
  } else if (fam == "lemma9") {
    // tuple: (X, Z, tau, theta)
    const SignedZeroWindow win =
        window(need_zeros(in, fam), in.zeros.height_max);
    const Lemma9Result r = lemma9_check(g.theta, g.tau, g.X, g.T, win, q);
    row.computed = r.lhs;
    row.reference = r.rhs;
    row.budget = r.err_scale;
  } else if (fam == "lemma10") {
    const SignedZeroWindow win =
        window(need_zeros(in, fam), in.zeros.height_max);
    const double lx = std::log(g.X);
    const double Z = g.T > 0.0 ? g.T : g.X * lx * lx;
    const Lemma10Result r =
        lemma10_check({g.X, g.tau, g.theta}, need_table(in), win, Z);
    row.computed = r.J;
    row.reference = r.U;
    row.budget = 0.15 * std::max(r.J, r.U);
  } else {
    throw Error("unknown family " + fam);
  }
  row.ratio = row.reference != 0.0 ? row.computed / row.reference : 0.0;
  return row;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']')
        throw ParseError("config line " + std::to_string(lineno) +
                         ": unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      if (section != "inputs" && section != "tolerances" &&
          section != "asympt" && section.rfind("family:", 0) != 0)
        throw ParseError("config line " + std::to_string(lineno) +
                         ": unknown section [" + section + "]");
      if (section.rfind("family:", 0) == 0 &&
          !known_family(section.substr(7)))
        throw ParseError("config line " + std::to_string(lineno) +
                         ": unknown family \"" + section.substr(7) + "\"");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(lineno) +
                       ": expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (section == "inputs") {
      if (key == "zeros")
        cfg.zero_path = val;
      else if (key == "sieve_cache")
        cfg.sieve_cache_path = val;
      else if (key == "sieve_n")
        cfg.sieve_n = static_cast<std::uint64_t>(num(val, lineno));
      else
        throw ParseError("config line " + std::to_string(lineno) +
                         ": unknown key \"" + key + "\" in [inputs]");
    } else if (section == "tolerances") {
      if (key == "abs_tol")
        cfg.tolerances.abs_tol = num(val, lineno);
      else if (key == "rel_tol")
        cfg.tolerances.rel_tol = num(val, lineno);
      else if (key == "pair_tol")
        cfg.pair_tol = num(val, lineno);
      else
        throw ParseError("config line " + std::to_string(lineno) +
                         ": unknown key \"" + key + "\" in [tolerances]");
    } else if (section == "asympt") {
      if (key == "epsilon")
        cfg.epsilon = num(val, lineno);
      else if (key == "M")
        cfg.M = num(val, lineno);
      else if (key == "lambda")
        cfg.lambda = num(val, lineno);
      else
        throw ParseError("config line " + std::to_string(lineno) +
                         ": unknown key \"" + key + "\" in [asympt]");
    } else if (section.rfind("family:", 0) == 0) {
      if (key != "point")
        throw ParseError("config line " + std::to_string(lineno) +
                         ": family sections only take point = X, T, tau, theta");
      cfg.grid.emplace_back(section.substr(7), parse_point(val, lineno));
    } else {
      throw ParseError("config line " + std::to_string(lineno) +
                       ": key \"" + key + "\" outside any section");
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path);
  return parse_config(in);
}

std::vector<ReportRow> run(const RunConfig& config) {
  RunInputs in;
  in.cfg = &config;
  bool needs_zeros = false, needs_table = false;
  for (const auto& [fam, g] : config.grid) {
    (void)g;
    if (fam == "ftau" || fam == "tauf" || fam == "hbg" || fam == "lemma4" ||
        fam == "conjecture" || fam == "lemma9" || fam == "lemma10")
      needs_zeros = true;
    if (fam == "ftau" || fam == "lemma4" || fam == "j" || fam == "sv" ||
        fam == "lemma10")
      needs_table = true;
  }
  if (needs_zeros) {
    if (config.zero_path.empty())
      throw Error("config grid needs [inputs] zeros");
    in.zeros = load_zero_file(config.zero_path);
    in.have_zeros = true;
  }
  if (needs_table) {
    in.table = config.sieve_cache_path.empty()
                   ? sieve_lambda(config.sieve_n)
                   : load_lambda_cache(config.sieve_cache_path);
    in.have_table = true;
  }

  const std::size_t n = config.grid.size();
  auto rows = map_blocks<ReportRow>(
      n, 1, [&](std::uint64_t lo, std::uint64_t hi, ReportRow& slot) {
        for (std::uint64_t i = lo; i < hi; ++i) {
          const auto& [fam, g] = config.grid[i];
          try {
            slot = eval_point(fam, g, in);
          } catch (const Error& e) {
            std::fprintf(stderr, "skipped %s point (X=%g, T=%g, tau=%g, theta=%g): %s\n",
                         fam.c_str(), g.X, g.T, g.tau, g.theta, e.what());
            slot = ReportRow{fam, g, 0.0, 0.0, 0.0, 0.0, "skipped"};
          }
        }
      });
  return rows;
}

std::string emit_csv(const std::vector<ReportRow>& rows) {
  std::string out = "family,X,T,tau,theta,computed,reference,ratio,budget,status\n";
  for (const auto& r : rows) {
    out += r.family;
    for (double v : {r.params.X, r.params.T, r.params.tau, r.params.theta,
                     r.computed, r.reference, r.ratio, r.budget}) {
      out += ',';
      out += fmt17(v);
    }
    out += ',';
    out += r.status;
    out += '\n';
  }
  return out;
}

std::string emit_svg(const std::vector<ReportRow>& rows, const PlotSpec& spec) {
  auto pick = [&](const ReportRow& r) {
    if (spec.x_param == "T") return r.params.T;
    if (spec.x_param == "tau") return r.params.tau;
    if (spec.x_param == "theta") return r.params.theta;
    return r.params.X;
  };
  std::vector<std::pair<double, double>> pts;  // (log10 x, log10 ratio)
  for (const auto& r : rows) {
    const double x = pick(r);
    if (r.status == "skipped" || !(x > 0.0) || !(r.ratio > 0.0) ||
        !std::isfinite(r.ratio))
      continue;
    pts.emplace_back(std::log10(x), std::log10(r.ratio));
  }
  std::sort(pts.begin(), pts.end());

  const double x0 = 70.0, x1 = 610.0, y0 = 380.0, y1 = 40.0;
  double lx0 = 0.0, lx1 = 1.0, ly0 = -1.0, ly1 = 1.0;
  if (!pts.empty()) {
    lx0 = lx1 = pts.front().first;
    ly0 = ly1 = pts.front().second;
    for (const auto& p : pts) {
      lx0 = std::min(lx0, p.first);
      lx1 = std::max(lx1, p.first);
      ly0 = std::min(ly0, p.second);
      ly1 = std::max(ly1, p.second);
    }
    if (lx1 - lx0 < 1e-12) { lx0 -= 0.5; lx1 += 0.5; }
    if (ly1 - ly0 < 1e-12) { ly0 -= 0.5; ly1 += 0.5; }
  }
  auto sx = [&](double lx) { return x0 + (lx - lx0) / (lx1 - lx0) * (x1 - x0); };
  auto sy = [&](double ly) { return y0 + (ly - ly0) / (ly1 - ly0) * (y1 - y0); };

  char buf[256];
  std::string svg =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      "width=\"640\" height=\"420\" viewBox=\"0 0 640 420\">\n"
      "<rect x=\"0\" y=\"0\" width=\"640\" height=\"420\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf,
                "<text x=\"320\" y=\"24\" text-anchor=\"middle\" "
                "font-family=\"sans-serif\" font-size=\"14\">%s</text>\n",
                spec.title.c_str());
  svg += buf;
  // axes
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                "stroke=\"black\"/>\n",
                x0, y0, x1, y0);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                "stroke=\"black\"/>\n",
                x0, y0, x0, y1);
  svg += buf;
  // tick labels: log10 ranges
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.2f\" y=\"398\" font-family=\"sans-serif\" "
                "font-size=\"11\">log10 %s = %.3g</text>\n",
                x0, spec.x_param.c_str(), lx0);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.2f\" y=\"398\" text-anchor=\"end\" "
                "font-family=\"sans-serif\" font-size=\"11\">%.3g</text>\n",
                x1, lx1);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"8\" y=\"%.2f\" font-family=\"sans-serif\" "
                "font-size=\"11\">log10 ratio = %.3g</text>\n",
                y1 + 4.0, ly1);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"8\" y=\"%.2f\" font-family=\"sans-serif\" "
                "font-size=\"11\">%.3g</text>\n",
                y0, ly0);
  svg += buf;

  if (pts.empty()) {
    svg += "<text x=\"320\" y=\"210\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"12\">no plottable rows</text>\n";
  } else {
    std::string poly = "<polyline fill=\"none\" stroke=\"#1f6fb2\" "
                       "stroke-width=\"1.5\" points=\"";
    for (const auto& p : pts) {
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", sx(p.first), sy(p.second));
      poly += buf;
    }
    if (poly.back() == ' ') poly.pop_back();
    poly += "\"/>\n";
    svg += poly;
    for (const auto& p : pts) {
      std::snprintf(buf, sizeof buf,
                    "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" "
                    "fill=\"#1f6fb2\"/>\n",
                    sx(p.first), sy(p.second));
      svg += buf;
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace pclab
