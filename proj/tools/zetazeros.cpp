// Generates an ordinate dataset (imaginary parts of zeta zeros on the
// critical line) by scanning the Hardy Z function. Used to bootstrap the
// data/ directory; output is plain text, one ordinate per line.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pclab/zetazero.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Riemann zero ordinate generator"};
  std::size_t count = 100000;
  std::string out = "zeros.txt";
  bool quiet = false;
  bool reuse = false;
  app.add_option("--count", count, "number of zeros to compute");
  app.add_option("--out", out, "output path")->required();
  app.add_flag("--quiet", quiet, "suppress progress output");
  app.add_flag("--reuse", reuse, "exit immediately if the output already has the requested count");
  CLI11_PARSE(app, argc, argv);

  if (reuse) {
    std::ifstream existing(out);
    std::size_t have = 0;
    std::string line;
    while (std::getline(existing, line))
      if (!line.empty() && line[0] != '#') ++have;
    if (have == count) {
      std::fprintf(stderr, "%s already has %zu ordinates, reusing\n", out.c_str(), have);
      return 0;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  auto zeros = pclab::find_zeros(count, [&](std::size_t n, double t) {
    if (!quiet) std::fprintf(stderr, "  %zu zeros, t = %.1f\n", n, t);
  });

  std::ofstream f(out);
  if (!f) {
    std::fprintf(stderr, "cannot open %s for writing\n", out.c_str());
    return 1;
  }
  f << "# ordinates of zeta zeros on the critical line, one per line\n";
  char buf[64];
  for (double g : zeros) {
    std::snprintf(buf, sizeof buf, "%.9f\n", g);
    f << buf;
  }
  f.close();

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::fprintf(stderr, "%zu zeros up to %.6f written to %s (%.1f s)\n",
               zeros.size(), zeros.back(), out.c_str(), secs);
  return 0;
}
