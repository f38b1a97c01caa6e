#include "pclab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "pclab/errors.hpp"
#include "pclab/parallel.hpp"
#include "pclab/summation.hpp"

namespace pclab {

namespace {

constexpr std::uint64_t kMaxSieve = 1000000000ULL;  // memory guard

std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
  std::vector<bool> comp(limit + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (comp[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
      comp[j] = true;
  }
  return primes;
}

struct Entry {
  std::uint64_t n;
  double lambda;
};

}  // namespace

LambdaTable sieve_lambda(std::uint64_t N) {
  if (N > kMaxSieve)
    throw ResourceLimit("sieve limited to N <= 1e9, requested " + std::to_string(N));
  if (N < 2) throw Error("sieve requires N >= 2");

  const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(N)));
  const auto base = small_primes(std::max<std::uint32_t>(root, 3));

  // Proper prime powers p^k (k >= 2) are sparse; enumerate them directly.
  std::vector<Entry> powers;
  for (std::uint32_t p : base) {
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= N;) {
      powers.push_back({q, lp});
      if (q > N / p) break;
      q *= p;
    }
  }
  std::sort(powers.begin(), powers.end(),
            [](const Entry& a, const Entry& b) { return a.n < b.n; });

  // Odd-composite bitmap sieve over fixed segments; blocks combine in index
  // order so the result is independent of the worker count.
  constexpr std::uint64_t kSeg = 1ULL << 22;  // odds per segment
  const std::uint64_t n_odd = (N + 1) / 2;    // odds in [1, N]: 1, 3, 5, ...
  auto segs = map_blocks<std::vector<Entry>>(
      n_odd, kSeg, [&](std::uint64_t lo, std::uint64_t hi, std::vector<Entry>& out) {
        // odd value of index i is 2i + 1
        const std::uint64_t vlo = 2 * lo + 1, vhi = 2 * (hi - 1) + 1;
        std::vector<std::uint8_t> comp(hi - lo, 0);
        if (lo == 0) comp[0] = 1;  // 1 is not prime
        for (std::uint32_t p : base) {
          if (p == 2) continue;
          const std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
          if (p2 > vhi) break;
          std::uint64_t start = std::max<std::uint64_t>(p2, ((vlo + p - 1) / p) * p);
          if ((start & 1) == 0) start += p;
          for (std::uint64_t v = start; v <= vhi; v += 2 * p)
            comp[(v - vlo) / 2] = 1;
        }
        out.reserve((hi - lo) / 16);
        for (std::uint64_t i = lo; i < hi; ++i) {
          if (!comp[i - lo]) {
            const std::uint64_t v = 2 * i + 1;
            out.push_back({v, std::log(static_cast<double>(v))});
          }
        }
      });

  LambdaTable t;
  t.range_end = N;
  std::size_t total = powers.size() + 1;  // +1 for the prime 2
  for (const auto& s : segs) total += s.size();
  t.n.reserve(total);
  t.lambda.reserve(total);
  t.psi_prefix.reserve(total);

  // Merge the prime stream (2 then the odd segments) with the power list.
  std::size_t ip = 0;
  CompensatedSum acc;
  auto push = [&](std::uint64_t n, double lam) {
    acc.add(lam);
    t.n.push_back(n);
    t.lambda.push_back(lam);
    t.psi_prefix.push_back(acc.value());
  };
  auto emit_prime = [&](const Entry& e) {
    while (ip < powers.size() && powers[ip].n < e.n) {
      push(powers[ip].n, powers[ip].lambda);
      ++ip;
    }
    push(e.n, e.lambda);
  };
  emit_prime({2, std::log(2.0)});
  for (const auto& s : segs)
    for (const auto& e : s) emit_prime(e);
  while (ip < powers.size()) {
    push(powers[ip].n, powers[ip].lambda);
    ++ip;
  }
  return t;
}

double psi(const LambdaTable& table, double x) {
  if (!(x >= 0.0) || x > static_cast<double>(table.range_end))
    throw RangeExceeded("psi query at x = " + std::to_string(x) + " outside [0, " +
                        std::to_string(table.range_end) + "]");
  const auto cap = static_cast<std::uint64_t>(std::floor(x));
  const auto it = std::upper_bound(table.n.begin(), table.n.end(), cap);
  if (it == table.n.begin()) return 0.0;
  return table.psi_prefix[static_cast<std::size_t>(it - table.n.begin()) - 1];
}

double a_weight(double u, double X, double tau) {
  const double r = (u <= X) ? u / X : X / u;
  return std::pow(r, 1.0 / tau);
}

namespace {

// Accumulate sum of lambda^2 * n^{-with_inv_n} * a(n,X,tau)^2 over entries in
// [from, to] (indices), compensated.
double weighted_sum(const LambdaTable& t, const SWeightParams& p, bool with_inv_n,
                    std::size_t from, std::size_t to) {
  CompensatedSum s;
  for (std::size_t i = from; i < to; ++i) {
    const double a = a_weight(static_cast<double>(t.n[i]), p.X, p.tau);
    double term = t.lambda[i] * t.lambda[i] * a * a;
    if (with_inv_n) term /= static_cast<double>(t.n[i]);
    s.add(term);
  }
  return s.value();
}

// Tail of sum_{n>N} log^2 n * n^{-1-c} * X^c  (with_inv_n = true) or
// sum_{n>N} log^2 n * n^{-c} * X^c (false), via the integral comparison.
double analytic_tail(double X, double tau, double N, bool with_inv_n) {
  const double c = 2.0 / tau;
  const double L = std::log(N);
  if (with_inv_n) {
    // int_N^inf log^2 u * u^{-1-c} du = N^{-c} (L^2/c + 2L/c^2 + 2/c^3)
    return std::pow(X / N, c) * (L * L / c + 2.0 * L / (c * c) + 2.0 / (c * c * c));
  }
  // int_N^inf log^2 u * u^{-c} du = N^{1-c} (L^2/d + 2L/d^2 + 2/d^3), d = c-1
  const double d = c - 1.0;
  return std::pow(X, c) * std::pow(N, 1.0 - c) *
         (L * L / d + 2.0 * L / (d * d) + 2.0 / (d * d * d));
}

TailedValue tailed_sum(const SWeightParams& p, const LambdaTable& t, bool with_inv_n) {
  // tau is allowed up to 2 (not just the nominal 1) because the
  // S-tilde <= X * S(X, 2*tau) comparison evaluates S at a doubled tau.
  const double tau_cap = with_inv_n ? 2.0 : 1.0;
  if (!(p.X > 1.0) || !(p.tau > 0.0 && p.tau <= tau_cap))
    throw Error("weighted sum requires X > 1 and tau in (0," +
                std::to_string(tau_cap) + "]");
  const double N = static_cast<double>(t.range_end);
  TailedValue out;
  out.tail_bound = analytic_tail(p.X, p.tau, N, with_inv_n);
  if (!(out.tail_bound < p.tail_tol)) {
    // Exponential search for a table size that would meet the tolerance.
    double need = N;
    while (analytic_tail(p.X, p.tau, need, with_inv_n) >= p.tail_tol && need < 1e18)
      need *= 2.0;
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "tail bound %.3g exceeds tolerance %.3g; table up to ~%.3g required",
                  out.tail_bound, p.tail_tol, need);
    throw InsufficientSieve(msg);
  }
  out.value = weighted_sum(t, p, with_inv_n, 0, t.n.size());
  return out;
}

}  // namespace

TailedValue s_sum(const SWeightParams& params, const LambdaTable& table) {
  return tailed_sum(params, table, true);
}

TailedValue s_tilde(const SWeightParams& params, const LambdaTable& table) {
  return tailed_sum(params, table, false);
}

SplitSums s_split(const SWeightParams& params, double H, const LambdaTable& table) {
  if (!(H >= 1.0 && H <= params.X))
    throw Error("s_split requires 1 <= H <= X");
  // Same preconditions and tail policy as s_sum.
  (void)tailed_sum(params, table, true);
  const auto& n = table.n;
  auto idx = [&](double x) {
    if (x < 0) x = 0;
    const auto cap = static_cast<std::uint64_t>(std::floor(x));
    return static_cast<std::size_t>(
        std::upper_bound(n.begin(), n.end(), cap) - n.begin());
  };
  const std::size_t i1 = idx(params.X - H);   // entries in [1, X-H]
  const std::size_t i2 = idx(params.X + H);   // entries in [1, X+H]
  SplitSums s;
  s.S1 = weighted_sum(table, params, true, 0, i1);
  s.S2 = weighted_sum(table, params, true, i1, i2);
  s.S3 = weighted_sum(table, params, true, i2, n.size());
  return s;
}

double z_twin(std::uint64_t U, std::uint64_t k, const LambdaTable& table) {
  if (!(k >= 1 && k <= U && U <= table.range_end))
    throw RangeExceeded("z_twin requires 1 <= k <= U <= table range");
  const auto& n = table.n;
  const auto end = std::upper_bound(n.begin(), n.end(), U);
  CompensatedSum s;
  for (auto it = n.begin(); it != end; ++it) {
    const std::uint64_t m = *it + k;
    if (m > U) break;
    const auto jt = std::lower_bound(it, end, m);
    if (jt != end && *jt == m) {
      const std::size_t i = static_cast<std::size_t>(it - n.begin());
      const std::size_t j = static_cast<std::size_t>(jt - n.begin());
      // ordered pairs (n, n+k) and (n+k, n)
      s.add(2.0 * table.lambda[i] * table.lambda[j]);
    }
  }
  return s.value();
}

double kbeta_ratio(const LambdaTable& table, double X, double h) {
  if (!(h > 0.0) || !(X >= 0.0) || X + h > static_cast<double>(table.range_end))
    throw RangeExceeded("kbeta_ratio requires 0 <= X, 0 < h, X + h <= table range");
  return (psi(table, X + h) - psi(table, X)) / h;
}

namespace {
constexpr char kCacheMagic[4] = {'P', 'C', 'L', 'B'};
constexpr std::uint32_t kCacheVersion = 1;

void put_varint(std::ofstream& f, std::uint64_t v) {
  while (v >= 0x80) {
    f.put(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  f.put(static_cast<char>(v));
}

std::uint64_t get_varint(std::ifstream& f) {
  std::uint64_t v = 0;
  int shift = 0;
  while (true) {
    const int c = f.get();
    if (c == EOF) throw ParseError("lambda cache truncated");
    v |= static_cast<std::uint64_t>(c & 0x7f) << shift;
    if (!(c & 0x80)) break;
    shift += 7;
    if (shift > 63) throw ParseError("lambda cache varint overflow");
  }
  return v;
}

std::uint8_t exponent_of(std::uint64_t n, double lambda) {
  // n = p^k with lambda = log p, so k = log n / log p.
  return static_cast<std::uint8_t>(
      std::llround(std::log(static_cast<double>(n)) / lambda));
}

}  // namespace

void save_lambda_cache(const LambdaTable& table, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open cache for writing: " + path);
  f.write(kCacheMagic, 4);
  f.write(reinterpret_cast<const char*>(&kCacheVersion), 4);
  f.write(reinterpret_cast<const char*>(&table.range_end), 8);
  const std::uint64_t count = table.n.size();
  f.write(reinterpret_cast<const char*>(&count), 8);
  std::uint64_t prev = 0;
  for (std::size_t i = 0; i < table.n.size(); ++i) {
    put_varint(f, table.n[i] - prev);
    f.put(static_cast<char>(exponent_of(table.n[i], table.lambda[i])));
    prev = table.n[i];
  }
  if (!f) throw Error("write failure on cache: " + path);
}

LambdaTable load_lambda_cache(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open cache: " + path);
  char magic[4];
  f.read(magic, 4);
  std::uint32_t version = 0;
  f.read(reinterpret_cast<char*>(&version), 4);
  if (!f || std::memcmp(magic, kCacheMagic, 4) != 0 || version != kCacheVersion)
    throw ParseError("not a lambda cache (bad magic or version): " + path);
  LambdaTable t;
  std::uint64_t count = 0;
  f.read(reinterpret_cast<char*>(&t.range_end), 8);
  f.read(reinterpret_cast<char*>(&count), 8);
  if (!f) throw ParseError("lambda cache truncated: " + path);
  t.n.reserve(count);
  t.lambda.reserve(count);
  t.psi_prefix.reserve(count);
  std::uint64_t prev = 0;
  CompensatedSum acc;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t n = prev + get_varint(f);
    const int k = f.get();
    if (k == EOF) throw ParseError("lambda cache truncated: " + path);
    const auto p = static_cast<std::uint64_t>(
        std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
    // Exactness check: p^k must reproduce n.
    std::uint64_t q = 1;
    for (int j = 0; j < k; ++j) q *= p;
    if (q != n)
      throw ParseError("lambda cache corrupt: " + std::to_string(n) +
                       " is not a perfect power of " + std::to_string(p));
    const double lam = std::log(static_cast<double>(p));
    acc.add(lam);
    t.n.push_back(n);
    t.lambda.push_back(lam);
    t.psi_prefix.push_back(acc.value());
    prev = n;
  }
  return t;
}

}  // namespace pclab
