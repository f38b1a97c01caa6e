#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pclab {

// Sparse von Mangoldt table over [1, N]: ascending prime powers n = p^k with
// lambda = log p, plus running psi prefix sums (compensated, left-to-right)
// for O(log) psi queries.
struct LambdaTable {
  std::uint64_t range_end = 0;
  std::vector<std::uint64_t> n;
  std::vector<double> lambda;
  std::vector<double> psi_prefix;  // psi at and including entry i
};

struct SWeightParams {
  double X;
  double tau;
  double tail_tol = 1e-9;
};

struct TailedValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

struct SplitSums {
  double S1 = 0.0, S2 = 0.0, S3 = 0.0;
};

// Complete Lambda table over [1, N]. Throws ResourceLimit for N > 1e9.
LambdaTable sieve_lambda(std::uint64_t N);

// psi(x) = sum_{n<=x} Lambda(n), right-continuous. Throws RangeExceeded for
// x outside [0, range_end].
double psi(const LambdaTable& table, double x);

// a(u,X,tau) = (u/X)^{1/tau} for u <= X, (X/u)^{1/tau} above; in (0,1].
double a_weight(double u, double X, double tau);

// S(X,tau) = sum Lambda(n)^2 / n * a(n,X,tau)^2, truncated at the table end
// with a certified analytic tail bound. Throws InsufficientSieve (reporting
// the required table size) when the tail bound cannot meet tail_tol.
TailedValue s_sum(const SWeightParams& params, const LambdaTable& table);

// Same sum without the 1/n factor.
TailedValue s_tilde(const SWeightParams& params, const LambdaTable& table);

// s_sum split over [1, X-H], (X-H, X+H], (X+H, table end]; parts sum to the
// s_sum value within rounding.
SplitSums s_split(const SWeightParams& params, double H, const LambdaTable& table);

// Z(U;k) = sum over ordered pairs of prime powers n,m <= U with |n-m| = k of
// Lambda(n) Lambda(m).
double z_twin(std::uint64_t U, std::uint64_t k, const LambdaTable& table);

// (psi(X+h) - psi(X)) / h.
double kbeta_ratio(const LambdaTable& table, double X, double h);

// Binary cache: magic/version header, range_end, count, then delta-encoded
// prime powers with their exponents (lambda is reconstructed as log of the
// k-th root). Round-trips bit-exactly.
void save_lambda_cache(const LambdaTable& table, const std::string& path);
LambdaTable load_lambda_cache(const std::string& path);

}  // namespace pclab
