#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace thinsieve {

struct Factorization {
  Int n;                                   // the input
  int sign = 1;                            // -1 for negative input
  std::vector<std::pair<Int, int>> factors;  // (prime, exponent), ascending
  int omega = 0;                           // sum of exponents (Omega)
};

// Full factorization: trial division by primes up to 1e6, then Brent-Pollard
// rho with deterministic Miller-Rabin certification for cofactors below 2^64
// (probable-prime certification above). Throws ValidationError on n = 0.
Factorization big_omega(const Int& n);

bool is_prime_u64(std::uint64_t n);  // deterministic Miller-Rabin

struct CensusRecord {
  Triple point;
  Poly F;
  Int value;
  bool zero_value = false;
  int omega = 0;  // Omega(|value|); 0 and unused when zero_value
};

struct CensusSummary {
  double T = 0;
  Poly F;
  std::uint64_t total_points = 0;
  std::uint64_t zero_flagged = 0;
  std::map<int, std::uint64_t> omega_histogram;  // Omega -> count
  std::map<long, std::uint64_t> in_PR;           // R -> count with Omega <= R
};

// Per-point Omega over the given orbit points (assumed sorted/deduplicated),
// plus one summary covering all requested R values.
std::pair<std::vector<CensusRecord>, CensusSummary> census(
    const std::vector<Triple>& points, Poly F, const std::vector<long>& R_list,
    double T);

// ratio(T) = count{F in P(R), norm < T} / (T^delta / (log T)^kappa)
std::vector<std::pair<double, double>> density_curve(
    const std::vector<CensusSummary>& summaries, long R, double delta_hat,
    double kappa);

// CSV with columns x,y,z,omega,category.
// F_C: category in {le4, eq5, ge6}; F_H: {prime, composite};
// F_A: {le4, eq5, ge6} on Omega as well. Zero values get category "zero".
std::string figure_csv(const std::vector<CensusRecord>& records);

}  // namespace thinsieve
