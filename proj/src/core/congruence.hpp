#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbit.hpp"

namespace thinsieve {

using Res3 = std::array<long, 3>;  // residue triple, componentwise in [0, q)

struct OrbitModQ {
  long q = 0;
  std::vector<Res3> points;  // sorted
};

struct DensityEntry {
  long p = 0;
  Rat g;                    // exact rational in [0, 1]
  std::string provenance;   // "bfs" or "cone-formula"
};

struct RamificationReport {
  long p_max = 0;
  bool two_reported = true;      // p = 2 is always reported separately
  std::vector<long> odd_primes;  // odd p <= p_max failing the saturation test
};

struct PrimitivityResult {
  bool ok = false;
  long failing_q = 0;  // first q in [2, q_max] with F == 0 on the whole orbit
};

// BFS closure of base mod q under generator images and inverses mod q.
OrbitModQ orbit_mod_q(const GroupPresentation& g, long q);

// Brute force over p^3 residue triples: nonzero points of x^2+y^2-z^2 = 0.
std::vector<Res3> cone_points_mod_p(long p);

// |O^F(q)| / |O(q)| as an exact rational. For gcd(q, den(F)) = 1 this is the
// exact vanishing density of F mod q; otherwise it is the numerator-vanishing
// density (den(F) is not invertible mod q, documented convention).
Rat local_density(const GroupPresentation& g, Poly f, long q);

// Closed forms certified against the oracle on small primes:
//   g_FH(p) = 2/(p+1) if p = 1 mod 4 else 0
//   g_FA(p) = 4/(p+1)
//   g_FC(p) = 6/(p+1) if -1 is a square mod p else 4/(p+1)
// Valid for odd unramified p not dividing den(F).
Rat closed_form_density(Poly f, long p);

bool verify_multiplicativity(const GroupPresentation& g, Poly f, long q1,
                             long q2);

// Odd p is unramified when the orbit mod p projectively saturates the cone:
// |O(p)| is (p^2-1)/2 or p^2-1 and F_p^* . O(p) covers all of V(F_p).
// p = 2 is always reported separately.
RamificationReport detect_ramified_primes(const GroupPresentation& g,
                                          long p_max);

// For each q in [2, q_max], verifies some orbit point has F != 0 mod q.
// A pool of exact F values from a small enumeration certifies most q;
// the exact fallback closes the orbit mod den(F)*q.
PrimitivityResult check_strong_primitivity(const GroupPresentation& g, Poly f,
                                           long q_max);

// Least-squares slope of log prod_{p<z} (1-g(p))^-1 against log log z over a
// log-spaced grid of z in [1000, z_max]. Primes dividing 60 are skipped
// (ramified / denominator primes).
double sieve_dimension_fit(Poly f, long z_max);

// Density table for odd primes in [p_lo, p_hi]: BFS value, closed form, and
// oracle agreement per prime.
struct DensityRow {
  long p;
  Rat g_bfs;
  Rat g_closed;
  bool oracle_agrees;      // BFS density == brute-force cone density
  bool closed_form_agrees; // BFS density == closed form
};
std::vector<DensityRow> density_table(const GroupPresentation& g, Poly f,
                                      long p_lo, long p_hi, bool with_oracle);

// Brute-force density over the cone V(F_p): #{v in V : num_F(v) = 0 mod p}/|V|.
Rat cone_density_oracle(Poly f, long p);

std::vector<long> primes_up_to(long n);

}  // namespace thinsieve
