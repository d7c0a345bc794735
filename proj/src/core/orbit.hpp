#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace thinsieve {

struct GroupPresentation {
  std::vector<Mat3> generators;  // inverses appended automatically during use
  Triple base_point;
  std::string label;
};

struct EnumParams {
  double T = 0;                        // Euclidean norm radius, > 0
  double slack = 2.0;                  // envelope factor, >= 1; inf disables
  int max_word_length = 64;            // BFS depth cap
  std::uint64_t budget_nodes = 50'000'000;  // edge-relaxation budget
};

struct CountSeries {
  std::vector<std::pair<double, std::uint64_t>> entries;  // (T, N(T))
};

struct PowerLawFit {
  double delta_hat = 0;
  double c_hat = 0;
  double r_squared = 0;
};

// Validates the presentation: every generator passes validate_generator,
// base point is on the cone.
void validate_presentation(const GroupPresentation& g);

// Generators plus their exact inverses, deduplicated.
std::vector<Mat3> symmetrized_generators(const GroupPresentation& g);

// BFS over the orbit graph (points deduplicated), expanding a node only
// while ||x|| <= slack*T and depth <= max_word_length; returns the sorted
// set of points with ||x|| < T. Throws BudgetExceeded.
std::vector<Triple> enumerate_orbit(const GroupPresentation& g,
                                    const EnumParams& p);

// Exhaustive: all points reachable within depth L, no norm pruning.
std::vector<Triple> enumerate_words(const GroupPresentation& g, int L,
                                    std::uint64_t budget_nodes = 50'000'000);

// One shared BFS at the largest radius; N(T) per requested radius.
CountSeries count_ball(const GroupPresentation& g,
                       const std::vector<double>& radii, double slack = 2.0,
                       int max_word_length = 64,
                       std::uint64_t budget_nodes = 50'000'000);

// Least squares on (log T, log N); requires >= 3 entries with N >= 1.
PowerLawFit fit_exponent(const CountSeries& s);

// Exact comparison ||t||^2 < T^2 (shared by BFS and oracles).
bool norm_lt(const Triple& t, double T);

}  // namespace thinsieve
