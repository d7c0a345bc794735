#include "orbit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <set>
#include <unordered_set>

namespace thinsieve {

namespace {

struct OverflowSignal {};  // internal: retry the search in big-integer mode

struct T3 {
  std::int64_t x, y, z;
  bool operator==(const T3& o) const {
    return x == o.x && y == o.y && z == o.z;
  }
};

struct T3Hash {
  std::size_t operator()(const T3& t) const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ULL;
      h ^= h >> 29;
    };
    mix(static_cast<std::uint64_t>(t.x));
    mix(static_cast<std::uint64_t>(t.y));
    mix(static_cast<std::uint64_t>(t.z));
    return static_cast<std::size_t>(h);
  }
};

using M3 = std::array<std::int64_t, 9>;

bool fits_i64(const Int& v) { return v.fits_slong_p(); }

std::int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p()) throw OverflowSignal{};
  return static_cast<std::int64_t>(v.get_si());
}

T3 act_i64(const T3& t, const M3& m) {
  __int128 x = (__int128)t.x * m[0] + (__int128)t.y * m[3] + (__int128)t.z * m[6];
  __int128 y = (__int128)t.x * m[1] + (__int128)t.y * m[4] + (__int128)t.z * m[7];
  __int128 z = (__int128)t.x * m[2] + (__int128)t.y * m[5] + (__int128)t.z * m[8];
  constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
  constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
  if (x < lo || x > hi || y < lo || y > hi || z < lo || z > hi)
    throw OverflowSignal{};
  return T3{(std::int64_t)x, (std::int64_t)y, (std::int64_t)z};
}

// Exact: x^2+y^2+z^2 < T^2. Entries are bounded so the unsigned 128-bit sum
// is exact; long double (64-bit mantissa) holds it exactly below 2^64, and
// beyond that the comparison margin dwarfs the rounding for any sane radius.
bool norm_lt_i64(const T3& t, double T) {
  if (!(T > 0)) return false;
  __int128 n2 = (__int128)t.x * t.x + (__int128)t.y * t.y + (__int128)t.z * t.z;
  return (long double)n2 < (long double)T * (long double)T;
}

bool norm_le_i64(const T3& t, double bound) {
  if (std::isinf(bound)) return true;
  if (!(bound > 0)) return false;
  __int128 n2 = (__int128)t.x * t.x + (__int128)t.y * t.y + (__int128)t.z * t.z;
  return (long double)n2 <= (long double)bound * (long double)bound;
}

bool norm_lt_big(const Triple& t, double T) {
  if (!(T > 0)) return false;
  Int n2 = t.x * t.x + t.y * t.y + t.z * t.z;
  Rat tq(T);
  return Rat(n2) < tq * tq;
}

bool norm_le_big(const Triple& t, double bound) {
  if (std::isinf(bound)) return true;
  if (!(bound > 0)) return false;
  Int n2 = t.x * t.x + t.y * t.y + t.z * t.z;
  Rat bq(bound);
  return Rat(n2) <= bq * bq;
}

// BFS over orbit points. collect_T: keep points with norm < collect_T
// (infinity keeps everything). envelope: expand only nodes with
// norm <= envelope. Returns a sorted vector of big-integer triples.
std::vector<Triple> bfs_big(const std::vector<Mat3>& gens, const Triple& base,
                            double collect_T, double envelope, int max_depth,
                            std::uint64_t budget) {
  std::set<Triple> visited;
  std::deque<std::pair<Triple, int>> queue;
  visited.insert(base);
  queue.emplace_back(base, 0);
  std::uint64_t used = 0;
  while (!queue.empty()) {
    auto [pt, depth] = queue.front();
    queue.pop_front();
    if (depth >= max_depth) continue;
    if (!norm_le_big(pt, envelope)) continue;
    for (const Mat3& g : gens) {
      if (++used > budget)
        throw BudgetExceeded("orbit enumeration exceeded node budget of " +
                             std::to_string(budget));
      Triple next = act(pt, g);
      if (visited.insert(next).second) queue.emplace_back(next, depth + 1);
    }
  }
  std::vector<Triple> out;
  for (const Triple& t : visited)
    if (std::isinf(collect_T) || norm_lt_big(t, collect_T)) out.push_back(t);
  return out;  // std::set iteration is already sorted
}

std::vector<Triple> bfs_i64(const std::vector<Mat3>& gens, const Triple& base,
                            double collect_T, double envelope, int max_depth,
                            std::uint64_t budget) {
  std::vector<M3> g64;
  for (const Mat3& g : gens) {
    M3 m;
    for (int i = 0; i < 9; ++i) {
      if (!fits_i64(g.m[i])) throw OverflowSignal{};
      m[i] = to_i64(g.m[i]);
    }
    g64.push_back(m);
  }
  T3 b{to_i64(base.x), to_i64(base.y), to_i64(base.z)};
  std::unordered_set<T3, T3Hash> visited;
  std::deque<std::pair<T3, int>> queue;
  visited.insert(b);
  queue.emplace_back(b, 0);
  std::uint64_t used = 0;
  while (!queue.empty()) {
    auto [pt, depth] = queue.front();
    queue.pop_front();
    if (depth >= max_depth) continue;
    if (!norm_le_i64(pt, envelope)) continue;
    for (const M3& g : g64) {
      if (++used > budget)
        throw BudgetExceeded("orbit enumeration exceeded node budget of " +
                             std::to_string(budget));
      T3 next = act_i64(pt, g);
      if (visited.insert(next).second) queue.emplace_back(next, depth + 1);
    }
  }
  std::vector<Triple> out;
  out.reserve(visited.size());
  for (const T3& t : visited)
    if (std::isinf(collect_T) ||
        norm_lt_i64(t, collect_T))
      out.push_back(Triple{Int(static_cast<long>(t.x)),
                           Int(static_cast<long>(t.y)),
                           Int(static_cast<long>(t.z))});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triple> bfs(const std::vector<Mat3>& gens, const Triple& base,
                        double collect_T, double envelope, int max_depth,
                        std::uint64_t budget) {
  try {
    return bfs_i64(gens, base, collect_T, envelope, max_depth, budget);
  } catch (const OverflowSignal&) {
    // Machine-word fast path overflowed; redo in arbitrary precision.
    return bfs_big(gens, base, collect_T, envelope, max_depth, budget);
  }
}

}  // namespace

bool norm_lt(const Triple& t, double T) {
  if (fits_i64(t.x) && fits_i64(t.y) && fits_i64(t.z)) {
    try {
      return norm_lt_i64(T3{to_i64(t.x), to_i64(t.y), to_i64(t.z)}, T);
    } catch (const OverflowSignal&) {
    }
  }
  return norm_lt_big(t, T);
}

void validate_presentation(const GroupPresentation& g) {
  for (const Mat3& m : g.generators) validate_generator(m);
  const Triple& b = g.base_point;
  if (b.x == 0 && b.y == 0 && b.z == 0)
    throw ValidationError("base point must not be the zero vector");
  if (q_form(b) != 0)
    throw ValidationError("base point must lie on the cone Q = 0");
}

std::vector<Mat3> symmetrized_generators(const GroupPresentation& g) {
  std::vector<Mat3> out;
  auto add = [&out](const Mat3& m) {
    for (const Mat3& o : out)
      if (o == m) return;
    out.push_back(m);
  };
  for (const Mat3& m : g.generators) {
    add(m);
    add(m.inverse());
  }
  return out;
}

std::vector<Triple> enumerate_orbit(const GroupPresentation& g,
                                    const EnumParams& p) {
  validate_presentation(g);
  if (!(p.T > 0)) throw ValidationError("radius T must be positive");
  if (!(p.slack >= 1)) throw ValidationError("slack must be >= 1");
  if (p.max_word_length <= 0)
    throw ValidationError("max_word_length must be positive");
  std::vector<Mat3> gens = symmetrized_generators(g);
  double envelope = std::isinf(p.slack) ? p.slack : p.slack * p.T;
  return bfs(gens, g.base_point, p.T, envelope, p.max_word_length,
             p.budget_nodes);
}

std::vector<Triple> enumerate_words(const GroupPresentation& g, int L,
                                    std::uint64_t budget_nodes) {
  validate_presentation(g);
  if (L < 0) throw ValidationError("word length must be non-negative");
  std::vector<Mat3> gens = symmetrized_generators(g);
  double inf = std::numeric_limits<double>::infinity();
  return bfs(gens, g.base_point, inf, inf, L, budget_nodes);
}

CountSeries count_ball(const GroupPresentation& g,
                       const std::vector<double>& radii, double slack,
                       int max_word_length, std::uint64_t budget_nodes) {
  if (radii.empty()) throw ValidationError("count_ball: no radii given");
  for (std::size_t i = 0; i + 1 < radii.size(); ++i)
    if (!(radii[i] < radii[i + 1]))
      throw ValidationError("count_ball: radii must be strictly increasing");
  EnumParams p;
  p.T = radii.back();
  p.slack = slack;
  p.max_word_length = max_word_length;
  p.budget_nodes = budget_nodes;
  std::vector<Triple> pts = enumerate_orbit(g, p);
  CountSeries s;
  for (double T : radii) {
    std::uint64_t n = 0;
    for (const Triple& t : pts)
      if (norm_lt(t, T)) ++n;
    s.entries.emplace_back(T, n);
  }
  return s;
}

PowerLawFit fit_exponent(const CountSeries& s) {
  std::vector<std::pair<double, double>> xy;
  for (const auto& [T, N] : s.entries)
    if (N >= 1 && T > 0) xy.emplace_back(std::log(T), std::log((double)N));
  if (xy.size() < 3)
    throw ValidationError(
        "fit_exponent: need at least 3 entries with N(T) >= 1");
  double n = (double)xy.size(), sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (auto& [x, y] : xy) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  double denom = n * sxx - sx * sx;
  PowerLawFit fit;
  if (denom == 0) {
    throw ValidationError("fit_exponent: degenerate abscissae");
  }
  fit.delta_hat = (n * sxy - sx * sy) / denom;
  double intercept = (sy - fit.delta_hat * sx) / n;
  fit.c_hat = std::exp(intercept);
  double ss_tot = syy - sy * sy / n;
  double ss_res = 0;
  for (auto& [x, y] : xy) {
    double e = y - (fit.delta_hat * x + intercept);
    ss_res += e * e;
  }
  fit.r_squared = (ss_tot > 0) ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace thinsieve
