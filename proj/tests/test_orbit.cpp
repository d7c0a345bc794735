#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "core/orbit.hpp"
#include "core/presets.hpp"
#include "oracles.hpp"

using namespace thinsieve;

namespace {

GroupPresentation trivial_group() {
  GroupPresentation g;
  g.base_point = Triple{3, 4, 5};
  g.label = "trivial";
  return g;
}

std::set<Triple> as_set(const std::vector<Triple>& v) {
  return std::set<Triple>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("trivial group: singleton orbit") {
  EnumParams p;
  p.T = 10;
  auto pts = enumerate_orbit(trivial_group(), p);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == Triple{3, 4, 5});
}

TEST_CASE("enumerate_words basics") {
  CHECK(enumerate_words(trivial_group(), 0) ==
        std::vector<Triple>{Triple{3, 4, 5}});

  GroupPresentation g;
  g.base_point = Triple{3, 4, 5};
  g.generators.push_back(spin_lift(Mat2{1, 2, 0, 1}));
  auto pts = enumerate_words(g, 1);
  // {x0, x0 g, x0 g^-1}, deduplicated
  CHECK(pts.size() == 3);
  CHECK(as_set(pts).count(Triple{3, 4, 5}) == 1);
  CHECK(as_set(pts).count(Triple{-21, 20, 29}) == 1);
}

TEST_CASE("full-orbit at T = 100 equals the (u,v) oracle") {
  GroupConfig c = preset("full-orbit");
  EnumParams p = c.enum_defaults;
  p.T = 100;
  auto pts = enumerate_orbit(c.group, p);
  CHECK(as_set(pts) == oracles::uv_triples(100));
}

TEST_CASE("full-orbit counts match the oracle at 100 and 1000") {
  GroupConfig c = preset("full-orbit");
  CountSeries s = count_ball(c.group, {100, 1000}, c.enum_defaults.slack,
                             c.enum_defaults.max_word_length,
                             c.enum_defaults.budget_nodes);
  CHECK(s.entries[0].second == oracles::uv_triples(100).size());
  CHECK(s.entries[1].second == oracles::uv_triples(1000).size());
  CHECK(s.entries[0].second <= s.entries[1].second);  // monotone
}

TEST_CASE("count_ball on the trivial group") {
  CountSeries s = count_ball(trivial_group(), {5, 10});
  CHECK(s.entries[0].second == 0);  // ||(3,4,5)|| = sqrt(50) > 5
  CHECK(s.entries[1].second == 1);
}

TEST_CASE("schottky: pruned enumeration matches exhaustive words") {
  GroupConfig c = preset("schottky-demo");
  auto words = enumerate_words(c.group, 8);
  double inf = std::numeric_limits<double>::infinity();
  EnumParams p = c.enum_defaults;
  p.T = inf;
  p.slack = inf;
  p.max_word_length = 8;
  auto pruned = enumerate_orbit(c.group, p);
  CHECK(as_set(pruned) == as_set(words));
}

TEST_CASE("emitted points stay on the cone") {
  GroupConfig c = preset("schottky-demo");
  EnumParams p = c.enum_defaults;
  p.T = 1e6;
  for (const Triple& t : enumerate_orbit(c.group, p)) CHECK(q_form(t) == 0);
}

TEST_CASE("determinism: repeated runs agree") {
  GroupConfig c = preset("full-orbit");
  EnumParams p = c.enum_defaults;
  p.T = 500;
  CHECK(enumerate_orbit(c.group, p) == enumerate_orbit(c.group, p));
}

TEST_CASE("slack monotonicity: larger slack never yields fewer points") {
  GroupConfig c = preset("full-orbit");
  EnumParams p = c.enum_defaults;
  p.T = 2000;
  p.slack = 1.0;
  auto n1 = enumerate_orbit(c.group, p).size();
  p.slack = 2.0;
  auto n2 = enumerate_orbit(c.group, p).size();
  CHECK(n1 <= n2);
}

TEST_CASE("budget enforcement") {
  GroupConfig c = preset("full-orbit");
  EnumParams p = c.enum_defaults;
  p.T = 1e5;
  p.budget_nodes = 100;
  CHECK_THROWS_AS(enumerate_orbit(c.group, p), BudgetExceeded);
}

TEST_CASE("big-integer fallback is consistent with direct action") {
  // generator with entries beyond the 64-bit fast path after one step
  GroupPresentation g;
  Int big = Int("3037000500");  // ~ 2^31.5; squares overflow int64 in act
  Mat2 m{Int(1), 2 * big, Int(0), Int(1)};
  g.generators.push_back(spin_lift(m));
  g.base_point = Triple{3, 4, 5};
  auto pts = enumerate_words(g, 1);
  CHECK(pts.size() == 3);
  std::set<Triple> expect{g.base_point,
                          act(g.base_point, g.generators[0]),
                          act(g.base_point, g.generators[0].inverse())};
  CHECK(as_set(pts) == expect);
}

TEST_CASE("fit_exponent") {
  CountSeries s;
  for (double T : {10.0, 100.0, 1000.0})
    s.entries.emplace_back(T, (std::uint64_t)(T * T));
  PowerLawFit f = fit_exponent(s);
  CHECK(f.delta_hat == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(f.r_squared == doctest::Approx(1.0).epsilon(1e-9));

  CountSeries c;
  for (double T : {10.0, 100.0, 1000.0}) c.entries.emplace_back(T, 7);
  CHECK(fit_exponent(c).delta_hat == doctest::Approx(0.0));

  CountSeries bad;
  bad.entries.emplace_back(10.0, 5);
  CHECK_THROWS_AS(fit_exponent(bad), ValidationError);
}

TEST_CASE("validation errors") {
  GroupPresentation g;
  g.base_point = Triple{1, 1, 1};  // off cone
  EnumParams p;
  p.T = 10;
  CHECK_THROWS_AS(enumerate_orbit(g, p), ValidationError);
  GroupPresentation t = trivial_group();
  p.T = -1;
  CHECK_THROWS_AS(enumerate_orbit(t, p), ValidationError);
  p.T = 10;
  p.slack = 0.5;
  CHECK_THROWS_AS(enumerate_orbit(t, p), ValidationError);
}
