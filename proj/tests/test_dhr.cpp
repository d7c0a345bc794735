#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/dhr.hpp"

using namespace thinsieve;

namespace {
constexpr double kGamma = 0.57721566490153286;
}

TEST_CASE("sieve_constants registry") {
  SieveConstants c1 = sieve_constants(1);
  CHECK(c1.alpha == 2.0);
  CHECK(c1.beta == 2.0);
  CHECK(c1.A == doctest::Approx(2.0 * std::exp(kGamma)).epsilon(1e-12));
  SieveConstants c4 = sieve_constants(4);
  CHECK(c4.alpha == 11.5317);
  CHECK(c4.beta == 9.0722);
  SieveConstants c5 = sieve_constants(5);
  CHECK(c5.alpha == 14.7735);
  CHECK(c5.beta == 11.5347);
  CHECK_THROWS_AS(sieve_constants(3), ValidationError);
}

TEST_CASE("sigma_1 closed form on (0,2]") {
  SieveGrid g = solve_sigma(sieve_constants(1), 8.0);
  CHECK(g.sigma_at(2.0) == doctest::Approx(std::exp(-kGamma)).epsilon(1e-9));
  CHECK(g.sigma_at(1.0) ==
        doctest::Approx(1.0 / (2.0 * std::exp(kGamma))).epsilon(1e-9));
  // exact on grid nodes
  for (double u : {0.5, 1.0, 1.5, 2.0})
    CHECK(g.sigma_at(u) ==
          doctest::Approx(u / (2.0 * std::exp(kGamma))).epsilon(1e-12));
  // continuity across u = 2
  CHECK(g.sigma_at(2.0 + 1e-4) == doctest::Approx(g.sigma_at(2.0)).epsilon(1e-3));
}

TEST_CASE("sigma step-halving self-consistency") {
  for (int kappa : {1, 4}) {
    SieveConstants c = sieve_constants(kappa);
    double umax = c.alpha + 2;
    double h = 1e-3;
    SieveGrid a = solve_sigma(c, umax, h);
    SieveGrid b = solve_sigma(c, umax, h / 2);
    CHECK(std::abs(a.sigma.back() - b.sigma.back()) < 10 * h);
  }
}

TEST_CASE("F and f: boundary values, monotonicity, envelopes") {
  SieveConstants c = sieve_constants(1);
  SieveGrid g = solve_Ff(c, 10.0);
  CHECK(g.F_at(2.0) == doctest::Approx(std::exp(kGamma)).epsilon(1e-9));
  for (double u : {0.5, 1.0, 1.9, 2.0}) CHECK(g.f_at(u) == 0.0);
  // monotone decreasing / increasing past the activation points
  std::size_t ia = (std::size_t)std::llround(c.alpha / g.h);
  for (std::size_t i = ia; i + 1 < g.F.size(); ++i) {
    CHECK(g.F[i + 1] <= g.F[i] + 1e-12);
    CHECK(g.f[i + 1] >= g.f[i] - 1e-12);
    CHECK(g.F[i] >= g.f[i] - 1e-6);
  }
  // both within 0.02 of 1 by alpha + 5
  CHECK(std::abs(g.F_at(c.alpha + 5) - 1.0) < 0.02);
  CHECK(std::abs(g.f_at(c.alpha + 5) - 1.0) < 0.02);
  CHECK(g.F_at(c.alpha + 5) > 0.9);
  CHECK(g.F_at(c.alpha + 5) < 1.1);
}

TEST_CASE("F and f monotone for kappa = 4, 5 (truncated-registry tolerance)") {
  for (int kappa : {4, 5}) {
    SieveConstants c = sieve_constants(kappa);
    SieveGrid g = solve_Ff(c, c.alpha + 8);
    std::size_t ia = (std::size_t)std::llround(c.alpha / g.h);
    for (std::size_t i = ia; i + 1 < g.F.size(); ++i) {
      // alpha, beta are four-decimal truncations, so the solved pair can
      // drift past the exact fixed point by O(1e-4) near the far end.
      CHECK(g.F[i + 1] <= g.F[i] + 2e-4);
      CHECK(g.f[i + 1] >= g.f[i] - 2e-4);
      CHECK(g.F[i] >= g.f[i] - 2e-4);
    }
  }
}

TEST_CASE("compute_mu_tau") {
  CHECK(compute_mu_tau(1.0, 5.0 / 6, HorocycleMode::Any).mu ==
        doctest::Approx(12.0).epsilon(1e-12));
  CHECK(compute_mu_tau(1.0, 0.5, HorocycleMode::Finite).mu ==
        doctest::Approx(4.0).epsilon(1e-12));
  CHECK(compute_mu_tau(1.0, 39.0 / 64, HorocycleMode::Finite).mu ==
        doctest::Approx(5.12).epsilon(1e-12));
  CHECK(compute_mu_tau(1.0, 0.5, HorocycleMode::Infinite).mu ==
        doctest::Approx(10.0).epsilon(1e-12));
  MuTau mt = compute_mu_tau(1.0, 5.0 / 6, HorocycleMode::Any);
  CHECK(mt.tau == doctest::Approx(1.0 / 12).epsilon(1e-12));
  CHECK_THROWS_AS(compute_mu_tau(0.9, 0.95, HorocycleMode::Any),
                  ValidationError);
  CHECK_THROWS_AS(compute_mu_tau(1.0, 0.3, HorocycleMode::Any),
                  ValidationError);
}

TEST_CASE("m_of_zeta spot values") {
  CHECK(m_of_zeta(0.1203, 12, 1, 2) == doctest::Approx(13.93).epsilon(0.001));
  CHECK(m_of_zeta(0.292, 4, 1, 2) == doctest::Approx(5.216).epsilon(0.001));
  CHECK(m_of_zeta(0.238, 5.12, 1, 2) == doctest::Approx(6.48).epsilon(0.002));
  CHECK_THROWS_AS(m_of_zeta(0, 12, 1, 2), ValidationError);
  CHECK_THROWS_AS(m_of_zeta(2.5, 12, 1, 2), ValidationError);
}

TEST_CASE("m_of_zeta is convex in log zeta near the minimum") {
  double mu = 12, beta = 2;
  double prev2 = 0, prev1 = 0;
  int i = 0;
  for (double lz = std::log(0.01); lz < std::log(1.5); lz += 0.05, ++i) {
    double m = m_of_zeta(std::exp(lz), mu, 1, beta);
    if (i >= 2) CHECK(prev2 - 2 * prev1 + m > 0);
    prev2 = prev1;
    prev1 = m;
  }
}

TEST_CASE("minimize_m spot values") {
  RBound a = minimize_m(12, 1, 2);
  CHECK(a.zeta_star == doctest::Approx(0.1203).epsilon(0.005));
  CHECK(a.m_star == doctest::Approx(13.931).epsilon(0.0005));
  CHECK(a.R == 14);
  RBound b = minimize_m(12, 4, 9.0722);
  CHECK(b.R == 25);
  CHECK(matches_printed_m(b.m_star, "24.9"));
  RBound c = minimize_m(12, 5, 11.5347);
  CHECK(c.R == 29);
  CHECK(matches_printed_m(c.m_star, "28.7"));
}

TEST_CASE("r_table reproduces all 21 printed rows") {
  std::vector<TableRow> rows = r_table();
  REQUIRE(rows.size() == 21);
  static const long expect_R[21] = {14, 14, 7,  6,  6,  12, 12, 25, 25, 16, 14,
                                    14, 23, 23, 29, 29, 19, 17, 17, 26, 26};
  for (int i = 0; i < 21; ++i) {
    CAPTURE(i);
    CHECK(rows[i].R == expect_R[i]);
    CHECK(rows[i].R == rows[i].R_printed);
    CHECK(matches_printed_m(rows[i].m_star, rows[i].m_printed));
  }
}

TEST_CASE("delta_threshold") {
  CHECK(delta_threshold(14, 5.0 / 6, 1, HorocycleMode::Any) ==
        doctest::Approx(0.9992).epsilon(0.002));
  CHECK(delta_threshold(6, 0.5, 1, HorocycleMode::Finite) ==
        doctest::Approx(0.9265).epsilon(0.002));
  // monotone: larger target -> smaller or equal threshold
  double d14 = delta_threshold(14, 5.0 / 6, 1, HorocycleMode::Any);
  double d15 = delta_threshold(15, 5.0 / 6, 1, HorocycleMode::Any);
  CHECK(d15 <= d14);
  CHECK_THROWS_AS(delta_threshold(5, 5.0 / 6, 1, HorocycleMode::Any),
                  ValidationError);
}

TEST_CASE("integral_bound_check") {
  SieveConstants c = sieve_constants(1);
  SieveGrid g = solve_Ff(c, 12.0);
  IntegralCheck r = integral_bound_check_at(c, 0.25, g);
  CHECK(r.ok);
  CHECK(r.numeric <= r.closed_form + 1e-6);
  // degenerate u = v: empty integration range
  IntegralCheck d = integral_bound_check(1.0, 10.0, 10.0, g, 0.25);
  CHECK(d.numeric == 0.0);
  CHECK(d.ok);
  // grid too short
  CHECK_THROWS_AS(integral_bound_check(1.0, 2.0, 100.0, g, 0.25),
                  NumericError);
}
