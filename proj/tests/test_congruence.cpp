#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "core/congruence.hpp"
#include "core/presets.hpp"

using namespace thinsieve;

namespace {

GroupPresentation trivial_group() {
  GroupPresentation g;
  g.base_point = Triple{3, 4, 5};
  g.label = "trivial";
  return g;
}

const GroupPresentation& full_orbit() {
  static GroupPresentation g = preset("full-orbit").group;
  return g;
}

}  // namespace

TEST_CASE("cone_points_mod_p cardinalities") {
  CHECK(cone_points_mod_p(3).size() == 8);
  CHECK(cone_points_mod_p(5).size() == 24);
  for (long p : {3L, 5L, 7L, 11L, 13L})
    CHECK(cone_points_mod_p(p).size() == (std::size_t)(p * p - 1));
}

TEST_CASE("orbit_mod_q basics") {
  OrbitModQ t = orbit_mod_q(trivial_group(), 7);
  REQUIRE(t.points.size() == 1);
  CHECK(t.points[0] == Res3{3, 4, 5});

  OrbitModQ m2 = orbit_mod_q(full_orbit(), 2);
  CHECK(std::count(m2.points.begin(), m2.points.end(), Res3{1, 0, 1}) == 1);
}

TEST_CASE("orbit mod p is the projective half of the cone") {
  // Observed cardinality: (p^2-1)/2 for every odd p. The spin image lies in
  // the index-2 spinor kernel of SO(2,1)(F_p), so exactly one of the two
  // scalar-equivalent halves of the cone is reached.
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    OrbitModQ o = orbit_mod_q(full_orbit(), p);
    CHECK(o.points.size() == (std::size_t)((p * p - 1) / 2));
  }
}

TEST_CASE("local densities: exact values and oracle agreement") {
  CHECK(local_density(full_orbit(), Poly::FH, 13) == Rat(1, 7));
  CHECK(local_density(full_orbit(), Poly::FC, 13) == Rat(3, 7));
  for (long p : {7L, 11L, 19L, 23L, 31L, 43L})  // p = 3 mod 4
    CHECK(local_density(full_orbit(), Poly::FH, p) == 0);
  for (long p : {7L, 11L, 13L, 17L, 19L, 23L})
    for (Poly f : {Poly::FH, Poly::FA, Poly::FC}) {
      CHECK(local_density(full_orbit(), f, p) == cone_density_oracle(f, p));
      CHECK(local_density(full_orbit(), f, p) == closed_form_density(f, p));
    }
}

TEST_CASE("F_C congruence labeling: oracle verdict") {
  // 6/(p+1) occurs exactly when -1 is a square mod p (p = 1 mod 4): the
  // third coordinate line count is 6(p-1) there and 4(p-1) otherwise.
  auto rat = [](long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
  };
  CHECK(cone_density_oracle(Poly::FC, 13) == rat(6, 14));
  CHECK(cone_density_oracle(Poly::FC, 7) == rat(4, 8));
  CHECK(cone_density_oracle(Poly::FC, 17) == rat(6, 18));
  CHECK(cone_density_oracle(Poly::FC, 11) == rat(4, 12));
}

TEST_CASE("multiplicativity on coprime unramified pairs") {
  CHECK(verify_multiplicativity(full_orbit(), Poly::FA, 13, 17));
  CHECK(verify_multiplicativity(full_orbit(), Poly::FH, 13, 29));
  CHECK(verify_multiplicativity(full_orbit(), Poly::FC, 7, 11));
  CHECK(local_density(full_orbit(), Poly::FA, 1) == Rat(1));  // g(1) = 1
  CHECK_THROWS_AS(verify_multiplicativity(full_orbit(), Poly::FA, 6, 10),
                  ValidationError);
}

TEST_CASE("CRT projection compatibility") {
  OrbitModQ big = orbit_mod_q(full_orbit(), 13 * 17);
  OrbitModQ a = orbit_mod_q(full_orbit(), 13);
  OrbitModQ b = orbit_mod_q(full_orbit(), 17);
  CHECK(big.points.size() == a.points.size() * b.points.size());
  std::set<Res3> pa, pb;
  for (const Res3& t : big.points) {
    pa.insert(Res3{t[0] % 13, t[1] % 13, t[2] % 13});
    pb.insert(Res3{t[0] % 17, t[1] % 17, t[2] % 17});
  }
  CHECK(pa == std::set<Res3>(a.points.begin(), a.points.end()));
  CHECK(pb == std::set<Res3>(b.points.begin(), b.points.end()));
}

TEST_CASE("ramification detection") {
  RamificationReport full = detect_ramified_primes(full_orbit(), 29);
  CHECK(full.two_reported);
  CHECK(full.odd_primes.empty());

  RamificationReport triv = detect_ramified_primes(trivial_group(), 20);
  CHECK(triv.odd_primes == std::vector<long>({3, 5, 7, 11, 13, 17, 19}));

  // prefix property
  RamificationReport small = detect_ramified_primes(trivial_group(), 10);
  CHECK(std::equal(small.odd_primes.begin(), small.odd_primes.end(),
                   triv.odd_primes.begin()));
}

TEST_CASE("strong primitivity") {
  CHECK(check_strong_primitivity(full_orbit(), Poly::FA, 1000).ok);
  CHECK(check_strong_primitivity(full_orbit(), Poly::FC, 1000).ok);
  CHECK(check_strong_primitivity(full_orbit(), Poly::FH, 1000).ok);
  PrimitivityResult r =
      check_strong_primitivity(trivial_group(), Poly::FH, 10);
  CHECK(!r.ok);
  CHECK(r.failing_q == 5);
}

TEST_CASE("sieve dimension fit") {
  CHECK(sieve_dimension_fit(Poly::FH, 1'000'000) == doctest::Approx(1.0).epsilon(0.1));
  CHECK(sieve_dimension_fit(Poly::FA, 1'000'000) == doctest::Approx(4.0).epsilon(0.05));
  CHECK(sieve_dimension_fit(Poly::FC, 1'000'000) == doctest::Approx(5.0).epsilon(0.05));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(orbit_mod_q(full_orbit(), 1), ValidationError);
  CHECK_THROWS_AS(detect_ramified_primes(full_orbit(), 1), ValidationError);
}
