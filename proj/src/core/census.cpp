#include "census.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "congruence.hpp"
#include "orbit.hpp"

namespace thinsieve {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Brent's cycle variant of Pollard rho; n must be odd composite, not a prime
// power handled upstream.
u64 brent_rho(u64 n) {
  if (n % 2 == 0) return 2;
  u64 c = 1;
  while (true) {
    u64 x = 2, y = 2, d = 1, q = 1;
    u64 ys = y;
    const u64 m = 128;
    u64 r = 1;
    auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      u64 k = 0;
      while (k < r && d == 1) {
        ys = y;
        u64 lim = std::min(m, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = gcd_u64(q, n);
        k += m;
      }
      r <<= 1;
    }
    if (d == n) {
      d = 1;
      do {
        ys = step(ys);
        d = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
    ++c;  // cycle degenerated; retry with a different constant
  }
}

const std::vector<long>& small_primes() {
  static const std::vector<long> p = primes_up_to(1'000'000);
  return p;
}

void factor_u64(u64 n, std::map<u64, int>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out[n]++;
    return;
  }
  u64 d = brent_rho(n);
  factor_u64(d, out);
  factor_u64(n / d, out);
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for all n < 2^64
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Factorization big_omega(const Int& n) {
  if (n == 0) throw ValidationError("big_omega: Omega(0) is undefined");
  Factorization r;
  r.n = n;
  Int m = abs(n);
  r.sign = sgn(n);
  std::map<Int, int> fac;
  if (m.fits_ulong_p()) {
    // 64-bit fast path: trial division by small primes, then Brent rho with
    // deterministic Miller-Rabin certification.
    u64 v = (u64)m.get_ui();
    for (long p : small_primes()) {
      if ((u64)p * (u64)p > v) break;
      if (p > 10'000) break;  // rho + certification covers the rest faster
      while (v % (u64)p == 0) {
        fac[Int(p)]++;
        v /= (u64)p;
      }
    }
    if (v > 1) {
      std::map<u64, int> f64;
      factor_u64(v, f64);
      for (auto& [p, e] : f64) fac[Int((unsigned long)p)] += e;
    }
    m = 1;
  }
  // trial division by primes up to 1e6 for oversize inputs
  for (long p : small_primes()) {
    if (m == 1 || Int(p) * p > m) break;
    while (m % p == 0) {
      fac[Int(p)]++;
      m /= p;
    }
  }
  if (m > 1) {
    {
      // beyond 64 bits: rho over mpz with probable-prime certification
      std::vector<Int> stack{m};
      gmp_randclass rng(gmp_randinit_default);
      rng.seed(12345);
      while (!stack.empty()) {
        Int v = stack.back();
        stack.pop_back();
        if (v == 1) continue;
        if (mpz_probab_prime_p(v.get_mpz_t(), 40) > 0) {
          fac[v]++;
          continue;
        }
        Int c = 1, x = 2, y = 2, d = 1;
        while (true) {
          x = (x * x + c) % v;
          y = (y * y + c) % v;
          y = (y * y + c) % v;
          d = gcd(abs(x - y), v);
          if (d == v) {
            c += 1;
            x = 2;
            y = 2;
            d = 1;
            continue;
          }
          if (d > 1) break;
        }
        stack.push_back(d);
        stack.push_back(v / d);
      }
    }
  }
  for (auto& [p, e] : fac) {
    r.factors.emplace_back(p, e);
    r.omega += e;
  }
  return r;
}

std::pair<std::vector<CensusRecord>, CensusSummary> census(
    const std::vector<Triple>& points, Poly F, const std::vector<long>& R_list,
    double T) {
  std::vector<CensusRecord> records;
  CensusSummary s;
  s.T = T;
  s.F = F;
  for (const Triple& t : points) {
    CensusRecord rec;
    rec.point = t;
    rec.F = F;
    rec.value = eval_F(F, t);
    ++s.total_points;
    if (rec.value == 0) {
      rec.zero_value = true;
      ++s.zero_flagged;
    } else {
      rec.omega = big_omega(rec.value).omega;
      s.omega_histogram[rec.omega]++;
      for (long R : R_list)
        if (rec.omega <= R) s.in_PR[R]++;
    }
    records.push_back(std::move(rec));
  }
  for (long R : R_list) s.in_PR.try_emplace(R, 0);
  return {std::move(records), std::move(s)};
}

std::vector<std::pair<double, double>> density_curve(
    const std::vector<CensusSummary>& summaries, long R, double delta_hat,
    double kappa) {
  if (summaries.size() < 3)
    throw ValidationError("density_curve: need at least 3 radii");
  std::vector<std::pair<double, double>> out;
  for (const CensusSummary& s : summaries) {
    auto it = s.in_PR.find(R);
    if (it == s.in_PR.end())
      throw ValidationError("density_curve: R not present in summary");
    double expect = std::pow(s.T, delta_hat) / std::pow(std::log(s.T), kappa);
    out.emplace_back(s.T, (double)it->second / expect);
  }
  return out;
}

std::string figure_csv(const std::vector<CensusRecord>& records) {
  std::ostringstream os;
  os << "# thinsieve figure schema v1\n";
  os << "x,y,z,omega,category\n";
  for (const CensusRecord& r : records) {
    std::string cat;
    if (r.zero_value) {
      cat = "zero";
    } else if (r.F == Poly::FH) {
      cat = (r.omega == 1) ? "prime" : "composite";
    } else {
      cat = (r.omega <= 4) ? "le4" : (r.omega == 5 ? "eq5" : "ge6");
    }
    os << r.point.x.get_str() << ',' << r.point.y.get_str() << ','
       << r.point.z.get_str() << ',' << (r.zero_value ? 0 : r.omega) << ','
       << cat << '\n';
  }
  return os.str();
}

}  // namespace thinsieve
