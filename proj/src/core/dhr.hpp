#pragma once

#include <string>
#include <vector>

#include "error.hpp"

namespace thinsieve {

struct SieveConstants {
  int kappa = 1;
  double alpha = 2, beta = 2;
  double A = 0;  // (2 e^gamma)^kappa * Gamma(kappa+1)
};

// Registry: kappa in {1,4,5} -> (alpha, beta) from the tabulated values.
SieveConstants sieve_constants(int kappa);

// Uniform grid u_i = i*h for i = 1..n; delays of 1 and 2 land on grid nodes
// when 1/h is an integer.
struct SieveGrid {
  double h = 1e-4;
  double u_max = 0;
  SieveConstants c;
  std::vector<double> sigma;  // sigma(u_i)
  std::vector<double> F;      // F(u_i)
  std::vector<double> f;      // f(u_i)
  double at(const std::vector<double>& a, double u) const;  // linear interp
  double sigma_at(double u) const { return at(sigma, u); }
  double F_at(double u) const { return at(F, u); }
  double f_at(double u) const { return at(f, u); }
};

// sigma(u) = u^kappa / A on (0,2]; beyond, trapezoidal integration of
// (u^-kappa sigma)' = -kappa u^(-kappa-1) sigma(u-2).
SieveGrid solve_sigma(const SieveConstants& c, double u_max, double h = 1e-4);

// F = 1/sigma on (0, alpha]; f = 0 on (0, beta]; beyond:
// (u^kappa F)' = kappa u^(kappa-1) f(u-1) for u > alpha,
// (u^kappa f)' = kappa u^(kappa-1) F(u-1) for u > beta.
// The f equation activates at beta (the convention that restores
// monotonicity toward 1 and the classical kappa = 1 values).
SieveGrid solve_Ff(const SieveConstants& c, double u_max, double h = 1e-4);

enum class HorocycleMode { Any, Finite, Infinite };
HorocycleMode mode_from_string(const std::string& s);
std::string mode_name(HorocycleMode m);

struct MuTau {
  double mu = 0, tau = 0;
};
// any/infinite: mu = max(2/(d-t), 5/(d-1/2)), tau = min((d-t)/2d, (d-1/2)/5d)
// finite:      mu = 2/(d-t),                  tau = (d-t)/2d
MuTau compute_mu_tau(double delta, double theta, HorocycleMode mode);

// m(zeta) = mu(1 + z - z/beta) - 1 + (kappa+z) log(beta/z) - kappa + z*kappa/beta
double m_of_zeta(double zeta, double mu, double kappa, double beta);

struct RBound {
  double zeta_star = 0;
  double m_star = 0;
  long R = 0;
  bool near_integer = false;  // m_star within 1e-6 of an integer
};
// Coarse 1000-point log grid over (0, beta) + golden-section refinement.
RBound minimize_m(double mu, double kappa, double beta);

struct TableRow {
  std::string F;          // FH / FA / FC
  std::string mode;       // Any / Finite / Infinite
  double delta = 1;
  double theta = 0;
  std::string mu_printed;  // the rounded mu as printed
  std::string m_printed;   // the m prefix as printed
  long R_printed = 0;
  int kappa = 1;
  // computed:
  double mu = 0;     // exact limiting mu from compute_mu_tau
  double zeta_star = 0;
  double m_star = 0;
  long R = 0;
};

// The 21-row table: per row, exact mu from the (delta, theta, mode) limits,
// then minimize_m. theta = 39/64 rows are lattice comparisons and use the
// finite-mode formula.
std::vector<TableRow> r_table();

// True when m_star agrees with the printed decimal prefix: within 0.01, or
// truncates/rounds to exactly the printed digits.
bool matches_printed_m(double m_star, const std::string& printed);

// Infimum delta in (theta, 1] with min_zeta m(zeta; mu(delta), kappa, beta)
// < R_target, bisection to 1e-5. Throws ValidationError when unachievable
// at delta = 1.
double delta_threshold(long R_target, double theta, int kappa,
                       HorocycleMode mode);

struct IntegralCheck {
  double numeric = 0;
  double closed_form = 0;
  bool ok = false;
};
// numeric = (kappa / f(tau v)) * int_1^{v/u} F(tau v - s)(1 - (u/v)s) ds/s,
// closed_form = (kappa+zeta) log(beta/zeta) - kappa + zeta*kappa/beta under
// the parametrization tau*u = 1 + z - z/beta, tau*v = beta/z + beta - 1.
IntegralCheck integral_bound_check(double tau, double u, double v,
                                   const SieveGrid& grid, double zeta);

// Convenience: run the check at the canonical parametrization for (c, zeta)
// with tau = 1.
IntegralCheck integral_bound_check_at(const SieveConstants& c, double zeta,
                                      const SieveGrid& grid);

}  // namespace thinsieve
