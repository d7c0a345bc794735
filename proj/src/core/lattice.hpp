#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "error.hpp"

namespace thinsieve {

using Int = mpz_class;
using Rat = mpq_class;

struct Mat2 {
  Int a, b, c, d;
  Int det() const { return a * d - b * c; }
};

// Row-major 3x3 integer matrix acting on row vectors: t' = t * M.
struct Mat3 {
  std::array<Int, 9> m{};
  Int& at(int r, int c) { return m[3 * r + c]; }
  const Int& at(int r, int c) const { return m[3 * r + c]; }
  static Mat3 identity();
  Mat3 operator*(const Mat3& o) const;
  bool operator==(const Mat3& o) const { return m == o.m; }
  Int det() const;
  // Exact inverse via adjugate; requires det == 1.
  Mat3 inverse() const;
};

struct Triple {
  Int x, y, z;
  bool operator==(const Triple& o) const {
    return x == o.x && y == o.y && z == o.z;
  }
  bool operator<(const Triple& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
  }
};

enum class Poly { FH, FA, FC };

Poly poly_from_string(const std::string& s);
std::string poly_name(Poly f);
long poly_denominator(Poly f);       // 1, 12, 60
int poly_component_count(Poly f);    // 1, 4, 5
int poly_kappa(Poly f);              // 1, 4, 5

// Q(x,y,z) = x^2 + y^2 - z^2.
Int q_form(const Triple& t);

// (u,v) -> (u^2-v^2, 2uv, u^2+v^2); always on the cone.
Triple uv_param(const Int& u, const Int& v);

// Spin homomorphism SL2(Z) -> SO_Q(Z) for row-vector action.
// Requires det = 1 and a+b+c+d even (integrality of the /2 entries).
Mat3 spin_lift(const Mat2& g);

// Row action t' = t * M. Preserves q_form for Q-orthogonal M.
Triple act(const Triple& t, const Mat3& m);

// Checks det = 1 and M^T J M = J with J = diag(1,1,-1).
// Returns empty string on success, else a description of the failure.
std::string validate_generator_message(const Mat3& m);
void validate_generator(const Mat3& m);  // throws ValidationError

// z, xy/12, xyz/60. Throws ValidationError when the denominator does not
// divide the numerator.
Int eval_F(Poly f, const Triple& t);

}  // namespace thinsieve
