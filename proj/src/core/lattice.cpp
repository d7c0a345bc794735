#include "lattice.hpp"

namespace thinsieve {

Mat3 Mat3::identity() {
  Mat3 r;
  r.at(0, 0) = 1;
  r.at(1, 1) = 1;
  r.at(2, 2) = 1;
  return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Int s = 0;
      for (int k = 0; k < 3; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

Int Mat3::det() const {
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Mat3 Mat3::inverse() const {
  if (det() != 1)
    throw ValidationError("Mat3 inverse requires det = 1");
  Mat3 r;  // adjugate (cofactor transpose); det = 1 so this is the inverse
  auto cof = [&](int r0, int r1, int c0, int c1) -> Int {
    return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
  };
  r.at(0, 0) = cof(1, 2, 1, 2);
  r.at(0, 1) = -cof(0, 2, 1, 2);
  r.at(0, 2) = cof(0, 1, 1, 2);
  r.at(1, 0) = -cof(1, 2, 0, 2);
  r.at(1, 1) = cof(0, 2, 0, 2);
  r.at(1, 2) = -cof(0, 1, 0, 2);
  r.at(2, 0) = cof(1, 2, 0, 1);
  r.at(2, 1) = -cof(0, 2, 0, 1);
  r.at(2, 2) = cof(0, 1, 0, 1);
  return r;
}

Poly poly_from_string(const std::string& s) {
  if (s == "FH" || s == "F_H" || s == "hypotenuse") return Poly::FH;
  if (s == "FA" || s == "F_A" || s == "area") return Poly::FA;
  if (s == "FC" || s == "F_C" || s == "coordinates") return Poly::FC;
  throw ValidationError("unknown polynomial tag: " + s);
}

std::string poly_name(Poly f) {
  switch (f) {
    case Poly::FH: return "FH";
    case Poly::FA: return "FA";
    case Poly::FC: return "FC";
  }
  return "?";
}

long poly_denominator(Poly f) {
  switch (f) {
    case Poly::FH: return 1;
    case Poly::FA: return 12;
    case Poly::FC: return 60;
  }
  return 1;
}

int poly_component_count(Poly f) {
  switch (f) {
    case Poly::FH: return 1;
    case Poly::FA: return 4;
    case Poly::FC: return 5;
  }
  return 1;
}

int poly_kappa(Poly f) {
  switch (f) {
    case Poly::FH: return 1;
    case Poly::FA: return 4;
    case Poly::FC: return 5;
  }
  return 1;
}

Int q_form(const Triple& t) { return t.x * t.x + t.y * t.y - t.z * t.z; }

Triple uv_param(const Int& u, const Int& v) {
  return Triple{u * u - v * v, 2 * u * v, u * u + v * v};
}

Mat3 spin_lift(const Mat2& g) {
  if (g.det() != 1)
    throw ValidationError("spin_lift requires det = 1, got det = " +
                          g.det().get_str());
  const Int &a = g.a, &b = g.b, &c = g.c, &d = g.d;
  Int parity = a + b + c + d;
  if (parity % 2 != 0)
    throw ValidationError(
        "spin_lift parity error: a+b+c+d must be even for the half-integer "
        "entries to be integral");
  Int a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d;
  Mat3 r;
  r.at(0, 0) = (a2 - b2 - c2 + d2) / 2;
  r.at(0, 1) = a * b - c * d;
  r.at(0, 2) = (a2 + b2 - c2 - d2) / 2;
  r.at(1, 0) = a * c - b * d;
  r.at(1, 1) = a * d + b * c;
  r.at(1, 2) = a * c + b * d;
  r.at(2, 0) = (a2 - b2 + c2 - d2) / 2;
  r.at(2, 1) = a * b + c * d;
  r.at(2, 2) = (a2 + b2 + c2 + d2) / 2;
  return r;
}

Triple act(const Triple& t, const Mat3& m) {
  Triple r;
  r.x = t.x * m.at(0, 0) + t.y * m.at(1, 0) + t.z * m.at(2, 0);
  r.y = t.x * m.at(0, 1) + t.y * m.at(1, 1) + t.z * m.at(2, 1);
  r.z = t.x * m.at(0, 2) + t.y * m.at(1, 2) + t.z * m.at(2, 2);
  return r;
}

std::string validate_generator_message(const Mat3& m) {
  if (m.det() != 1) return "det = " + m.det().get_str() + ", expected 1";
  // M^T J M = J with J = diag(1,1,-1): check bilinear form preservation.
  static const int j[3] = {1, 1, -1};
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      Int s = 0;
      for (int k = 0; k < 3; ++k) s += m.at(p, k) * j[k] * m.at(q, k);
      Int expect = (p == q) ? Int(j[p]) : Int(0);
      if (s != expect)
        return "M^T J M != J at entry (" + std::to_string(p) + "," +
               std::to_string(q) + ")";
    }
  return "";
}

void validate_generator(const Mat3& m) {
  std::string msg = validate_generator_message(m);
  if (!msg.empty()) throw ValidationError("invalid generator: " + msg);
}

Int eval_F(Poly f, const Triple& t) {
  Int num;
  switch (f) {
    case Poly::FH: return t.z;
    case Poly::FA: num = t.x * t.y; break;
    case Poly::FC: num = t.x * t.y * t.z; break;
  }
  long den = poly_denominator(f);
  if (num % den != 0)
    throw ValidationError("eval_F divisibility error: " + std::to_string(den) +
                          " does not divide " + num.get_str() +
                          " (non-primitive or off-cone input?)");
  return num / den;
}

}  // namespace thinsieve
