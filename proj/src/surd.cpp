#include "gvkit/surd.hpp"

#include "gvkit/error.hpp"

namespace gvkit {

int sign_surd(const Rational& p, const Rational& q, const Rational& r) {
  if (r < 0) throw DomainError("square root of a negative number");
  const int sp = sign(p);
  const int sq = r == 0 ? 0 : sign(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: the larger square wins.
  const Rational lhs = p * p;
  const Rational rhs = q * q * r;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sp : sq;
}

int sign_surd(const QuadraticSurd& x) { return sign_surd(x.p, x.q, x.r); }

int sign_surd2(const Rational& p, const Rational& q1, const Rational& r1, const Rational& q2, const Rational& r2) {
  if (r2 < 0) throw DomainError("square root of a negative number");
  const int sx = sign_surd(p, q1, r1);
  const int sy = r2 == 0 ? 0 : sign(q2);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // x = p + q1 sqrt(r1) and y = q2 sqrt(r2) have opposite signs; compare
  // x^2 - y^2 = (p^2 + q1^2 r1 - q2^2 r2) + 2 p q1 sqrt(r1).
  const int diff = sign_surd(p * p + q1 * q1 * r1 - q2 * q2 * r2, 2 * p * q1, r1);
  if (diff == 0) return 0;
  return diff > 0 ? sx : sy;
}

int compare(const QuadraticSurd& x, const QuadraticSurd& y) {
  return sign_surd2(x.p - y.p, x.q, x.r, -y.q, y.r);
}

}  // namespace gvkit
