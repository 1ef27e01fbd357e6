#pragma once

#include "gvkit/rational.hpp"

namespace gvkit {

// p + q sqrt(r) with r >= 0.
struct QuadraticSurd {
  Rational p;
  Rational q;
  Rational r;
};

// Sign of p + q sqrt(r), decided by squaring with explicit sign cases.
int sign_surd(const Rational& p, const Rational& q, const Rational& r);
int sign_surd(const QuadraticSurd& x);

// Sign of p + q1 sqrt(r1) + q2 sqrt(r2).
int sign_surd2(const Rational& p, const Rational& q1, const Rational& r1, const Rational& q2, const Rational& r2);

// Sign of x - y.
int compare(const QuadraticSurd& x, const QuadraticSurd& y);

}  // namespace gvkit
