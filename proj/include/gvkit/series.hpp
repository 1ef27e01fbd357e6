#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gvkit/rational.hpp"

namespace gvkit {

// Formal variables a series can be written in. Algebra is identical for all
// of them; tags are compared at runtime so that a q-series is never silently
// multiplied by a Delta-series.
enum class Variable { lambda, q, t, Delta, delta };

std::string_view variable_name(Variable v);
Variable parse_variable(std::string_view name);

// Truncated Laurent series
//
//   f = sum_{k = min_exp}^{trunc} c_k x^k + O(x^{trunc + 1}).
//
// Coefficients above trunc are unknown, not zero. The window is kept
// normalized: the coefficient at min_exp is nonzero, and the zero series is
// represented by the empty window min_exp == trunc + 1.
class LaurentSeries {
 public:
  // Coefficients start at min_exp; any positions between the end of coeffs
  // and trunc are zero. Throws DomainError if coeffs overflow the window.
  LaurentSeries(Variable var, int min_exp, std::vector<Rational> coeffs, int trunc);

  static LaurentSeries zero(Variable var, int trunc);
  static LaurentSeries one(Variable var, int trunc);
  static LaurentSeries monomial(Variable var, int exponent, Rational coeff, int trunc);

  Variable variable() const { return var_; }
  int min_exp() const { return min_exp_; }
  int trunc() const { return trunc_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  // Lowest exponent with a nonzero coefficient; nullopt for the zero series.
  std::optional<int> valuation() const;

  // Coefficient of x^k. Zero below the window; WindowError above trunc.
  Rational coeff(int k) const;

  LaurentSeries operator-() const;
  LaurentSeries& operator*=(const Rational& s);

  // Same variable, same trunc and same coefficients.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

 private:
  void normalize();

  Variable var_;
  int min_exp_;
  int trunc_;
  std::vector<Rational> coeffs_;
};

LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries operator*(const Rational& s, const LaurentSeries& f);

// Cauchy product on the widest window both inputs justify:
// trunc = min(trunc_f + val_g, trunc_g + val_f).
LaurentSeries series_mul(const LaurentSeries& f, const LaurentSeries& g);

// Multiplicative inverse. The result starts at -min_exp(f) and is known up to
// trunc(f) - 2 min_exp(f). Throws DomainError for the zero series.
LaurentSeries series_invert(const LaurentSeries& f);

// Requires constant term 1 and no negative powers.
LaurentSeries series_log(const LaurentSeries& f);

// Requires zero constant term and no negative powers.
LaurentSeries series_exp(const LaurentSeries& f);

// Integer power; negative exponents go through series_invert.
LaurentSeries series_pow(const LaurentSeries& f, int exponent);

// Multiplication by x^s.
LaurentSeries series_shift(const LaurentSeries& f, int s);

// Drops knowledge above new_trunc; new_trunc must not exceed f.trunc().
LaurentSeries series_truncate(const LaurentSeries& f, int new_trunc);

// f(m(y)) for m = O(y) a series in y. The result is in m's variable.
// Throws DomainError if m has a nonzero constant term or negative powers.
LaurentSeries series_compose(const LaurentSeries& f, const LaurentSeries& m);

// Compositional inverse r of m = m_1 x + O(x^2), m_1 != 0, so that
// m(r(y)) = y; the result is written in result_var.
LaurentSeries series_reversion(const LaurentSeries& m, Variable result_var);

// True if f and g share a variable and agree on every exponent up to
// min(f.trunc(), g.trunc()).
bool agree_on_common_window(const LaurentSeries& f, const LaurentSeries& g);

}  // namespace gvkit
