#include "gvkit/series.hpp"

#include <algorithm>
#include <string>

#include "gvkit/error.hpp"

namespace gvkit {

namespace {

void require_same_variable(const LaurentSeries& f, const LaurentSeries& g, const char* op) {
  if (f.variable() != g.variable()) {
    throw VariableMismatch(std::string(op) + ": variables " + std::string(variable_name(f.variable())) +
                           " and " + std::string(variable_name(g.variable())) + " differ");
  }
}

// Valuation, or trunc + 1 for the zero series (f = O(x^{trunc+1})).
int order_of(const LaurentSeries& f) { return f.valuation().value_or(f.trunc() + 1); }

}  // namespace

std::string_view variable_name(Variable v) {
  switch (v) {
    case Variable::lambda: return "lambda";
    case Variable::q: return "q";
    case Variable::t: return "t";
    case Variable::Delta: return "Delta";
    case Variable::delta: return "delta";
  }
  return "?";
}

Variable parse_variable(std::string_view name) {
  if (name == "lambda" || name == "λ") return Variable::lambda;
  if (name == "q") return Variable::q;
  if (name == "t") return Variable::t;
  if (name == "Delta" || name == "Δ") return Variable::Delta;
  if (name == "delta" || name == "δ") return Variable::delta;
  throw ParseError("unknown series variable '" + std::string(name) + "'");
}

LaurentSeries::LaurentSeries(Variable var, int min_exp, std::vector<Rational> coeffs, int trunc)
    : var_(var), min_exp_(min_exp), trunc_(trunc), coeffs_(std::move(coeffs)) {
  const long window = static_cast<long>(trunc) - min_exp + 1;
  if (window < 0) {
    throw DomainError("series window [" + std::to_string(min_exp) + ", " + std::to_string(trunc) + "] is inverted");
  }
  if (static_cast<long>(coeffs_.size()) > window) {
    throw DomainError("series has " + std::to_string(coeffs_.size()) + " coefficients for a window of " +
                      std::to_string(window));
  }
  normalize();
}

void LaurentSeries::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_exp_ = trunc_ + 1;
    return;
  }
  min_exp_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  coeffs_.resize(static_cast<std::size_t>(trunc_ - min_exp_ + 1), Rational(0));
}

LaurentSeries LaurentSeries::zero(Variable var, int trunc) { return {var, trunc + 1, {}, trunc}; }

LaurentSeries LaurentSeries::one(Variable var, int trunc) { return monomial(var, 0, Rational(1), trunc); }

LaurentSeries LaurentSeries::monomial(Variable var, int exponent, Rational coeff, int trunc) {
  if (exponent > trunc) return zero(var, trunc);
  return {var, exponent, {std::move(coeff)}, trunc};
}

std::optional<int> LaurentSeries::valuation() const {
  if (coeffs_.empty()) return std::nullopt;
  return min_exp_;
}

Rational LaurentSeries::coeff(int k) const {
  if (k > trunc_) {
    throw WindowError("coefficient of " + std::string(variable_name(var_)) + "^" + std::to_string(k) +
                      " is beyond the truncation order " + std::to_string(trunc_));
  }
  if (k < min_exp_) return 0;
  return coeffs_[static_cast<std::size_t>(k - min_exp_)];
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  if (s == 0) normalize();
  return *this;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.var_ == b.var_ && a.trunc_ == b.trunc_ && a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
}

LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) {
  require_same_variable(f, g, "series add");
  const int trunc = std::min(f.trunc(), g.trunc());
  const int lo = std::min(order_of(f), order_of(g));
  if (lo > trunc) return LaurentSeries::zero(f.variable(), trunc);
  std::vector<Rational> c(static_cast<std::size_t>(trunc - lo + 1));
  for (int k = lo; k <= trunc; ++k) c[static_cast<std::size_t>(k - lo)] = f.coeff(k) + g.coeff(k);
  return {f.variable(), lo, std::move(c), trunc};
}

LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return f + (-g); }

LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) { return series_mul(f, g); }

LaurentSeries operator*(const Rational& s, const LaurentSeries& f) {
  LaurentSeries out = f;
  out *= s;
  return out;
}

LaurentSeries series_mul(const LaurentSeries& f, const LaurentSeries& g) {
  require_same_variable(f, g, "series_mul");
  const int vf = order_of(f);
  const int vg = order_of(g);
  const int trunc = std::min(f.trunc() + vg, g.trunc() + vf);
  const int lo = vf + vg;
  if (f.is_zero() || g.is_zero() || lo > trunc) return LaurentSeries::zero(f.variable(), trunc);
  const auto fc = f.coeffs();
  const auto gc = g.coeffs();
  std::vector<Rational> c(static_cast<std::size_t>(trunc - lo + 1));
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (fc[i] == 0) continue;
    for (std::size_t j = 0; j < gc.size() && i + j < c.size(); ++j) {
      c[i + j] += fc[i] * gc[j];
    }
  }
  return {f.variable(), lo, std::move(c), trunc};
}

LaurentSeries series_invert(const LaurentSeries& f) {
  if (f.is_zero()) throw DomainError("series_invert: zero leading coefficient (series is zero on its window)");
  const int v = f.min_exp();
  const auto a = f.coeffs();
  const std::size_t n_terms = a.size();
  const Rational inv_lead = Rational(1) / a[0];
  std::vector<Rational> b(n_terms);
  b[0] = inv_lead;
  for (std::size_t n = 1; n < n_terms; ++n) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += a[j] * b[n - j];
    b[n] = -inv_lead * acc;
  }
  return {f.variable(), -v, std::move(b), f.trunc() - 2 * v};
}

LaurentSeries series_log(const LaurentSeries& f) {
  if (f.is_zero() || f.min_exp() != 0 || f.coeff(0) != 1) {
    throw DomainError("series_log: constant term must be 1 with no negative powers");
  }
  const int top = f.trunc();
  std::vector<Rational> out(static_cast<std::size_t>(top + 1));
  for (int n = 1; n <= top; ++n) {
    Rational acc = n * f.coeff(n);
    for (int k = 1; k < n; ++k) acc -= k * out[static_cast<std::size_t>(k)] * f.coeff(n - k);
    out[static_cast<std::size_t>(n)] = acc / n;
  }
  return {f.variable(), 0, std::move(out), top};
}

LaurentSeries series_exp(const LaurentSeries& f) {
  if (f.trunc() < 0 || (!f.is_zero() && f.min_exp() < 1)) {
    throw DomainError("series_exp: constant term must be 0 with no negative powers");
  }
  const int top = f.trunc();
  std::vector<Rational> e(static_cast<std::size_t>(top + 1));
  e[0] = 1;
  for (int n = 1; n <= top; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += k * f.coeff(k) * e[static_cast<std::size_t>(n - k)];
    e[static_cast<std::size_t>(n)] = acc / n;
  }
  return {f.variable(), 0, std::move(e), top};
}

LaurentSeries series_pow(const LaurentSeries& f, int exponent) {
  if (exponent < 0) return series_pow(series_invert(f), -exponent);
  if (exponent == 0) {
    if (f.is_zero()) throw DomainError("series_pow: zero series to the power 0 has no known window");
    return LaurentSeries::one(f.variable(), f.trunc() - f.min_exp());
  }
  LaurentSeries result = f;
  LaurentSeries base = f;
  unsigned e = static_cast<unsigned>(exponent) - 1;
  while (e != 0) {
    if (e & 1U) result = series_mul(result, base);
    e >>= 1U;
    if (e != 0) base = series_mul(base, base);
  }
  return result;
}

LaurentSeries series_shift(const LaurentSeries& f, int s) {
  std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
  return {f.variable(), f.min_exp() + s, std::move(c), f.trunc() + s};
}

LaurentSeries series_truncate(const LaurentSeries& f, int new_trunc) {
  if (new_trunc > f.trunc()) {
    throw WindowError("series_truncate: cannot extend trunc " + std::to_string(f.trunc()) + " to " +
                      std::to_string(new_trunc));
  }
  if (f.is_zero() || new_trunc < f.min_exp()) return LaurentSeries::zero(f.variable(), new_trunc);
  const auto c = f.coeffs();
  std::vector<Rational> kept(c.begin(), c.begin() + (new_trunc - f.min_exp() + 1));
  return {f.variable(), f.min_exp(), std::move(kept), new_trunc};
}

LaurentSeries series_compose(const LaurentSeries& f, const LaurentSeries& m) {
  if (m.is_zero() || m.min_exp() < 1) {
    throw DomainError("series_compose: inner series must have zero constant term and no negative powers");
  }
  const Variable y = m.variable();
  const int vm = m.min_exp();
  // O(x^{trunc_f + 1}) becomes O(y^{(trunc_f + 1) vm}).
  int trunc = (f.trunc() + 1) * vm - 1;
  if (f.is_zero()) return LaurentSeries::zero(y, trunc);
  const int vf = f.min_exp();
  // m^k is known up to trunc_m + (k - 1) vm; the smallest k is the binding one.
  // A constant term of f does not involve m at all.
  int k_bind = vf;
  if (k_bind == 0) {
    k_bind = 1;
    while (k_bind <= f.trunc() && f.coeff(k_bind) == 0) ++k_bind;
  }
  if (k_bind <= f.trunc()) trunc = std::min(trunc, m.trunc() + (k_bind - 1) * vm);

  LaurentSeries power = vf == 0 ? LaurentSeries::one(y, trunc) : series_pow(m, vf);
  LaurentSeries acc = LaurentSeries::zero(y, power.trunc());
  bool first = true;
  for (int k = vf; k <= f.trunc(); ++k) {
    const Rational& c = f.coeff(k);
    if (c != 0) {
      LaurentSeries term = c * power;
      acc = first ? term : acc + term;
      first = false;
    }
    if (k < f.trunc()) power = series_mul(power, m);
  }
  if (trunc > acc.trunc()) trunc = acc.trunc();
  return series_truncate(acc, trunc);
}

LaurentSeries series_reversion(const LaurentSeries& m, Variable result_var) {
  if (m.is_zero() || m.min_exp() != 1) {
    throw DomainError("series_reversion: series must be m_1 x + O(x^2) with m_1 != 0");
  }
  const int top = m.trunc();
  // Lagrange inversion: [y^n] r = (1/n) [w^{n-1}] (w / m(w))^n.
  const LaurentSeries w_over_m = series_invert(series_shift(m, -1));
  std::vector<Rational> r(static_cast<std::size_t>(std::max(top, 0)));
  LaurentSeries power = w_over_m;
  for (int n = 1; n <= top; ++n) {
    r[static_cast<std::size_t>(n - 1)] = power.coeff(n - 1) / n;
    if (n < top) power = series_mul(power, w_over_m);
  }
  return {result_var, 1, std::move(r), top};
}

bool agree_on_common_window(const LaurentSeries& f, const LaurentSeries& g) {
  if (f.variable() != g.variable()) return false;
  const int top = std::min(f.trunc(), g.trunc());
  const int lo = std::min(order_of(f), order_of(g));
  for (int k = lo; k <= top; ++k) {
    if (f.coeff(k) != g.coeff(k)) return false;
  }
  return true;
}

}  // namespace gvkit
