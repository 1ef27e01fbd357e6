#include "gvkit/rational.hpp"

#include <cctype>
#include <limits>

#include "gvkit/error.hpp"

namespace gvkit {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer p(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(Integer(std::to_string(num)), Integer(std::to_string(den)));
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer floor_of(const Rational& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& x) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

std::int64_t to_int64(const Rational& x) {
  if (!is_integer(x)) throw DomainError("value " + to_string(x) + " is not an integer");
  const Integer& z = x.get_num();
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  if (z < lo || z > hi) throw DomainError("integer " + z.get_str() + " out of range");
  return std::stoll(z.get_str());
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational power(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return power(Rational(1) / base, -exponent);
  }
  Rational result(1);
  Rational b = base;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

int sign(const Rational& x) { return sgn(x); }

}  // namespace gvkit
