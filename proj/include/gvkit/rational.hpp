#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gvkit {

// Exact rational scalar. GMP keeps the results of arithmetic canonical
// (lowest terms, positive denominator); every constructor path in this
// library canonicalizes explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q", "p", or "-p/q". Throws ParseError on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& x);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

bool is_integer(const Rational& x);
Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);

// Narrowing conversion; throws DomainError when x is not an integer that
// fits in 64 bits.
std::int64_t to_int64(const Rational& x);

Integer binomial(std::int64_t n, std::int64_t k);
Rational power(const Rational& base, std::int64_t exponent);

// Three-way sign: -1, 0, or 1.
int sign(const Rational& x);

}  // namespace gvkit
