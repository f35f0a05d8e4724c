#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nilsys {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rational &q);
std::string to_string(const Vector &v);

/// Parses "p", "-p", "p/q" (whitespace not allowed). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector &v);

Vector operator+(const Vector &a, const Vector &b);
Vector operator-(const Vector &a, const Vector &b);
Vector operator-(const Vector &a);
Vector operator*(const Rational &s, const Vector &v);
Rational dot(const Vector &a, const Vector &b);

bool is_integral(const Rational &q);
Integer floor(const Rational &q);
Integer ceil(const Rational &q);

/// Nonnegative generator of the additive group a·Z + b·Z (gcd(0,0) = 0).
Rational gcd(const Rational &a, const Rational &b);
Integer lcm_of_denominators(const Vector &v);

/// Exact power q^e for integer e (negative allowed when q != 0).
Rational pow(const Rational &q, long e);

} // namespace nilsys
