#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flexcontact {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", a signed integer, or a finite decimal such as "1.25".
/// The result is canonical. Throws InvalidInput on anything else.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);
/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

Rational pow(const Rational& base, long exponent);

}  // namespace flexcontact
