#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace soficonv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "-7", or a plain decimal such as "1.625" into an exact rational.
Rational parse_rational(std::string_view text);

/// Parses a base-10 integer of arbitrary size.
Integer parse_integer(std::string_view text);

/// Canonical "p/q" text; integers print without a denominator.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Splits "a,b,c" into trimmed fields. Empty input gives an empty list.
std::vector<std::string> split_list(std::string_view text, char sep = ',');

/// Digit words are written either as "0121" (one character per digit) or
/// comma-separated "0,1,12" when some digit exceeds 9.
std::vector<int> parse_digits(std::string_view text);
std::string format_digits(const std::vector<int>& digits);

/// ceil(num / den) for positive den.
long ceil_div(long num, long den);

double to_double(const Rational& value);

}  // namespace soficonv
