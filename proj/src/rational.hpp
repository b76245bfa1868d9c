#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace fh {

// GMP-backed rationals are always kept in lowest terms with a positive
// denominator, which is the canonical form every report relies on.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using RatVector = std::vector<Rational>;

// Accepts "p/q" or "p" with an optional leading '-'; q must be positive.
// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// Reduced "p/q", or a bare integer when the denominator is 1.
std::string to_string(const Rational& value);

std::vector<std::string> to_strings(const RatVector& values);

}  // namespace fh
