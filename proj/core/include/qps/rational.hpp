#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace qps {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses an integer literal or "p/r" (optional sign, r != 0). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

/// Least common multiple of the denominators; 1 for an empty list.
BigInt common_denominator(const std::vector<Rational>& values);

}  // namespace qps
