#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wreath {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "3", "-3/2", "+7" (also accepts U+2212 as the minus sign).
/// Throws Error(InvalidInput) on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor_div(const Rational& q);

}  // namespace wreath
