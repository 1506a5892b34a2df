#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace birch {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Canonical "p/q" text; integers print without a denominator.
std::string to_string(const Rational& q);

/// Parses "p", "p/q" or a decimal literal ("0.125", "-3.5e2" is rejected).
/// Throws std::invalid_argument on malformed text.
Rational rational_from_string(std::string_view text);

/// Exact value of a finite double.
Rational rational_from_double(double x);

/// Best rational approximation of `x` with denominator at most `max_den`,
/// taken from the continued-fraction convergents and semiconvergents.
Rational best_rational(const Rational& x, const Integer& max_den);

Integer lcm_of_denominators(const RationalVector& values);

bool is_integer(const Rational& q);

}  // namespace birch
