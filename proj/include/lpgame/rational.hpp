#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace lpgame {

// Exact arithmetic throughout. mpq_class keeps every value in canonical
// form (gcd(|num|, den) = 1, den > 0, zero is 0/1) as long as values are
// created through make_rat / parse_rat; results of arithmetic on canonical
// operands are canonical again.
using Int = mpz_class;
using Rat = mpq_class;

/// Rational from numerator and denominator, reduced to canonical form.
/// Throws DimensionError-free std::invalid_argument on a zero denominator.
Rat make_rat(long num, long den = 1);
Rat make_rat(const Int& num, const Int& den);

/// Strict parse of "p", "-p", "p/q" or "-p/q" (decimal digits, q > 0).
/// Non-canonical inputs such as "2/4" are accepted and reduced.
std::optional<Rat> parse_rat(std::string_view text);

/// Renders as "p" or "p/q".
std::string rat_to_string(const Rat& value);

bool is_integer(const Rat& value);

}  // namespace lpgame
