#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace srg {

/// Arbitrary-precision rational, always reduced, denominator > 0.
using Rat = mpq_class;
/// Arbitrary-precision integer.
using Int = mpz_class;

/// Reduced rational from a numerator/denominator pair.
Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);

bool is_integer(const Rat& q);
Int floor_int(const Rat& q);
Int ceil_int(const Rat& q);

/// "p" or "p/q".
std::string to_string(const Rat& q);

/// Exact square root when q is the square of a rational, nullopt otherwise.
std::optional<Rat> rational_sqrt(const Rat& q);

/// Largest integer m with m <= c + sqrt(q); requires q >= 0.
Int floor_plus_sqrt(const Rat& c, const Rat& q);
/// Smallest integer m with m >= c - sqrt(q); requires q >= 0.
Int ceil_minus_sqrt(const Rat& c, const Rat& q);

}  // namespace srg
