#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gkz::exact {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// n! for n >= 0; DomainError otherwise.
Integer factorial(const Integer& n);

/// Product (lo+1)(lo+2)...(hi) = hi!/lo!, 1 when hi <= lo.
Integer rising_block(const Integer& lo, const Integer& hi);

Integer gcd(const IntVector& v);

/// Divides by the gcd and flips the sign so the first nonzero entry is
/// positive. The zero vector is returned unchanged.
IntVector primitive(IntVector v);

/// Least common multiple of the denominators.
Integer common_denominator(const RatVector& v);

/// Exponent arithmetic. Exponents are machine integers; overflow throws
/// std::overflow_error instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t to_exponent(const Integer& z);

}  // namespace gkz::exact
