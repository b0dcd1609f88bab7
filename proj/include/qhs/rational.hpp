#ifndef QHS_RATIONAL_HPP
#define QHS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qhs {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator, so structural equality is value equality.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", an integer, or a plain decimal such as "-0.125" or "1e-3".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& r);

/// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Rational& r, int digits);

/// r^e for any integer e (r must be nonzero when e < 0).
Rational pow(const Rational& r, long e);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Rational abs_value(const Rational& r) { return sgn(r) < 0 ? Rational(-r) : r; }

}  // namespace qhs

#endif  // QHS_RATIONAL_HPP
