#ifndef DRAWKIT_RATIONAL_HPP
#define DRAWKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace drawkit {

/// Exact rational scalar used for every angle, winding, coordinate and radius.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

Rational floor(const Rational& r);
/// Fractional part in [0, 1).
Rational frac(const Rational& r);

double to_double(const Rational& r);

}  // namespace drawkit

#endif
