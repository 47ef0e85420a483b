#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace deadbeat {

/// Exact rational scalar: arbitrary-precision numerator and denominator,
/// always held in canonical reduced form.
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;

/// Reduced fraction num/den. den must be nonzero.
Rational rat(long num, long den = 1);

/// Parses "p/q", "p", or a plain decimal string. Decimals convert exactly:
/// "0.4" becomes 2/5. Scientific notation is rejected.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or just "p" for integers.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

}  // namespace deadbeat
