#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zonal {

/// Exact rational scalar. Always stored in canonical (reduced, den > 0) form.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// "num/den" (integers print without the denominator, e.g. "3", "-1/2").
std::string to_string(const Rational& q);

/// Accepts "3", "-1/2", and finite decimals such as "0.25" (converted exactly).
Rational parse_rational(std::string_view text);

/// q^e for any integer e; throws on 0^negative.
Rational pow(const Rational& q, long e);

bool is_integer(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace zonal
