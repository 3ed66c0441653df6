#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hvo {

using Rational = mpq_class;

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view s);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

// Canonical a/b.
Rational frac(long a, long b);
Rational factorial(int n);
Rational binomial(int n, int k);
Rational rpow(const Rational& r, int e);

} // namespace hvo
