#pragma once

#include <gmpxx.h>

#include <string>

namespace ppj {

/// Arbitrary-precision rational number, always kept in canonical form.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace ppj
