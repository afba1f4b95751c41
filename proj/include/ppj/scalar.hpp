#pragma once

#include "ppj/exact/rational_function.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ppj {

/// Absolute zero tolerance of the float ring, scaled by max(1, magnitude).
inline constexpr double kFloatZeroTolerance = 1e-9;
/// Divisors at or below this magnitude are rejected in the float ring.
inline constexpr double kFloatDivisionFloor = 1e-300;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<RationalFunction> {
    static constexpr bool exact = true;
    static RationalFunction from_rational(const Rational& q) { return RationalFunction(q); }
    static bool is_zero(const RationalFunction& a, double /*scale*/ = 1.0) { return a.is_zero(); }
    static double magnitude(const RationalFunction& a)
    {
        return a.is_constant() ? std::abs(a.constant_value().get_d()) : 0.0;
    }
    static RationalFunction divide(const RationalFunction& a, const RationalFunction& b) { return a / b; }
    static std::string to_string(const RationalFunction& a) { return a.to_string(); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static double from_rational(const Rational& q) { return q.get_d(); }
    static bool is_zero(double a, double scale = 1.0)
    {
        return std::abs(a) <= kFloatZeroTolerance * std::max(1.0, scale);
    }
    static double magnitude(double a) { return std::abs(a); }
    static double divide(double a, double b)
    {
        if (std::abs(b) <= kFloatDivisionFloor) throw std::domain_error("division by zero");
        return a / b;
    }
    static std::string to_string(double a)
    {
        std::ostringstream os;
        os.precision(17);
        os << a;
        return os.str();
    }
};

/// The two scalar rings: exact rational functions and binary64.
template <class S>
concept Scalar = requires(S a, S b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { ScalarTraits<S>::is_zero(a) } -> std::convertible_to<bool>;
};

template <Scalar S>
bool is_zero(const S& a, double scale = 1.0)
{
    return ScalarTraits<S>::is_zero(a, scale);
}

template <Scalar S>
S scalar(long num, long den = 1)
{
    return ScalarTraits<S>::from_rational(make_rational(num, den));
}

}  // namespace ppj
