#pragma once

#include "ppj/exact/polynomial.hpp"

#include <string>
#include <unordered_map>

namespace ppj {

/// Quotient of polynomials. Representatives are not fully reduced (there is
/// no multivariate gcd); equality is decided by cross-multiplication.
///
/// Normal form: common monomial factors and exact polynomial quotients are
/// cancelled, and the denominator is made monic under grlex.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Rational& q) : num_(q), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(long k) : RationalFunction(Rational(k)) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit RationalFunction(Symbol s) : num_(s), den_(1) {}
    /// Throws std::domain_error when den is zero.
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction symbol(std::string_view name) { return RationalFunction(Symbol::base(name)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Value of a constant; throws std::logic_error otherwise.
    Rational constant_value() const;
    bool is_polynomial() const { return den_.is_constant(); }
    bool contains(Symbol s) const { return num_.contains(s) || den_.contains(s); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    /// Throws std::domain_error on division by the zero element.
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator-(RationalFunction a);

    RationalFunction pow(int k) const;

    /// Cross-multiplied equality.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    std::string to_string() const;

    double evaluate(const std::unordered_map<Symbol, double>& values) const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

using RatFunc = RationalFunction;

inline std::string to_string(const RationalFunction& r) { return r.to_string(); }

}  // namespace ppj
