#pragma once

#include "ppj/exact/rational.hpp"
#include "ppj/exact/symbol.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ppj {

/// Power product x1^e1 * ... * xk^ek, kept sorted by symbol with positive
/// exponents only.
class Monomial {
public:
    using Factor = std::pair<Symbol, unsigned>;

    Monomial() = default;
    explicit Monomial(Symbol s, unsigned exp = 1);

    unsigned degree() const;
    unsigned degree_in(Symbol s) const;
    bool is_one() const { return factors_.empty(); }
    const std::vector<Factor>& factors() const { return factors_; }

    /// Divides out s^k; requires degree_in(s) >= k.
    Monomial without(Symbol s, unsigned k = 1) const;
    bool divides(const Monomial& other) const;
    /// other / this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const;
    static Monomial gcd(const Monomial& a, const Monomial& b);

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string() const;

private:
    std::vector<Factor> factors_;
};

/// Graded lexicographic order; the earliest symbol in the alphabet is the
/// most significant.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with rational coefficients. Zero
/// coefficients are never stored.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;
    Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
    explicit Polynomial(Symbol s);
    Polynomial(const Monomial& m, const Rational& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the empty monomial.
    Rational constant_term() const;
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Largest monomial under grlex. Precondition: nonzero.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;
    unsigned total_degree() const;
    unsigned degree_in(Symbol s) const;
    bool contains(Symbol s) const { return degree_in(s) > 0; }
    std::vector<Symbol> symbols() const;

    /// Coefficient of s^k when viewed as a polynomial in s.
    Polynomial coefficient_in(Symbol s, unsigned k) const;

    /// Greatest common monomial factor of all terms.
    Monomial monomial_content() const;
    Polynomial divide_by_monomial(const Monomial& m) const;

    /// Exact multivariate division: q with q * divisor == *this, if any.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

    Polynomial pow(unsigned k) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& k);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    /// Canonical rendering, terms in descending grlex order ("t^2-1").
    std::string to_string() const;

    /// Numeric evaluation; unbound symbols are an error.
    double evaluate(const std::unordered_map<Symbol, double>& values) const;

private:
    void add_term(const Monomial& m, const Rational& c);
    Terms terms_;
};

}  // namespace ppj
