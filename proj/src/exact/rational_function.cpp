#include "ppj/exact/rational_function.hpp"

#include <stdexcept>

namespace ppj {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw std::domain_error("division by zero");
    normalize();
}

void RationalFunction::normalize()
{
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den_.is_constant()) {
        Monomial common = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
        if (!common.is_one()) {
            num_ = num_.divide_by_monomial(common);
            den_ = den_.divide_by_monomial(common);
        }
    }
    if (!den_.is_constant()) {
        if (auto q = num_.divide_exact(den_)) {
            num_ = std::move(*q);
            den_ = Polynomial(1);
            return;
        }
    }
    Rational lc = den_.leading_coefficient();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RationalFunction::constant_value() const
{
    if (!is_constant()) throw std::logic_error("not a constant: " + to_string());
    return num_.constant_term() / den_.constant_term();
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o)
{
    if (o.num_.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else if (auto q = o.den_.divide_exact(den_)) {
        num_ = num_ * *q + o.num_;
        den_ = o.den_;
    } else if (auto r = den_.divide_exact(o.den_)) {
        num_ += o.num_ * *r;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o)
{
    if (num_.is_zero()) return *this;
    if (o.num_.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial(1);
        return *this;
    }
    if (o.den_.is_constant() && den_.is_constant()) {
        num_ = num_ * o.num_;
        num_ *= Rational(1) / o.den_.constant_term();
        return *this;
    }
    // Cross-cancel before multiplying to keep denominators small.
    Polynomial a = num_;
    Polynomial b = o.den_;
    Polynomial c = o.num_;
    Polynomial d = den_;
    if (!b.is_constant()) {
        if (auto q = a.divide_exact(b)) {
            a = std::move(*q);
            b = Polynomial(1);
        }
    }
    if (!d.is_constant()) {
        if (auto q = c.divide_exact(d)) {
            c = std::move(*q);
            d = Polynomial(1);
        }
    }
    num_ = a * c;
    den_ = d * b;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o)
{
    if (o.num_.is_zero()) throw std::domain_error("division by zero");
    return *this *= RationalFunction(o.den_, o.num_);
}

RationalFunction operator-(RationalFunction a)
{
    a.num_ *= Rational(-1);
    return a;
}

RationalFunction RationalFunction::pow(int k) const
{
    if (k < 0) return RationalFunction(1) / pow(-k);
    RationalFunction out(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
    return out;
}

bool operator==(const RationalFunction& a, const RationalFunction& b)
{
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunction::to_string() const
{
    if (den_.is_constant()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.size() > 1) n = "(" + n + ")";
    std::string d = den_.to_string();
    const bool bare_power = den_.size() == 1 && den_.leading_coefficient() == 1 &&
                            den_.leading_monomial().factors().size() == 1;
    if (!bare_power) d = "(" + d + ")";
    return n + "/" + d;
}

double RationalFunction::evaluate(const std::unordered_map<Symbol, double>& values) const
{
    return num_.evaluate(values) / den_.evaluate(values);
}

}  // namespace ppj
