#include "ppj/exact/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ppj {

Monomial::Monomial(Symbol s, unsigned exp)
{
    if (exp > 0) factors_.emplace_back(s, exp);
}

unsigned Monomial::degree() const
{
    unsigned d = 0;
    for (const auto& [s, e] : factors_) d += e;
    return d;
}

unsigned Monomial::degree_in(Symbol s) const
{
    for (const auto& [x, e] : factors_) {
        if (x == s) return e;
    }
    return 0;
}

Monomial Monomial::without(Symbol s, unsigned k) const
{
    Monomial out;
    for (const auto& [x, e] : factors_) {
        if (x == s) {
            if (e < k) throw std::logic_error("Monomial::without: exponent underflow");
            if (e > k) out.factors_.emplace_back(x, e - k);
        } else {
            out.factors_.emplace_back(x, e);
        }
    }
    return out;
}

bool Monomial::divides(const Monomial& other) const
{
    return std::all_of(factors_.begin(), factors_.end(),
                       [&](const Factor& f) { return other.degree_in(f.first) >= f.second; });
}

Monomial Monomial::quotient_of(const Monomial& other) const
{
    Monomial out = other;
    for (const auto& [s, e] : factors_) out = out.without(s, e);
    return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b)
{
    Monomial out;
    for (const auto& [s, e] : a.factors_) {
        unsigned m = std::min(e, b.degree_in(s));
        if (m > 0) out.factors_.emplace_back(s, m);
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial out;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
            out.factors_.push_back(*i++);
        } else if (i == a.factors_.end() || j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

std::string Monomial::to_string() const
{
    std::string out;
    for (const auto& [s, e] : factors_) {
        if (!out.empty()) out += '*';
        out += s.name();
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const
{
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) return da < db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].first != fb[i].first) {
            // The monomial carrying the earlier symbol is the larger one.
            return fb[i].first < fa[i].first;
        }
        if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
    }
    return fa.size() < fb.size();
}

Polynomial::Polynomial(const Rational& constant)
{
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(Symbol s) { terms_.emplace(Monomial(s), Rational(1)); }

Polynomial::Polynomial(const Monomial& m, const Rational& coeff)
{
    if (coeff != 0) terms_.emplace(m, coeff);
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const
{
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const
{
    if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const
{
    if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

unsigned Polynomial::total_degree() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

unsigned Polynomial::degree_in(Symbol s) const
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(s));
    return d;
}

std::vector<Symbol> Polynomial::symbols() const
{
    std::vector<Symbol> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& [s, e] : m.factors()) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Polynomial Polynomial::coefficient_in(Symbol s, unsigned k) const
{
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (m.degree_in(s) == k) out.add_term(m.without(s, k), c);
    }
    return out;
}

Monomial Polynomial::monomial_content() const
{
    if (terms_.empty()) return {};
    Monomial g = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
        g = Monomial::gcd(g, m);
        if (g.is_one()) break;
    }
    return g;
}

Polynomial Polynomial::divide_by_monomial(const Monomial& d) const
{
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (!d.divides(m)) throw std::logic_error("divide_by_monomial: not divisible");
        out.terms_.emplace(d.quotient_of(m), c);
    }
    return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const
{
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (divisor.is_constant()) {
        Polynomial q = *this;
        q *= Rational(1) / divisor.constant_term();
        return q;
    }
    const Monomial& lm = divisor.leading_monomial();
    const Rational& lc = divisor.leading_coefficient();
    Polynomial rem = *this;
    Polynomial quot;
    while (!rem.is_zero()) {
        const Monomial& rm = rem.leading_monomial();
        if (!lm.divides(rm)) return std::nullopt;
        Polynomial step(lm.quotient_of(rm), rem.leading_coefficient() / lc);
        quot += step;
        rem -= step * divisor;
    }
    return quot;
}

Polynomial Polynomial::pow(unsigned k) const
{
    Polynomial result(1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& k)
{
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= k;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string term;
        if (m.is_one()) {
            term = c.get_str();
        } else if (c == 1) {
            term = m.to_string();
        } else if (c == -1) {
            term = "-" + m.to_string();
        } else {
            term = c.get_str() + "*" + m.to_string();
        }
        if (!out.empty() && term.front() != '-') out += '+';
        out += term;
    }
    return out;
}

double Polynomial::evaluate(const std::unordered_map<Symbol, double>& values) const
{
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
        double v = c.get_d();
        for (const auto& [s, e] : m.factors()) {
            auto it = values.find(s);
            if (it == values.end()) {
                throw std::invalid_argument("evaluate: unbound symbol '" + s.name() + "'");
            }
            v *= std::pow(it->second, static_cast<double>(e));
        }
        total += v;
    }
    return total;
}

}  // namespace ppj
