#include "ppj/exact/algebra.hpp"

#include <unordered_map>

namespace ppj {

namespace {

class PowerCache {
public:
    explicit PowerCache(const Bindings& b) : bindings_(b) {}

    // Returns nullptr when s is unbound.
    const RationalFunction* power(Symbol s, unsigned e)
    {
        auto bit = bindings_.find(s);
        if (bit == bindings_.end()) return nullptr;
        auto& powers = cache_[s];
        if (powers.empty()) powers.push_back(RationalFunction(1));
        while (powers.size() <= e) powers.push_back(powers.back() * bit->second);
        return &powers[e];
    }

private:
    const Bindings& bindings_;
    std::unordered_map<Symbol, std::vector<RationalFunction>> cache_;
};

RationalFunction substitute_poly(const Polynomial& p, PowerCache& cache)
{
    // Terms are grouped by their image denominator to avoid repeated
    // rational additions.
    RationalFunction total;
    Polynomial plain;
    for (const auto& [m, coeff] : p.terms()) {
        Monomial kept;
        RationalFunction factor(coeff);
        bool bound = false;
        for (const auto& [s, e] : m.factors()) {
            if (const auto* v = cache.power(s, e)) {
                factor *= *v;
                bound = true;
            } else {
                kept = kept * Monomial(s, e);
            }
        }
        if (!bound) {
            plain += Polynomial(kept, coeff);
        } else {
            total += factor * RationalFunction(Polynomial(kept, Rational(1)));
        }
    }
    return total + RationalFunction(plain);
}

}  // namespace

RationalFunction substitute(const Polynomial& p, const Bindings& bindings)
{
    PowerCache cache(bindings);
    return substitute_poly(p, cache);
}

RationalFunction substitute(const RationalFunction& e, const Bindings& bindings)
{
    if (bindings.empty()) return e;
    PowerCache cache(bindings);
    RationalFunction n = substitute_poly(e.num(), cache);
    RationalFunction d = substitute_poly(e.den(), cache);
    if (d.is_zero()) throw std::domain_error("substitution makes a denominator vanish");
    return n / d;
}

LinearSolution solve_for_power(const RationalFunction& rel, Symbol x, unsigned power)
{
    const Polynomial& n = rel.num();
    for (const auto& [m, c] : n.terms()) {
        unsigned d = m.degree_in(x);
        if (d != 0 && d != power) {
            throw NotLinearError("not linear in " + x.name() +
                                 (power == 1 ? std::string() : "^" + std::to_string(power)));
        }
    }
    Polynomial a = n.coefficient_in(x, power);
    if (a.is_zero()) {
        throw NotLinearError("not linear in " + x.name() + ": unknown does not occur");
    }
    Polynomial b = n.coefficient_in(x, 0);
    LinearSolution out{RationalFunction(-b, a), std::nullopt};
    if (!a.is_constant()) out.condition = RationalFunction(a);
    return out;
}

LinearSolution solve_linear(const RationalFunction& rel, Symbol x)
{
    if (rel.num().degree_in(x) != 1) throw NotLinearError("not linear in " + x.name());
    return solve_for_power(rel, x, 1);
}

std::optional<Rational> factor_match(const RationalFunction& e, const RationalFunction& tmpl)
{
    if (tmpl.is_zero()) {
        if (e.is_zero()) return Rational(1);
        return std::nullopt;
    }
    if (e.is_zero()) return std::nullopt;
    Polynomial lhs = e.num() * tmpl.den();
    Polynomial rhs = tmpl.num() * e.den();
    if (!(lhs.leading_monomial() == rhs.leading_monomial())) return std::nullopt;
    Rational k = lhs.leading_coefficient() / rhs.leading_coefficient();
    Polynomial scaled = rhs;
    scaled *= k;
    if (!(scaled == lhs)) return std::nullopt;
    return k;
}

RationalFunction substitute_power(const RationalFunction& e, Symbol x, unsigned power,
                                  const RationalFunction& value)
{
    auto apply = [&](const Polynomial& p) {
        RationalFunction out;
        for (const auto& [m, c] : p.terms()) {
            unsigned d = m.degree_in(x);
            unsigned q = d / power;
            unsigned r = d % power;
            Monomial rest = m.without(x, d) * Monomial(x, r);
            out += RationalFunction(Polynomial(rest, c)) * value.pow(static_cast<int>(q));
        }
        return out;
    };
    RationalFunction d = apply(e.den());
    if (d.is_zero()) throw std::domain_error("substitution makes a denominator vanish");
    return apply(e.num()) / d;
}

}  // namespace ppj
