#include "ppj/derive/jets.hpp"

namespace ppj {

Polynomial differentiate(const Polynomial& p, Direction d)
{
    Polynomial out;
    for (const auto& [m, coeff] : p.terms()) {
        for (const auto& [s, e] : m.factors()) {
            if (s.is_constant()) continue;
            Monomial rest = m.without(s, 1) * Monomial(s.derivative(d));
            out += Polynomial(rest, coeff * e);
        }
    }
    return out;
}

RationalFunction differentiate(const RationalFunction& r, Direction d)
{
    if (r.is_polynomial()) return RationalFunction(differentiate(r.num(), d));
    // (n/q)' = (n' q - n q') / q^2
    const Polynomial& n = r.num();
    const Polynomial& q = r.den();
    return RationalFunction(differentiate(n, d) * q - n * differentiate(q, d), q * q);
}

RationalFunction apply_field(const FrameVector<RationalFunction>& v, const RationalFunction& f)
{
    RationalFunction out;
    for (int i = 0; i < 3; ++i) {
        const auto& coeff = v.c[static_cast<std::size_t>(i)];
        if (coeff.is_zero()) continue;
        out += coeff * differentiate(f, direction_of(i));
    }
    return out;
}

}  // namespace ppj
