#include "ppj/classify/admissible.hpp"

#include "ppj/exact/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace ppj {

std::string defect_entry_label(std::size_t n)
{
    auto name = [](std::size_t i) { return std::string(direction_name(static_cast<Direction>(i))); };
    const std::size_t m = n % 3;
    const std::size_t k = (n / 3) % 3;
    const std::size_t j = (n / 9) % 3;
    const std::size_t i = n / 27;
    return "(" + name(i) + "," + name(j) + "," + name(k) + ")[" + name(m) + "]";
}

AdmissibleSet<RationalFunction> admissible_L(const AffineDefect<RationalFunction>& d)
{
    AdmissibleSet<RationalFunction> out;
    const auto& entries = d.entries();
    if (std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.s.is_zero() && e.t.is_zero(); })) {
        out.kind = AdmissibleKind::All;
        return out;
    }
    std::optional<std::size_t> first;
    for (std::size_t n = 0; n < entries.size(); ++n) {
        const auto& e = entries[n];
        if (e.t.is_zero()) {
            if (!e.s.is_zero()) {
                out.kind = AdmissibleKind::Empty;
                out.obstruction = "entry " + defect_entry_label(n) + ": t = 0, s = " + e.s.to_string();
                return out;
            }
            continue;
        }
        RationalFunction candidate = e.s / e.t;
        if (!first) {
            first = n;
            out.value = candidate;
        } else if (!(candidate == out.value)) {
            out.kind = AdmissibleKind::Empty;
            out.obstruction = "entry " + defect_entry_label(*first) + " forces L = " + out.value.to_string() +
                              ", entry " + defect_entry_label(n) + " forces L = " + candidate.to_string();
            return out;
        }
        if (!e.t.is_constant()) {
            // Only the zero set matters; print it with a unit leading coefficient.
            const RationalFunction cond(e.t.num() * Polynomial(Rational(1 / e.t.num().leading_coefficient())));
            bool seen = std::any_of(out.conditions.begin(), out.conditions.end(),
                                    [&](const RationalFunction& c) { return factor_match(cond, c).has_value(); });
            if (!seen) out.conditions.push_back(cond);
        }
    }
    out.kind = AdmissibleKind::Single;
    return out;
}

AdmissibleSet<double> admissible_L(const AffineDefect<double>& d)
{
    AdmissibleSet<double> out;
    const auto& entries = d.entries();
    const double mag = std::max(1.0, d.magnitude());
    double st = 0.0;
    double tt = 0.0;
    bool any_t = false;
    for (const auto& e : entries) {
        if (is_zero(e.t, mag)) continue;
        any_t = true;
        st += e.s * e.t;
        tt += e.t * e.t;
    }
    const double value = any_t ? st / tt : 0.0;
    double residual = 0.0;
    double scale = 1.0;
    std::size_t worst = 0;
    for (std::size_t n = 0; n < entries.size(); ++n) {
        const auto& e = entries[n];
        const double r = std::abs(e.s - value * e.t);
        scale = std::max(scale, std::abs(e.s) + std::abs(value * e.t));
        if (r > residual) {
            residual = r;
            worst = n;
        }
    }
    if (!any_t) {
        if (residual <= kFloatZeroTolerance * scale) {
            out.kind = AdmissibleKind::All;
            return out;
        }
        out.kind = AdmissibleKind::Empty;
        out.obstruction = "entry " + defect_entry_label(worst) + ": t = 0, s = " +
                          ScalarTraits<double>::to_string(entries[worst].s);
        return out;
    }
    out.residual = residual;
    if (residual > kFloatZeroTolerance * scale) {
        out.kind = AdmissibleKind::Empty;
        out.obstruction = "least-squares L = " + ScalarTraits<double>::to_string(value) + " leaves residual " +
                          ScalarTraits<double>::to_string(residual) + " at entry " + defect_entry_label(worst);
        return out;
    }
    out.kind = AdmissibleKind::Single;
    out.value = value;
    return out;
}

}  // namespace ppj
