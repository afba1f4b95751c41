#pragma once

#include "ppj/classify/admissible.hpp"

#include <optional>
#include <string_view>

namespace ppj {

enum class VerdictKind { ProperPseudoParallel, SemiParallelOnly, Degenerate, NotPseudoParallel };

std::string_view to_string(VerdictKind k);

template <Scalar S>
struct Verdict {
    VerdictKind kind = VerdictKind::NotPseudoParallel;
    /// Admissible L for ProperPseudoParallel and SemiParallelOnly.
    std::optional<S> L;
    std::vector<S> conditions;
    double residual = 0.0;
    std::string obstruction;
    bool hopf = false;
    bool jacobi_zero = false;
    bool commutes = false;
};

/// Single with L != 0 is proper, L = 0 semi-parallel only; All and l = 0
/// are degenerate; Empty is not pseudo-parallel.
template <Scalar S>
Verdict<S> verdict(const PointData<S>& p)
{
    Verdict<S> v;
    const auto a = shape_from_spec(p);
    const auto l = jacobi_l(p.c(), a);
    v.hopf = p.is_hopf();
    v.commutes = commutes_with_phi(a);
    v.jacobi_zero = l.is_zero(std::max(1.0, p.magnitude() * p.magnitude()));

    const auto set = admissible_L(defect_affine(p.c(), a));
    v.conditions = set.conditions;
    v.residual = set.residual;
    v.obstruction = set.obstruction;
    if (v.jacobi_zero || set.kind == AdmissibleKind::All) {
        v.kind = VerdictKind::Degenerate;
        return v;
    }
    if (set.kind == AdmissibleKind::Empty) {
        v.kind = VerdictKind::NotPseudoParallel;
        return v;
    }
    v.L = set.value;
    v.kind = is_zero(set.value) ? VerdictKind::SemiParallelOnly : VerdictKind::ProperPseudoParallel;
    return v;
}

}  // namespace ppj
