#pragma once

#include "ppj/curvature/curvature.hpp"

#include <string>
#include <vector>

namespace ppj {

enum class AdmissibleKind { All, Empty, Single };

/// Solution set in L of s - L*t = 0 over all 81 defect components.
template <Scalar S>
struct AdmissibleSet {
    AdmissibleKind kind = AdmissibleKind::Empty;
    /// The unique admissible value (Single only).
    S value{};
    /// Expressions assumed nonvanishing to divide by t (exact mode).
    std::vector<S> conditions;
    /// Largest |s - L*t| over the 81 entries (float mode, Single only).
    double residual = 0.0;
    /// Why the set is empty, e.g. "entry (U,phiU,phiU)[U]: t = 0, s = ...".
    std::string obstruction;
};

/// Exact mode: All iff every (s, t) vanishes; Empty on an entry with t = 0
/// and s != 0 or on two entries forcing different values; otherwise Single
/// with each distinct denominator listed as a nonvanishing condition.
AdmissibleSet<RationalFunction> admissible_L(const AffineDefect<RationalFunction>& d);

/// Float mode: least-squares L over the entries with t != 0, accepted when
/// the residual is at most 1e-9 * scale.
AdmissibleSet<double> admissible_L(const AffineDefect<double>& d);

/// "(U,phiU,xi)[phiU]" style label of a defect index.
std::string defect_entry_label(std::size_t n);

}  // namespace ppj
