#pragma once

#include "ppj/exact/rational_function.hpp"
#include "ppj/frame/frame.hpp"

namespace ppj {

/// Formal directional derivative along the frame field X_d. Every
/// non-constant symbol is a function whose derivative is the jet D_d(symbol);
/// jets of jets are fresh independent symbols.
Polynomial differentiate(const Polynomial& p, Direction d);
RationalFunction differentiate(const RationalFunction& r, Direction d);

/// V(f) for a vector field V = sum v_i X_i with function coefficients.
RationalFunction apply_field(const FrameVector<RationalFunction>& v, const RationalFunction& f);

inline Direction direction_of(int i) { return static_cast<Direction>(i); }

}  // namespace ppj
