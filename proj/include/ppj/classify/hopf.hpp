#pragma once

#include "ppj/scalar.hpp"

namespace ppj {

/// lambda*nu - (alpha/2)(lambda + nu) - c/4; zero exactly when the principal
/// curvatures are compatible with a Hopf hypersurface.
template <Scalar S>
S hopf_check(const S& alpha, const S& lambda, const S& nu, const S& c)
{
    return lambda * nu - scalar<S>(1, 2) * alpha * (lambda + nu) - scalar<S>(1, 4) * c;
}

}  // namespace ppj
