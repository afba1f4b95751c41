#pragma once

#include "ppj/frame/frame.hpp"

#include <array>
#include <cstddef>

namespace ppj {

/// Gauss-equation curvature of a real hypersurface in a complex space form
/// of constant holomorphic sectional curvature c with shape operator A:
///
///   R(X,Y)Z = c/4 [g(Y,Z)X - g(X,Z)Y + g(phiY,Z)phiX - g(phiX,Z)phiY
///                  - 2 g(phiX,Y) phiZ] + g(AY,Z)AX - g(AX,Z)AY
template <Scalar S>
FrameVector<S> riemann(const S& c, const FrameOperator<S>& a, const FrameVector<S>& x,
                       const FrameVector<S>& y, const FrameVector<S>& z)
{
    const S q = c * S(scalar<S>(1, 4));
    const auto px = phi_apply(x);
    const auto py = phi_apply(y);
    const auto pz = phi_apply(z);
    const auto ax = a.apply(x);
    const auto ay = a.apply(y);
    FrameVector<S> out = g_inner(y, z) * x - g_inner(x, z) * y + g_inner(py, z) * px -
                         g_inner(px, z) * py - S(S(2) * g_inner(px, y)) * pz;
    out = q * out;
    out += g_inner(ay, z) * ax - g_inner(ax, z) * ay;
    return out;
}

template <Scalar S>
FrameVector<S> riemann(const PointData<S>& p, const FrameVector<S>& x, const FrameVector<S>& y,
                       const FrameVector<S>& z)
{
    return riemann(p.c(), shape_from_spec(p), x, y, z);
}

/// (X ^ Y)Z = g(Y,Z)X - g(Z,X)Y
template <Scalar S>
FrameVector<S> wedge(const FrameVector<S>& x, const FrameVector<S>& y, const FrameVector<S>& z)
{
    return g_inner(y, z) * x - g_inner(z, x) * y;
}

/// Structure Jacobi operator l X = R(X, xi) xi, in the closed form
/// l X = c/4 [X - eta(X) xi] + alpha A X - eta(A X) A xi with alpha = eta(A xi).
template <Scalar S>
FrameOperator<S> jacobi_l(const S& c, const FrameOperator<S>& a)
{
    const S q = c * S(scalar<S>(1, 4));
    const auto axi = a.apply(xi<S>());
    const S alpha = eta_of(axi);
    typename FrameOperator<S>::Matrix m;
    for (int j = 0; j < 3; ++j) {
        const auto x = FrameVector<S>::basis(j);
        const auto ax = a.apply(x);
        const auto lx = q * (x - eta_of(x) * xi<S>()) + alpha * ax - eta_of(ax) * axi;
        for (std::size_t i = 0; i < 3; ++i) m[i][static_cast<std::size_t>(j)] = lx.c[i];
    }
    return FrameOperator<S>(std::move(m));
}

template <Scalar S>
FrameOperator<S> jacobi_l(const PointData<S>& p)
{
    return jacobi_l(p.c(), shape_from_spec(p));
}

/// Component value s - L*t of the pseudo-parallelism defect.
template <Scalar S>
struct DefectEntry {
    S s{0};
    S t{0};
};

/// The 81 components of R(X,Y)lZ - l(R(X,Y)Z) - L[(X^Y)lZ - l((X^Y)Z)]
/// over basis triples (X_i, X_j, X_k) and output coordinate m, stored
/// affine in L.
template <Scalar S>
class AffineDefect {
public:
    static constexpr std::size_t index(int i, int j, int k, int m)
    {
        return static_cast<std::size_t>(((i * 3 + j) * 3 + k) * 3 + m);
    }

    const DefectEntry<S>& entry(int i, int j, int k, int m) const { return entries_[index(i, j, k, m)]; }
    DefectEntry<S>& entry(int i, int j, int k, int m) { return entries_[index(i, j, k, m)]; }
    const std::array<DefectEntry<S>, 81>& entries() const { return entries_; }

    double magnitude() const
    {
        double mag = 0.0;
        for (const auto& e : entries_) {
            mag = std::max({mag, ScalarTraits<S>::magnitude(e.s), ScalarTraits<S>::magnitude(e.t)});
        }
        return mag;
    }

private:
    std::array<DefectEntry<S>, 81> entries_;
};

template <Scalar S>
AffineDefect<S> defect_affine(const S& c, const FrameOperator<S>& a)
{
    const auto l = jacobi_l(c, a);
    std::array<FrameVector<S>, 3> basis{FrameVector<S>::basis(0), FrameVector<S>::basis(1),
                                        FrameVector<S>::basis(2)};
    std::array<FrameVector<S>, 3> lb{l.column(0), l.column(1), l.column(2)};

    AffineDefect<S> d;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            const auto& x = basis[static_cast<std::size_t>(i)];
            const auto& y = basis[static_cast<std::size_t>(j)];
            for (int k = 0; k < 3; ++k) {
                const auto& z = basis[static_cast<std::size_t>(k)];
                const auto& lz = lb[static_cast<std::size_t>(k)];
                const auto s = riemann(c, a, x, y, lz) - l.apply(riemann(c, a, x, y, z));
                const auto t = wedge(x, y, lz) - l.apply(wedge(x, y, z));
                for (int m = 0; m < 3; ++m) {
                    auto mi = static_cast<std::size_t>(m);
                    d.entry(i, j, k, m) = DefectEntry<S>{s.c[mi], t.c[mi]};
                }
            }
        }
    }
    return d;
}

template <Scalar S>
AffineDefect<S> defect_affine(const PointData<S>& p)
{
    return defect_affine(p.c(), shape_from_spec(p));
}

/// Each entry evaluated as s - L*t.
template <Scalar S>
std::array<S, 81> defect_eval(const AffineDefect<S>& d, const S& l_value)
{
    std::array<S, 81> out;
    for (std::size_t n = 0; n < 81; ++n) {
        const auto& e = d.entries()[n];
        out[n] = e.s - l_value * e.t;
    }
    return out;
}

}  // namespace ppj
