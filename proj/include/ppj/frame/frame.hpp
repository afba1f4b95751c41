#pragma once

#include "ppj/scalar.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ppj {

/// Tangent vector in the ordered orthonormal frame (X1, X2, X3) =
/// (U or e, phiU or phie, xi).
template <Scalar S>
struct FrameVector {
    std::array<S, 3> c{S(0), S(0), S(0)};

    static FrameVector basis(int i)
    {
        FrameVector v;
        v.c[static_cast<std::size_t>(i)] = S(1);
        return v;
    }

    S& operator[](std::size_t i) { return c[i]; }
    const S& operator[](std::size_t i) const { return c[i]; }

    FrameVector& operator+=(const FrameVector& o)
    {
        for (std::size_t i = 0; i < 3; ++i) c[i] += o.c[i];
        return *this;
    }
    FrameVector& operator-=(const FrameVector& o)
    {
        for (std::size_t i = 0; i < 3; ++i) c[i] -= o.c[i];
        return *this;
    }
    friend FrameVector operator+(FrameVector a, const FrameVector& b) { return a += b; }
    friend FrameVector operator-(FrameVector a, const FrameVector& b) { return a -= b; }
    friend FrameVector operator-(FrameVector a)
    {
        for (auto& x : a.c) x = -x;
        return a;
    }
    friend FrameVector operator*(const S& k, FrameVector a)
    {
        for (auto& x : a.c) x = k * x;
        return a;
    }

    bool is_zero(double scale = 1.0) const
    {
        for (const auto& x : c) {
            if (!ppj::is_zero(x, scale)) return false;
        }
        return true;
    }
};

/// Endomorphism of the tangent space; column j is the image of X_j.
template <Scalar S>
class FrameOperator {
public:
    using Matrix = std::array<std::array<S, 3>, 3>;

    FrameOperator() { m_.fill({S(0), S(0), S(0)}); }

    /// Throws std::logic_error when `symmetric` is requested but the matrix
    /// is not equal to its transpose.
    explicit FrameOperator(Matrix m, bool symmetric = false) : m_(std::move(m)), symmetric_(symmetric)
    {
        if (symmetric_ && !is_self_adjoint()) {
            throw std::logic_error("FrameOperator: matrix is not symmetric");
        }
    }

    static FrameOperator identity()
    {
        FrameOperator a;
        for (std::size_t i = 0; i < 3; ++i) a.m_[i][i] = S(1);
        a.symmetric_ = true;
        return a;
    }

    const S& operator()(std::size_t row, std::size_t col) const { return m_[row][col]; }
    const Matrix& matrix() const { return m_; }
    bool symmetric() const { return symmetric_; }

    FrameVector<S> apply(const FrameVector<S>& v) const
    {
        FrameVector<S> out;
        for (std::size_t i = 0; i < 3; ++i) {
            S acc(0);
            for (std::size_t j = 0; j < 3; ++j) acc += m_[i][j] * v.c[j];
            out.c[i] = acc;
        }
        return out;
    }
    FrameVector<S> column(std::size_t j) const { return FrameVector<S>{{m_[0][j], m_[1][j], m_[2][j]}}; }

    friend FrameOperator operator*(const FrameOperator& a, const FrameOperator& b)
    {
        Matrix out;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                S acc(0);
                for (std::size_t k = 0; k < 3; ++k) acc += a.m_[i][k] * b.m_[k][j];
                out[i][j] = acc;
            }
        }
        return FrameOperator(std::move(out));
    }
    friend FrameOperator operator-(const FrameOperator& a, const FrameOperator& b)
    {
        Matrix out = a.m_;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) out[i][j] -= b.m_[i][j];
        }
        return FrameOperator(std::move(out));
    }

    FrameOperator transpose() const
    {
        Matrix out;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) out[i][j] = m_[j][i];
        }
        return FrameOperator(std::move(out), symmetric_);
    }

    bool is_zero(double scale = 1.0) const
    {
        for (const auto& row : m_) {
            for (const auto& x : row) {
                if (!ppj::is_zero(x, scale)) return false;
            }
        }
        return true;
    }

    bool is_self_adjoint(double scale = 1.0) const
    {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i + 1; j < 3; ++j) {
                if (!ppj::is_zero(S(m_[i][j] - m_[j][i]), scale)) return false;
            }
        }
        return true;
    }

    double magnitude() const
    {
        double mag = 0.0;
        for (const auto& row : m_) {
            for (const auto& x : row) mag = std::max(mag, ScalarTraits<S>::magnitude(x));
        }
        return mag;
    }

private:
    Matrix m_;
    bool symmetric_ = false;
};

/// Principal data at a Hopf point: A e = lambda e, A phie = nu phie, A xi = alpha xi.
template <Scalar S>
struct HopfShape {
    S alpha, lambda, nu;
};

/// Non-Hopf point: A xi = alpha xi + beta U, AU = gamma U + delta phiU + beta xi,
/// A phiU = delta U + mu phiU, with beta != 0.
template <Scalar S>
struct NonHopfShape {
    S alpha, beta, gamma, delta, mu;
};

struct InvalidPointData : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// One point of a real hypersurface in CP2 (c > 0) or CH2 (c < 0).
template <Scalar S>
class PointData {
public:
    using Shape = std::variant<HopfShape<S>, NonHopfShape<S>>;

    /// Throws InvalidPointData when c == 0 ("nonflat required") or a
    /// non-Hopf shape has beta == 0.
    PointData(S c, Shape shape) : c_(std::move(c)), shape_(std::move(shape))
    {
        if (ppj::is_zero(c_)) throw InvalidPointData("nonflat required: c must be nonzero");
        if (const auto* nh = std::get_if<NonHopfShape<S>>(&shape_)) {
            if (ppj::is_zero(nh->beta)) throw InvalidPointData("non-Hopf point requires beta != 0");
        }
    }

    static PointData hopf(S c, S alpha, S lambda, S nu)
    {
        return PointData(std::move(c), HopfShape<S>{std::move(alpha), std::move(lambda), std::move(nu)});
    }
    static PointData nonhopf(S c, S alpha, S beta, S gamma, S delta, S mu)
    {
        return PointData(std::move(c), NonHopfShape<S>{std::move(alpha), std::move(beta), std::move(gamma),
                                                       std::move(delta), std::move(mu)});
    }

    const S& c() const { return c_; }
    const Shape& shape() const { return shape_; }
    bool is_hopf() const { return std::holds_alternative<HopfShape<S>>(shape_); }
    const HopfShape<S>& hopf_shape() const { return std::get<HopfShape<S>>(shape_); }
    const NonHopfShape<S>& nonhopf_shape() const { return std::get<NonHopfShape<S>>(shape_); }

    const S& alpha() const
    {
        return std::visit([](const auto& sh) -> const S& { return sh.alpha; }, shape_);
    }

    /// Largest magnitude among the stored scalars (float tolerance scale).
    double magnitude() const
    {
        double mag = ScalarTraits<S>::magnitude(c_);
        std::visit(
            [&](const auto& sh) {
                if constexpr (std::is_same_v<std::decay_t<decltype(sh)>, HopfShape<S>>) {
                    for (const S* x : {&sh.alpha, &sh.lambda, &sh.nu}) {
                        mag = std::max(mag, ScalarTraits<S>::magnitude(*x));
                    }
                } else {
                    for (const S* x : {&sh.alpha, &sh.beta, &sh.gamma, &sh.delta, &sh.mu}) {
                        mag = std::max(mag, ScalarTraits<S>::magnitude(*x));
                    }
                }
            },
            shape_);
        return mag;
    }

private:
    S c_;
    Shape shape_;
};

// --- almost contact structure in the fixed frame ---------------------------

/// phi X1 = X2, phi X2 = -X1, phi xi = 0.
template <Scalar S>
FrameVector<S> phi_apply(const FrameVector<S>& v)
{
    return FrameVector<S>{{-v.c[1], v.c[0], S(0)}};
}

template <Scalar S>
FrameOperator<S> phi_operator()
{
    typename FrameOperator<S>::Matrix m;
    m[0] = {S(0), S(-1), S(0)};
    m[1] = {S(1), S(0), S(0)};
    m[2] = {S(0), S(0), S(0)};
    return FrameOperator<S>(std::move(m));
}

template <Scalar S>
S g_inner(const FrameVector<S>& v, const FrameVector<S>& w)
{
    return v.c[0] * w.c[0] + v.c[1] * w.c[1] + v.c[2] * w.c[2];
}

template <Scalar S>
S eta_of(const FrameVector<S>& v)
{
    return v.c[2];
}

template <Scalar S>
FrameVector<S> xi()
{
    return FrameVector<S>::basis(2);
}

/// Shape operator A assembled from the point data; always symmetric.
template <Scalar S>
FrameOperator<S> shape_from_spec(const PointData<S>& p)
{
    typename FrameOperator<S>::Matrix m;
    if (p.is_hopf()) {
        const auto& h = p.hopf_shape();
        m[0] = {h.lambda, S(0), S(0)};
        m[1] = {S(0), h.nu, S(0)};
        m[2] = {S(0), S(0), h.alpha};
    } else {
        const auto& n = p.nonhopf_shape();
        m[0] = {n.gamma, n.delta, n.beta};
        m[1] = {n.delta, n.mu, S(0)};
        m[2] = {n.beta, S(0), n.alpha};
    }
    FrameOperator<S> a(std::move(m), true);
    if (!ppj::is_zero(S(eta_of(a.apply(xi<S>())) - p.alpha()), p.magnitude())) {
        throw std::logic_error("shape_from_spec: eta(A xi) != alpha");
    }
    return a;
}

template <Scalar S>
bool commutes_with_phi(const FrameOperator<S>& a)
{
    const auto phi = phi_operator<S>();
    return (a * phi - phi * a).is_zero(std::max(1.0, a.magnitude()));
}

struct IdentityCheck {
    std::string name;
    bool passed;
};

/// Pass/fail per almost-contact identity for the frame and the shape
/// operator of `p`.
template <Scalar S>
std::vector<IdentityCheck> contact_identity_suite(const PointData<S>& p)
{
    std::vector<IdentityCheck> out;
    const auto a = shape_from_spec(p);
    const double scale = std::max(1.0, a.magnitude());

    bool phi_sq = true;
    bool eta_phi = true;
    bool phi_xi = phi_apply(xi<S>()).is_zero();
    bool eta_xi = ppj::is_zero(S(eta_of(xi<S>()) - S(1)));
    bool metric_phi = true;
    bool skew_phi = true;
    bool sym_a = true;
    for (int i = 0; i < 3; ++i) {
        const auto x = FrameVector<S>::basis(i);
        auto lhs = phi_apply(phi_apply(x));
        auto rhs = -x + eta_of(x) * xi<S>();
        phi_sq = phi_sq && (lhs - rhs).is_zero();
        eta_phi = eta_phi && ppj::is_zero(eta_of(phi_apply(x)));
        for (int j = 0; j < 3; ++j) {
            const auto y = FrameVector<S>::basis(j);
            S m = g_inner(phi_apply(x), phi_apply(y)) - (g_inner(x, y) - eta_of(x) * eta_of(y));
            metric_phi = metric_phi && ppj::is_zero(m);
            S k = g_inner(x, phi_apply(y)) + g_inner(phi_apply(x), y);
            skew_phi = skew_phi && ppj::is_zero(k);
            S sa = g_inner(a.apply(x), y) - g_inner(x, a.apply(y));
            sym_a = sym_a && ppj::is_zero(sa, scale);
        }
    }
    out.push_back({"phi^2 X = -X + eta(X) xi", phi_sq});
    out.push_back({"eta o phi = 0", eta_phi});
    out.push_back({"phi xi = 0", phi_xi});
    out.push_back({"eta(xi) = 1", eta_xi});
    out.push_back({"g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)", metric_phi});
    out.push_back({"g(X, phi Y) = -g(phi X, Y)", skew_phi});
    out.push_back({"g(AX, Y) = g(X, AY)", sym_a});
    return out;
}

using ExactVector = FrameVector<RationalFunction>;
using ExactOperator = FrameOperator<RationalFunction>;
using ExactPoint = PointData<RationalFunction>;

}  // namespace ppj
