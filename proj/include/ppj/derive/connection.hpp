#pragma once

#include "ppj/curvature/curvature.hpp"
#include "ppj/derive/jets.hpp"

#include <array>
#include <stdexcept>

namespace ppj {


struct UnsupportedSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Levi-Civita connection in the frame {U, phiU, xi}: at(i, j) = nabla_{X_i} X_j.
///
/// nabla_X xi = phi A X, and the remaining coefficients are fixed by metric
/// compatibility up to kappa_i = g(nabla_{X_i} U, phiU).
class ConnectionTable {
public:
    using Table = std::array<std::array<ExactVector, 3>, 3>;

    /// Throws std::logic_error when the table is not metric compatible.
    explicit ConnectionTable(Table t);

    const ExactVector& at(int i, int j) const
    {
        return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    /// nabla_V Y for vector fields with function coefficients.
    ExactVector covariant(const ExactVector& v, const ExactVector& y) const;

    /// [X, Y] = nabla_X Y - nabla_Y X.
    ExactVector bracket(const ExactVector& x, const ExactVector& y) const;

    bool metric_compatible() const;

private:
    Table table_;
};

/// Connection for a non-Hopf point, with kappa1, kappa2, kappa3 as the free
/// coefficients. Hopf input throws UnsupportedSpec.
ConnectionTable connection_from_spec(const ExactPoint& p);

/// (nabla_X A)Y - (nabla_Y A)X - c/4 [eta(X) phiY - eta(Y) phiX - 2 g(phiX,Y) xi]
ExactVector codazzi_residual(const ExactPoint& p, const ConnectionTable& table, const ExactVector& x,
                             const ExactVector& y);

/// Curvature from the connection minus the Gauss-equation curvature.
ExactVector curvature_commutation_residual(const ExactPoint& p, const ConnectionTable& table,
                                           const ExactVector& x, const ExactVector& y,
                                           const ExactVector& z);

/// X(Y f) - Y(X f) - [X,Y] f for basis fields X, Y.
RationalFunction commutator_relation(const ConnectionTable& table, Direction x, Direction y, Symbol f);

}  // namespace ppj
