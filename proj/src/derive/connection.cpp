#include "ppj/derive/connection.hpp"

namespace ppj {

namespace {

ExactVector basis(int i) { return ExactVector::basis(i); }

// nabla_X (A Y) - A (nabla_X Y)
ExactVector covariant_shape(const ConnectionTable& t, const ExactOperator& a, const ExactVector& x,
                            const ExactVector& y)
{
    return t.covariant(x, a.apply(y)) - a.apply(t.covariant(x, y));
}

}  // namespace

ConnectionTable::ConnectionTable(Table t) : table_(std::move(t))
{
    if (!metric_compatible()) throw std::logic_error("connection table is not metric compatible");
}

ExactVector ConnectionTable::covariant(const ExactVector& v, const ExactVector& y) const
{
    ExactVector out;
    for (int i = 0; i < 3; ++i) {
        const auto& vi = v.c[static_cast<std::size_t>(i)];
        if (vi.is_zero()) continue;
        ExactVector along;
        for (int k = 0; k < 3; ++k) {
            const auto& yk = y.c[static_cast<std::size_t>(k)];
            along[static_cast<std::size_t>(k)] += differentiate(yk, direction_of(i));
            if (!yk.is_zero()) along += yk * at(i, k);
        }
        out += vi * along;
    }
    return out;
}

ExactVector ConnectionTable::bracket(const ExactVector& x, const ExactVector& y) const
{
    return covariant(x, y) - covariant(y, x);
}

bool ConnectionTable::metric_compatible() const
{
    // g(nabla_X Y, Z) + g(Y, nabla_X Z) = 0 for the constant orthonormal frame.
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                auto sum = g_inner(at(i, j), basis(k)) + g_inner(basis(j), at(i, k));
                if (!sum.is_zero()) return false;
            }
        }
    }
    return true;
}

ConnectionTable connection_from_spec(const ExactPoint& p)
{
    if (p.is_hopf()) throw UnsupportedSpec("connection table is only available for non-Hopf points");
    const auto a = shape_from_spec(p);
    const std::array<RationalFunction, 3> kappa{RationalFunction::symbol("kappa1"),
                                                RationalFunction::symbol("kappa2"),
                                                RationalFunction::symbol("kappa3")};
    ConnectionTable::Table t;
    for (int i = 0; i < 3; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const ExactVector nabla_xi = phi_apply(a.apply(basis(i)));
        // nabla U: phiU-coefficient kappa_i, xi-coefficient -g(U, nabla xi)
        ExactVector nabla_u;
        nabla_u[1] = kappa[ui];
        nabla_u[2] = -nabla_xi[0];
        // nabla phiU: U-coefficient -kappa_i, xi-coefficient -g(phiU, nabla xi)
        ExactVector nabla_phiu;
        nabla_phiu[0] = -kappa[ui];
        nabla_phiu[2] = -nabla_xi[1];
        t[ui] = {nabla_u, nabla_phiu, nabla_xi};
    }
    return ConnectionTable(std::move(t));
}

ExactVector codazzi_residual(const ExactPoint& p, const ConnectionTable& table, const ExactVector& x,
                             const ExactVector& y)
{
    const auto a = shape_from_spec(p);
    ExactVector lhs = covariant_shape(table, a, x, y) - covariant_shape(table, a, y, x);
    const RationalFunction q = p.c() * RationalFunction(make_rational(1, 4));
    ExactVector rhs = eta_of(x) * phi_apply(y) - eta_of(y) * phi_apply(x) -
                      RationalFunction(2) * g_inner(phi_apply(x), y) * xi<RationalFunction>();
    return lhs - q * rhs;
}

ExactVector curvature_commutation_residual(const ExactPoint& p, const ConnectionTable& table,
                                           const ExactVector& x, const ExactVector& y,
                                           const ExactVector& z)
{
    ExactVector from_connection = table.covariant(x, table.covariant(y, z)) -
                                  table.covariant(y, table.covariant(x, z)) -
                                  table.covariant(table.bracket(x, y), z);
    return from_connection - riemann(p, x, y, z);
}

RationalFunction commutator_relation(const ConnectionTable& table, Direction x, Direction y, Symbol f)
{
    const RationalFunction fx(f);
    RationalFunction yf = differentiate(fx, y);
    RationalFunction xf = differentiate(fx, x);
    ExactVector w = table.bracket(ExactVector::basis(static_cast<int>(x)),
                                  ExactVector::basis(static_cast<int>(y)));
    return differentiate(yf, x) - differentiate(xf, y) - apply_field(w, fx);
}

}  // namespace ppj
