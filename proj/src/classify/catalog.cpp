#include "ppj/classify/catalog.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

namespace ppj {

std::string_view to_string(Space s) { return s == Space::CP2 ? "CP2" : "CH2"; }

std::string_view to_string(Model m)
{
    switch (m) {
    case Model::GeodesicSphere: return "geodesic_sphere";
    case Model::Horosphere: return "horosphere";
    case Model::TubeHyperplane: return "tube_hyperplane";
    case Model::TubeCurve: return "tube_curve";
    }
    return "?";
}

Space parse_space(std::string_view name)
{
    std::string up(name);
    for (auto& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (up == "CP2") return Space::CP2;
    if (up == "CH2") return Space::CH2;
    throw CatalogError("unknown space '" + std::string(name) + "' (valid: CP2, CH2)");
}

Model parse_model(std::string_view name)
{
    if (name == "geodesic_sphere") return Model::GeodesicSphere;
    if (name == "horosphere") return Model::Horosphere;
    if (name == "tube_hyperplane") return Model::TubeHyperplane;
    if (name == "tube_curve" || name == "alpha_zero") return Model::TubeCurve;
    throw CatalogError("unknown model '" + std::string(name) +
                       "' (valid: geodesic_sphere, horosphere, tube_hyperplane, tube_curve, alpha_zero)");
}

namespace {

RationalFunction sym(const char* name) { return RationalFunction::symbol(name); }

std::vector<CatalogFamily> build_families()
{
    const RationalFunction t = sym("t");
    const RationalFunction u = sym("u");
    const RationalFunction s = sym("s");
    return {
        {Space::CP2, Model::GeodesicSphere, "t", "t > 0", t * t},
        {Space::CP2, Model::TubeCurve, "s", "s != 0", RationalFunction(1)},
        {Space::CH2, Model::Horosphere, "", "", RationalFunction(1)},
        {Space::CH2, Model::GeodesicSphere, "u", "u > 1", u * u},
        {Space::CH2, Model::TubeHyperplane, "t", "0 < t < 1", t * t},
        {Space::CH2, Model::TubeCurve, "s", "s != 0", RationalFunction(-1)},
    };
}

bool in_range(Space space, Model model, double x)
{
    switch (model) {
    case Model::GeodesicSphere: return space == Space::CP2 ? x > 0 : x > 1;
    case Model::TubeHyperplane: return x > 0 && x < 1;
    case Model::TubeCurve: return x != 0;
    case Model::Horosphere: return true;
    }
    return false;
}

// (alpha, lambda, nu) of the family as functions of the parameter p.
template <Scalar S>
std::array<S, 3> principal(Space space, Model model, const S& p)
{
    const S one = scalar<S>(1);
    switch (model) {
    case Model::GeodesicSphere:
        return {ScalarTraits<S>::divide(space == Space::CP2 ? S(p * p - one) : S(p * p + one), p), p, p};
    case Model::TubeHyperplane: return {ScalarTraits<S>::divide(S(p * p + one), p), p, p};
    case Model::TubeCurve:
        return {scalar<S>(0), p, ScalarTraits<S>::divide(space == Space::CP2 ? one : S(-one), p)};
    case Model::Horosphere: return {scalar<S>(2), one, one};
    }
    throw CatalogError("unknown model");
}

}  // namespace

std::vector<CatalogFamily> catalog_families()
{
    static const std::vector<CatalogFamily> families = build_families();
    return families;
}

const CatalogFamily& catalog_family(Space space, Model model)
{
    static const std::vector<CatalogFamily> families = build_families();
    for (const auto& f : families) {
        if (f.space == space && f.model == model) return f;
    }
    std::string valid;
    for (const auto& f : families) {
        if (f.space != space) continue;
        valid += (valid.empty() ? "" : ", ") + std::string(to_string(f.model));
    }
    throw CatalogError("model '" + std::string(to_string(model)) + "' is not available in " +
                       std::string(to_string(space)) + " (valid: " + valid + ")");
}

ExactPoint catalog(Space space, Model model, std::optional<RationalFunction> param)
{
    const auto& family = catalog_family(space, model);
    const RationalFunction c(space == Space::CP2 ? 4 : -4);
    if (family.param.empty()) {
        if (param) throw CatalogError("horosphere takes no parameter");
        auto v = principal(space, model, RationalFunction(1));
        return ExactPoint::hopf(c, v[0], v[1], v[2]);
    }
    RationalFunction p = param ? *param : RationalFunction::symbol(family.param);
    if (p.is_constant() && !in_range(space, model, p.constant_value().get_d())) {
        throw CatalogError("parameter " + p.to_string() + " out of range for " + std::string(to_string(space)) +
                           " " + std::string(to_string(model)) + " (valid: " + family.range + ")");
    }
    if (p.is_zero()) throw CatalogError("parameter must be nonzero (valid: " + family.range + ")");
    auto v = principal(space, model, p);
    return ExactPoint::hopf(c, v[0], v[1], v[2]);
}

PointData<double> catalog_float(Space space, Model model, std::optional<double> param)
{
    const auto& family = catalog_family(space, model);
    const double c = space == Space::CP2 ? 4.0 : -4.0;
    if (family.param.empty()) {
        if (param) throw CatalogError("horosphere takes no parameter");
        auto v = principal(space, model, 1.0);
        return PointData<double>::hopf(c, v[0], v[1], v[2]);
    }
    if (!param) throw CatalogError("float mode needs a numeric parameter (" + family.range + ")");
    if (!std::isfinite(*param) || !in_range(space, model, *param)) {
        throw CatalogError("parameter " + ScalarTraits<double>::to_string(*param) + " out of range for " +
                           std::string(to_string(space)) + " " + std::string(to_string(model)) +
                           " (valid: " + family.range + ")");
    }
    auto v = principal(space, model, *param);
    return PointData<double>::hopf(c, v[0], v[1], v[2]);
}

double parameter_from_radius(Space space, Model model, double r)
{
    catalog_family(space, model);
    switch (model) {
    case Model::GeodesicSphere:
        if (space == Space::CP2) {
            if (!(r > 0 && r < std::numbers::pi / 2)) throw CatalogError("radius must satisfy 0 < r < pi/2");
            return 1.0 / std::tan(r);
        }
        if (!(r > 0)) throw CatalogError("radius must be positive");
        return 1.0 / std::tanh(r);
    case Model::TubeHyperplane:
        if (!(r > 0)) throw CatalogError("radius must be positive");
        return std::tanh(r);
    default:
        throw CatalogError("model '" + std::string(to_string(model)) + "' is not parametrized by a radius");
    }
}

}  // namespace ppj
