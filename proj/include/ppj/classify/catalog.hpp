#pragma once

#include "ppj/frame/frame.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ppj {

enum class Space { CP2, CH2 };
enum class Model { GeodesicSphere, Horosphere, TubeHyperplane, TubeCurve };

struct CatalogError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string_view to_string(Space s);
std::string_view to_string(Model m);
/// Accepts CP2/CH2 in any case; throws CatalogError listing the valid names.
Space parse_space(std::string_view name);
/// Accepts geodesic_sphere, horosphere, tube_hyperplane, tube_curve and
/// alpha_zero (alias of tube_curve in CH2).
Model parse_model(std::string_view name);

/// One model family with c = 4 (CP2) or c = -4 (CH2).
struct CatalogFamily {
    Space space;
    Model model;
    /// Parameter symbol name, empty for the horosphere.
    std::string param;
    /// Valid range, e.g. "t > 0".
    std::string range;
    /// Expected admissible L as a function of the parameter.
    RationalFunction expected_L;
};

std::vector<CatalogFamily> catalog_families();
const CatalogFamily& catalog_family(Space space, Model model);

/// Hopf point of the family. A missing param keeps the symbolic parameter;
/// a rational param is range checked (CatalogError names the interval).
ExactPoint catalog(Space space, Model model, std::optional<RationalFunction> param = std::nullopt);
PointData<double> catalog_float(Space space, Model model, std::optional<double> param = std::nullopt);

/// Parameter for a tube/sphere radius r: cot r (CP2 sphere), coth r (CH2
/// sphere), tanh r (CH2 tube over CH1); throws for the other models.
double parameter_from_radius(Space space, Model model, double r);

}  // namespace ppj
