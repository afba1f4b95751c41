#pragma once

#include "ppj/frame/frame.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace ppj {

struct PointFormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// {"c": "-4", "shape": {"kind": "hopf", "alpha": "2", "lambda": "1", "nu": "1"}}
/// Exact scalars are expression strings; float scalars are JSON numbers.
/// A non-Hopf shape carries alpha, beta, gamma, delta, mu.
nlohmann::ordered_json point_to_json(const ExactPoint& p);
nlohmann::ordered_json point_to_json(const PointData<double>& p);

/// Throws PointFormatError on malformed input and InvalidPointData on c = 0
/// or a non-Hopf beta = 0. Exact mode also accepts plain numbers.
ExactPoint exact_point_from_json(const nlohmann::json& j);
PointData<double> float_point_from_json(const nlohmann::json& j);

}  // namespace ppj
