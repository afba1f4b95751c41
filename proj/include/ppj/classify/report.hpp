#pragma once

#include "ppj/classify/verdict.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ppj {

struct ReportRow {
    std::string family;
    std::string param;
    std::string verdict;
    std::optional<std::string> L;
    std::vector<std::string> conditions;
    bool commutes = false;
    bool hopf = false;
    std::string note;
    /// Whether the row agrees with the classification theorem.
    bool expected = false;
};

struct TheoremReport {
    std::vector<ReportRow> rows;

    bool matches() const;
    /// {"rows":[{"family","param","verdict","L","conditions","commutes","hopf"}...]}
    std::string to_json() const;
    std::string to_table() const;
};

/// One row per catalog family, the exceptional Hopf triple, an l = 0 point and
/// `samples` seeded random non-Hopf rational points.
TheoremReport main_theorem_report(std::uint64_t seed = 1, std::size_t samples = 10);

/// Float counterpart: families at fixed sample parameters, alpha = 1 for
/// the exceptional Hopf triple, and the same seeded non-Hopf samples in binary64.
TheoremReport main_theorem_report_float(std::uint64_t seed = 1, std::size_t samples = 10);

/// Random non-Hopf point with small rational entries and c = +-4.
ExactPoint random_nonhopf_point(std::uint64_t& state);

}  // namespace ppj
