#include "ppj/classify/report.hpp"

#include "ppj/classify/catalog.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <random>
#include <sstream>

namespace ppj {

std::string_view to_string(VerdictKind k)
{
    switch (k) {
    case VerdictKind::ProperPseudoParallel: return "ProperPseudoParallel";
    case VerdictKind::SemiParallelOnly: return "SemiParallelOnly";
    case VerdictKind::Degenerate: return "Degenerate";
    case VerdictKind::NotPseudoParallel: return "NotPseudoParallel";
    }
    return "?";
}

namespace {

ReportRow make_row(std::string family, std::string param, const Verdict<RationalFunction>& v)
{
    ReportRow row;
    row.family = std::move(family);
    row.param = std::move(param);
    row.verdict = std::string(to_string(v.kind));
    if (v.L) row.L = v.L->to_string();
    for (const auto& c : v.conditions) row.conditions.push_back(c.to_string() + " != 0");
    row.commutes = v.commutes;
    row.hopf = v.hopf;
    return row;
}

Rational small_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    long n = 0;
    while (n == 0) n = num(rng);
    return make_rational(n, den(rng));
}

}  // namespace

ExactPoint random_nonhopf_point(std::uint64_t& state)
{
    std::mt19937_64 rng(state);
    state = rng();
    auto q = [&] { return RationalFunction(small_rational(rng)); };
    RationalFunction c(std::bernoulli_distribution(0.5)(rng) ? 4 : -4);
    auto alpha = q();
    auto beta = q();
    auto gamma = q();
    auto delta = q();
    auto mu = q();
    return ExactPoint::nonhopf(c, alpha, beta, gamma, delta, mu);
}

TheoremReport main_theorem_report(std::uint64_t seed, std::size_t samples)
{
    TheoremReport report;
    for (const auto& f : catalog_families()) {
        const auto p = catalog(f.space, f.model);
        const auto v = verdict(p);
        std::string name = std::string(to_string(f.space)) + "/" + std::string(to_string(f.model));
        auto row = make_row(name, f.param.empty() ? "-" : f.param + " (" + f.range + ")", v);
        row.expected = v.kind == VerdictKind::ProperPseudoParallel && v.L && *v.L == f.expected_L;
        report.rows.push_back(std::move(row));
    }

    {
        const auto alpha = RationalFunction::symbol("alpha");
        const auto p = ExactPoint::hopf(RationalFunction(make_rational(-16, 7)) * alpha * alpha,
                                        alpha, RationalFunction(make_rational(4, 7)) * alpha,
                                        RationalFunction(-4) * alpha);
        const auto v = verdict(p);
        auto row = make_row("hopf_exceptional", "alpha", v);
        row.note = "pointwise admissible; excluded globally since no type B hypersurface in CH2 has these "
                   "principal curvatures";
        const RationalFunction want = RationalFunction(make_rational(-32, 7)) * alpha * alpha;
        row.expected = v.kind == VerdictKind::ProperPseudoParallel && v.L && *v.L == want;
        report.rows.push_back(std::move(row));
    }

    {
        const auto c = RationalFunction::symbol("c");
        const auto alpha = RationalFunction::symbol("alpha");
        const auto beta = RationalFunction::symbol("beta");
        const RationalFunction quarter(make_rational(1, 4));
        const auto p = ExactPoint::nonhopf(c, alpha, beta, beta * beta / alpha - quarter * c / alpha,
                                           RationalFunction(0), -quarter * c / alpha);
        const auto v = verdict(p);
        auto row = make_row("nonhopf_jacobi_zero", "c, alpha, beta", v);
        row.note = "structure Jacobi operator vanishes; excluded globally";
        row.expected = v.kind == VerdictKind::Degenerate && v.jacobi_zero;
        report.rows.push_back(std::move(row));
    }

    std::uint64_t state = seed;
    for (std::size_t n = 0; n < samples; ++n) {
        const auto p = random_nonhopf_point(state);
        const auto& s = p.nonhopf_shape();
        std::ostringstream param;
        param << "c=" << p.c().to_string() << " alpha=" << s.alpha.to_string() << " beta=" << s.beta.to_string()
              << " gamma=" << s.gamma.to_string() << " delta=" << s.delta.to_string() << " mu=" << s.mu.to_string();
        const auto v = verdict(p);
        auto row = make_row("nonhopf_sample_" + std::to_string(n + 1), param.str(), v);
        row.expected = v.kind == VerdictKind::NotPseudoParallel;
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

PointData<double> to_float(const ExactPoint& p)
{
    auto d = [](const RationalFunction& x) { return x.constant_value().get_d(); };
    const auto& s = p.nonhopf_shape();
    return PointData<double>::nonhopf(d(p.c()), d(s.alpha), d(s.beta), d(s.gamma), d(s.delta), d(s.mu));
}

ReportRow make_float_row(std::string family, std::string param, const Verdict<double>& v)
{
    ReportRow row;
    row.family = std::move(family);
    row.param = std::move(param);
    row.verdict = std::string(to_string(v.kind));
    if (v.L) row.L = ScalarTraits<double>::to_string(*v.L);
    row.commutes = v.commutes;
    row.hopf = v.hopf;
    return row;
}

bool close(double a, double b) { return std::abs(a - b) <= kFloatZeroTolerance * std::max(1.0, std::abs(b)); }

}  // namespace

TheoremReport main_theorem_report_float(std::uint64_t seed, std::size_t samples)
{
    TheoremReport report;
    for (const auto& f : catalog_families()) {
        std::optional<double> param;
        std::unordered_map<Symbol, double> at;
        if (!f.param.empty()) {
            param = f.model == Model::TubeCurve ? 2.0 : parameter_from_radius(f.space, f.model, 0.7);
            at[Symbol::base(f.param)] = *param;
        }
        const auto v = verdict(catalog_float(f.space, f.model, param));
        std::string name = std::string(to_string(f.space)) + "/" + std::string(to_string(f.model));
        auto row = make_float_row(name, param ? f.param + "=" + ScalarTraits<double>::to_string(*param) : "-", v);
        row.expected = v.kind == VerdictKind::ProperPseudoParallel && v.L && close(*v.L, f.expected_L.evaluate(at));
        report.rows.push_back(std::move(row));
    }
    {
        const auto v = verdict(PointData<double>::hopf(-16.0 / 7.0, 1.0, 4.0 / 7.0, -4.0));
        auto row = make_float_row("hopf_exceptional", "alpha=1", v);
        row.note = "pointwise admissible; excluded globally since no type B hypersurface in CH2 has these "
                   "principal curvatures";
        row.expected = v.kind == VerdictKind::ProperPseudoParallel && v.L && close(*v.L, -32.0 / 7.0);
        report.rows.push_back(std::move(row));
    }
    {
        const double c = 4.0;
        const double alpha = 1.0;
        const double beta = 2.0;
        const auto v = verdict(PointData<double>::nonhopf(c, alpha, beta, beta * beta / alpha - c / (4 * alpha),
                                                          0.0, -c / (4 * alpha)));
        auto row = make_float_row("nonhopf_jacobi_zero", "c=4 alpha=1 beta=2", v);
        row.note = "structure Jacobi operator vanishes; excluded globally";
        row.expected = v.kind == VerdictKind::Degenerate && v.jacobi_zero;
        report.rows.push_back(std::move(row));
    }
    std::uint64_t state = seed;
    for (std::size_t n = 0; n < samples; ++n) {
        const auto p = to_float(random_nonhopf_point(state));
        const auto& s = p.nonhopf_shape();
        std::ostringstream param;
        param.precision(17);
        param << "c=" << p.c() << " alpha=" << s.alpha << " beta=" << s.beta << " gamma=" << s.gamma
              << " delta=" << s.delta << " mu=" << s.mu;
        const auto v = verdict(p);
        auto row = make_float_row("nonhopf_sample_" + std::to_string(n + 1), param.str(), v);
        row.expected = v.kind == VerdictKind::NotPseudoParallel;
        report.rows.push_back(std::move(row));
    }
    return report;
}

bool TheoremReport::matches() const
{
    return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.expected; });
}

std::string TheoremReport::to_json() const
{
    nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["family"] = r.family;
        j["param"] = r.param;
        j["verdict"] = r.verdict;
        j["L"] = r.L ? nlohmann::ordered_json(*r.L) : nlohmann::ordered_json(nullptr);
        j["conditions"] = r.conditions;
        j["commutes"] = r.commutes;
        j["hopf"] = r.hopf;
        if (!r.note.empty()) j["note"] = r.note;
        rows_json.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["rows"] = std::move(rows_json);
    out["matches_main_theorem"] = matches();
    return out.dump(2) + "\n";
}

std::string TheoremReport::to_table() const
{
    const std::vector<std::string> head{"family", "param", "verdict", "L", "commutes", "hopf"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
        cells.push_back({r.family, r.param, r.verdict, r.L.value_or("-"), r.commutes ? "yes" : "no",
                         r.hopf ? "yes" : "no"});
    }
    std::vector<std::size_t> width(head.size());
    for (std::size_t i = 0; i < head.size(); ++i) {
        width[i] = head[i].size();
        for (const auto& row : cells) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << row[i];
            if (i + 1 < row.size()) os << std::string(width[i] - row[i].size() + 2, ' ');
        }
        os << '\n';
    };
    line(head);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& row : cells) line(row);
    for (const auto& r : rows) {
        if (!r.note.empty()) os << "note (" << r.family << "): " << r.note << '\n';
    }
    os << (matches() ? "matches the classification theorem\n" : "DOES NOT match the classification theorem\n");
    return os.str();
}

}  // namespace ppj
