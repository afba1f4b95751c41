#include "cli.hpp"

#include "ppj/classify/catalog.hpp"
#include "ppj/classify/hopf.hpp"
#include "ppj/classify/report.hpp"
#include "ppj/derive/script.hpp"
#include "ppj/exact/parse.hpp"
#include "ppj/io/point_json.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace ppj::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string mode = "exact";
    std::string format = "table";
    std::string out;
    std::string point;
    std::string l_value;
    std::string space;
    std::string model;
    std::string param;
    std::string script;
    std::uint64_t seed = 1;
    std::size_t samples = 10;
};

nlohmann::json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

RationalFunction exact_scalar(const std::string& text, const char* what)
{
    try {
        return parse_expression(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad ") + what + ": " + e.what());
    }
}

double float_scalar(const std::string& text, const char* what)
{
    RationalFunction e = exact_scalar(text, what);
    if (!e.is_constant()) throw InputError(std::string(what) + " must be numeric in float mode");
    return e.constant_value().get_d();
}

template <Scalar S>
nlohmann::ordered_json verdict_json(const Verdict<S>& v)
{
    nlohmann::ordered_json j;
    j["verdict"] = to_string(v.kind);
    if (v.L) {
        if constexpr (ScalarTraits<S>::exact) {
            j["L"] = v.L->to_string();
        } else {
            j["L"] = *v.L;
        }
    } else {
        j["L"] = nullptr;
    }
    std::vector<std::string> conditions;
    for (const auto& c : v.conditions) conditions.push_back(ScalarTraits<S>::to_string(c) + " != 0");
    j["conditions"] = conditions;
    if (!ScalarTraits<S>::exact) j["residual"] = v.residual;
    if (!v.obstruction.empty()) j["obstruction"] = v.obstruction;
    j["hopf"] = v.hopf;
    j["jacobi_zero"] = v.jacobi_zero;
    j["commutes"] = v.commutes;
    return j;
}

template <Scalar S>
int print_verdict(const PointData<S>& p, const Options& o, std::ostream& out)
{
    const auto v = verdict(p);
    if (o.format == "json") {
        out << verdict_json(v).dump(2) << '\n';
    } else {
        out << "verdict: " << to_string(v.kind) << '\n';
        if (v.L) out << "L = " << ScalarTraits<S>::to_string(*v.L) << '\n';
        for (const auto& c : v.conditions) out << "  assuming " << ScalarTraits<S>::to_string(c) << " != 0\n";
        if (!ScalarTraits<S>::exact && v.L) out << "residual = " << v.residual << '\n';
        if (!v.obstruction.empty()) out << "obstruction: " << v.obstruction << '\n';
        out << "hopf: " << (v.hopf ? "yes" : "no") << "  jacobi_zero: " << (v.jacobi_zero ? "yes" : "no")
            << "  commutes: " << (v.commutes ? "yes" : "no") << '\n';
    }
    return v.kind == VerdictKind::NotPseudoParallel ? kMathFailure : kPass;
}

int check_exact(const Options& o, std::ostream& out)
{
    const auto p = exact_point_from_json(read_json(o.point));
    if (o.l_value.empty()) return print_verdict(p, o, out);
    const auto l = exact_scalar(o.l_value, "--L");
    const auto values = defect_eval(defect_affine(p), l);
    std::size_t zero = 0;
    std::ostringstream listing;
    for (std::size_t n = 0; n < values.size(); ++n) {
        if (values[n].is_zero()) {
            ++zero;
        } else {
            listing << "  " << defect_entry_label(n) << " = " << values[n].to_string() << '\n';
        }
    }
    if (zero == values.size()) {
        out << "defect = 0 (81/81)\n";
        return kPass;
    }
    out << "defect != 0 (" << values.size() - zero << "/81 nonzero entries)\n" << listing.str();
    return kMathFailure;
}

int check_float(const Options& o, std::ostream& out)
{
    const auto p = float_point_from_json(read_json(o.point));
    if (o.l_value.empty()) return print_verdict(p, o, out);
    const double l = float_scalar(o.l_value, "--L");
    const auto d = defect_affine(p);
    const auto values = defect_eval(d, l);
    double worst = 0.0;
    std::size_t zero = 0;
    const double scale = std::max(1.0, d.magnitude() * std::max(1.0, std::abs(l)));
    for (double v : values) {
        worst = std::max(worst, std::abs(v));
        if (is_zero(v, scale)) ++zero;
    }
    out.precision(17);
    out << "max |defect| = " << worst << " (" << zero << "/81 within tolerance)\n";
    return zero == values.size() ? kPass : kMathFailure;
}

template <Scalar S>
int print_admissible(const AdmissibleSet<S>& set, std::ostream& out)
{
    switch (set.kind) {
    case AdmissibleKind::All:
        out << "ALL (degenerate)\n";
        return kPass;
    case AdmissibleKind::Empty:
        out << "EMPTY\n";
        if (!set.obstruction.empty()) out << "obstruction: " << set.obstruction << '\n';
        return kMathFailure;
    case AdmissibleKind::Single:
        out << "L = " << ScalarTraits<S>::to_string(set.value) << '\n';
        for (const auto& c : set.conditions) out << "  assuming " << ScalarTraits<S>::to_string(c) << " != 0\n";
        if (!ScalarTraits<S>::exact) out << "residual = " << set.residual << '\n';
        return kPass;
    }
    return kMathFailure;
}

int solve_l(const Options& o, std::ostream& out)
{
    if (o.mode == "float") return print_admissible(admissible_L(defect_affine(float_point_from_json(read_json(o.point)))), out);
    return print_admissible(admissible_L(defect_affine(exact_point_from_json(read_json(o.point)))), out);
}

int catalog_cmd(const Options& o, std::ostream& out)
{
    const Space space = parse_space(o.space);
    const Model model = parse_model(o.model);
    if (o.mode == "float") {
        std::optional<double> param;
        if (!o.param.empty()) param = float_scalar(o.param, "--param");
        out << point_to_json(catalog_float(space, model, param)).dump() << '\n';
        return kPass;
    }
    std::optional<RationalFunction> param;
    if (!o.param.empty()) param = exact_scalar(o.param, "--param");
    const auto p = catalog(space, model, param);
    const auto& h = p.hopf_shape();
    if (!hopf_check(h.alpha, h.lambda, h.nu, p.c()).is_zero()) {
        throw std::logic_error("catalog point fails the Hopf relation");
    }
    out << point_to_json(p).dump() << '\n';
    return kPass;
}

int report_cmd(const Options& o, std::ostream& out)
{
    const auto r = o.mode == "float" ? main_theorem_report_float(o.seed, o.samples)
                                     : main_theorem_report(o.seed, o.samples);
    out << (o.format == "json" ? r.to_json() : r.to_table());
    return r.matches() ? kPass : kMathFailure;
}

int verify_cmd(const Options& o, std::ostream& out)
{
    DerivationScript script;
    try {
        script = DerivationScript::load(o.script);
    } catch (const ScriptSyntaxError& e) {
        throw InputError(o.script + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
    const auto report = run_script(script);
    out << report.to_text();
    return report.passed ? kPass : kMathFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Pseudo-parallel structure Jacobi operator laboratory", "ppj"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--mode", o.mode, "Scalar ring")->check(CLI::IsMember({"exact", "float"}));
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--out", o.out, "Write output to this file");
    };

    auto* check = app.add_subcommand("check", "Verdict for a point, or the defect at a given L");
    check->add_option("--point", o.point, "PointData JSON file")->required();
    check->add_option("--L", o.l_value, "Value of L");
    add_common(check);

    auto* solve = app.add_subcommand("solve-l", "Admissible set of L for a point");
    solve->add_option("--point", o.point, "PointData JSON file")->required();
    add_common(solve);

    auto* cat = app.add_subcommand("catalog", "PointData of a model hypersurface");
    cat->add_option("--space", o.space, "cp2 or ch2")->required();
    cat->add_option("--model", o.model, "geodesic_sphere, horosphere, tube_hyperplane, tube_curve")->required();
    cat->add_option("--param", o.param, "Family parameter");
    add_common(cat);

    auto* rep = app.add_subcommand("report", "Classification report over the model list");
    rep->add_option("--seed", o.seed, "Seed for the non-Hopf samples");
    rep->add_option("--samples", o.samples, "Number of non-Hopf samples");
    add_common(rep);

    auto* ver = app.add_subcommand("verify", "Run a derivation script");
    ver->add_option("script", o.script, "Script path")->required();
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    std::ostringstream buffer;
    int code = kPass;
    try {
        if (*check) {
            code = o.mode == "float" ? check_float(o, buffer) : check_exact(o, buffer);
        } else if (*solve) {
            code = solve_l(o, buffer);
        } else if (*cat) {
            code = catalog_cmd(o, buffer);
        } else if (*rep) {
            code = report_cmd(o, buffer);
        } else if (*ver) {
            code = verify_cmd(o, buffer);
        }
    } catch (const InvalidPointData& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const PointFormatError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const CatalogError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    if (o.out.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << o.out << '\n';
            return kUsageError;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace ppj::cli
