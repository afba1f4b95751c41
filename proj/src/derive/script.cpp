#include "ppj/derive/script.hpp"

#include "ppj/classify/hopf.hpp"
#include "ppj/derive/connection.hpp"
#include "ppj/exact/algebra.hpp"
#include "ppj/exact/parse.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace ppj {

// --- registry -------------------------------------------------------------

namespace {

Polynomial monic(Polynomial p)
{
    if (!p.is_zero()) p *= Rational(1) / p.leading_coefficient();
    return p;
}

}  // namespace

void NonzeroRegistry::add(const RationalFunction& e)
{
    if (e.is_zero()) throw std::invalid_argument("cannot assume that zero is nonzero");
    auto push = [&](const Polynomial& p) {
        if (p.is_constant()) return;
        Polynomial m = monic(p);
        if (std::find(factors_.begin(), factors_.end(), m) == factors_.end()) factors_.push_back(m);
    };
    for (const Polynomial* part : {&e.num(), &e.den()}) {
        Monomial content = part->monomial_content();
        for (const auto& [s, k] : content.factors()) push(Polynomial(s));
        push(part->divide_by_monomial(content));
    }
}

Polynomial NonzeroRegistry::strip(Polynomial p) const
{
    if (p.is_zero()) return p;
    bool changed = true;
    while (changed && !p.is_constant()) {
        changed = false;
        for (const auto& f : factors_) {
            while (!p.is_constant()) {
                auto q = p.divide_exact(f);
                if (!q) break;
                p = std::move(*q);
                changed = true;
            }
        }
    }
    return monic(std::move(p));
}

bool NonzeroRegistry::provably_nonzero(const RationalFunction& e) const
{
    if (e.is_zero()) return false;
    Polynomial p = strip(e.num());
    if (p.is_constant()) return true;
    // Definite sum of even powers, e.g. 4*alpha^2 + beta^2 with alpha != 0.
    int sign = 0;
    bool anchored = false;
    for (const auto& [m, coeff] : p.terms()) {
        int s = sgn(coeff);
        if (sign == 0) sign = s;
        if (s != sign) return false;
        bool all_registered = true;
        for (const auto& [sym, k] : m.factors()) {
            if (k % 2 != 0) return false;
            if (std::find(factors_.begin(), factors_.end(), Polynomial(sym)) == factors_.end()) {
                all_registered = false;
            }
        }
        anchored = anchored || all_registered;
    }
    return anchored;
}

// --- parsing --------------------------------------------------------------

namespace {

const std::vector<std::string_view>& keywords()
{
    static const std::vector<std::string_view> k = {
        "assume",    "assume-nonzero", "spec",          "codazzi",
        "curvcomm",  "pseudo",         "assume-jacobi-zero", "diff",
        "commutator", "subst",         "expect",        "conclude",
        "conclude-jacobi-zero", "contradiction", "external", "cite", "case", "hopf-check"};
    return k;
}

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string strip_comment(std::string_view line)
{
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (line[i] == '#' && !quoted) return std::string(line.substr(0, i));
    }
    return std::string(line);
}

struct LineCursor {
    std::vector<std::pair<int, std::string>> lines;
    std::size_t pos = 0;
};

std::vector<Statement> parse_block(LineCursor& cur, bool nested, bool& closed_with_else)
{
    std::vector<Statement> out;
    closed_with_else = false;
    while (cur.pos < cur.lines.size()) {
        auto [lineno, text] = cur.lines[cur.pos++];
        if (text == "}" || text == "} else {") {
            if (!nested) throw ScriptSyntaxError("line " + std::to_string(lineno) + ": unmatched '}'");
            closed_with_else = text != "}";
            return out;
        }
        Statement st;
        st.line = lineno;
        auto sp = text.find(' ');
        st.keyword = text.substr(0, sp);
        st.args = sp == std::string::npos ? std::string() : trim(text.substr(sp + 1));
        if (std::find(keywords().begin(), keywords().end(), st.keyword) == keywords().end()) {
            throw ScriptSyntaxError("line " + std::to_string(lineno) + ": unknown statement '" +
                                    st.keyword + "'");
        }
        if (st.keyword == "case") {
            if (!st.args.ends_with("{")) {
                throw ScriptSyntaxError("line " + std::to_string(lineno) + ": case must open a block");
            }
            st.args = trim(st.args.substr(0, st.args.size() - 1));
            bool has_else = false;
            st.then_block = parse_block(cur, true, has_else);
            if (!has_else) {
                throw ScriptSyntaxError("line " + std::to_string(lineno) + ": case without else branch");
            }
            bool again = false;
            st.else_block = parse_block(cur, true, again);
            if (again) throw ScriptSyntaxError("line " + std::to_string(lineno) + ": duplicate else");
        }
        out.push_back(std::move(st));
    }
    if (nested) throw ScriptSyntaxError("unterminated block at end of script");
    return out;
}

}  // namespace

DerivationScript DerivationScript::parse(std::string_view text, std::string name,
                                         std::filesystem::path origin)
{
    LineCursor cur;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(strip_comment(raw));
        if (!line.empty()) cur.lines.emplace_back(lineno, std::move(line));
    }
    DerivationScript s;
    s.name = std::move(name);
    s.origin = std::move(origin);
    bool unused = false;
    s.body = parse_block(cur, false, unused);
    return s;
}

DerivationScript DerivationScript::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open script " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.stem().string(), path);
}

std::string_view to_string(StepStatus s)
{
    switch (s) {
    case StepStatus::Pass: return "PASS";
    case StepStatus::Fail: return "FAIL";
    case StepStatus::External: return "EXTERNAL";
    case StepStatus::Cited: return "CITED";
    }
    return "?";
}

std::size_t ScriptReport::count(StepStatus s) const
{
    return static_cast<std::size_t>(
        std::count_if(steps.begin(), steps.end(), [&](const StepResult& r) { return r.status == s; }));
}

std::string ScriptReport::to_text() const
{
    std::ostringstream os;
    for (const auto& st : steps) {
        os << '[' << to_string(st.status) << "] " << std::string(static_cast<std::size_t>(st.depth) * 2, ' ')
           << "line " << st.line << ": " << st.statement;
        if (!st.detail.empty()) os << "  => " << st.detail;
        os << '\n';
    }
    if (passed) {
        os << "PASS (" << steps.size() << " steps";
        if (auto n = count(StepStatus::External)) os << ", " << n << " external";
        if (auto n = count(StepStatus::Cited)) os << ", " << n << " cited";
        os << ")\n";
    } else {
        os << "FAIL at " << failure << '\n';
    }
    return os.str();
}

// --- execution ------------------------------------------------------------

namespace {

struct StepFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Rule {
    Symbol target;
    unsigned power;
    RationalFunction value;
};

struct State {
    std::map<std::string, Relation> relations;
    std::string last;
    NonzeroRegistry registry;
    std::optional<ExactPoint> point;
    std::optional<ConnectionTable> table;
};

std::vector<std::string> split_top(std::string_view s, char sep)
{
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

std::vector<std::string> words(std::string_view s)
{
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

/// "<head> as <labels...>"
std::pair<std::string, std::vector<std::string>> split_as(const std::string& args)
{
    auto pos = args.rfind(" as ");
    if (pos == std::string::npos) throw StepFailure("missing 'as <label>'");
    return {trim(args.substr(0, pos)), words(args.substr(pos + 4))};
}

RationalFunction expression(std::string_view text)
{
    try {
        return parse_expression(text);
    } catch (const ParseError& e) {
        throw StepFailure(e.what());
    }
}

/// "lhs = rhs" as lhs - rhs.
RationalFunction equation(std::string_view text)
{
    auto parts = split_top(text, '=');
    if (parts.size() != 2) throw StepFailure("expected '<lhs> = <rhs>'");
    return expression(parts[0]) - expression(parts[1]);
}

Direction direction(const std::string& name)
{
    auto d = parse_direction(name);
    if (!d) throw StepFailure("unknown frame field '" + name + "'");
    return *d;
}

class Executor {
public:
    Executor(ScriptReport& report, std::vector<std::string>& cite_stack, std::filesystem::path dir)
        : report_(report), cite_stack_(cite_stack), dir_(std::move(dir))
    {
    }

    // Returns true when the block ends in a contradiction.
    bool run_block(const std::vector<Statement>& block, State state, int depth)
    {
        bool closed = false;
        for (const auto& st : block) {
            if (closed) fail(st, depth, "unreachable statement after the block was closed");
            closed = run_statement(st, state, depth);
        }
        return closed;
    }

private:
    [[noreturn]] void fail(const Statement& st, int depth, const std::string& why)
    {
        report_.steps.push_back({st.line, depth, st.text(), StepStatus::Fail, why});
        report_.failure = "line " + std::to_string(st.line) + " (" + st.text() + "): " + why;
        throw StepFailure(why);
    }

    void record(const Statement& st, int depth, StepStatus status, std::string detail)
    {
        report_.steps.push_back({st.line, depth, st.text(), status, std::move(detail)});
    }

    static const Relation& relation(const State& s, const std::string& label)
    {
        auto it = s.relations.find(label);
        if (it == s.relations.end()) throw StepFailure("relation '" + label + "' is not established");
        return it->second;
    }

    // Numerator with registered factors removed and monomial powers reduced to
    // their radical (x^k = 0 gives x = 0).
    static Polynomial core(const State& s, const RationalFunction& e)
    {
        Polynomial p = s.registry.strip(e.num());
        if (p.is_zero()) return p;
        Monomial content = p.monomial_content();
        Monomial radical;
        for (const auto& [sym, k] : content.factors()) radical = radical * Monomial(sym);
        return p.divide_by_monomial(content) * Polynomial(radical, Rational(1));
    }

    static std::string establish(State& s, const std::string& label, RationalFunction e)
    {
        if (label == "_") return {};
        std::string shown = label + ": " + e.to_string() + " = 0";
        s.relations[label] = Relation{label, std::move(e)};
        s.last = label;
        return shown;
    }

    static Rule solve(const State& s, const std::string& ref)
    {
        std::string label = ref;
        std::string target;
        if (auto open = ref.find('['); open != std::string::npos) {
            if (!ref.ends_with("]")) throw StepFailure("malformed reference '" + ref + "'");
            label = trim(ref.substr(0, open));
            target = trim(ref.substr(open + 1, ref.size() - open - 2));
        }
        const Polynomial p = core(s, relation(s, label).expr);
        const RationalFunction rel(p);
        if (p.is_zero()) throw StepFailure("relation '" + label + "' is trivial");

        unsigned power = 1;
        std::optional<Symbol> x;
        if (!target.empty()) {
            std::string name = target;
            if (auto caret = target.rfind('^'); caret != std::string::npos && target.find(')', caret) == std::string::npos) {
                name = trim(target.substr(0, caret));
                power = static_cast<unsigned>(std::stoul(target.substr(caret + 1)));
            }
            x = Symbol::lookup(name);
            if (!x) throw StepFailure("unknown target '" + name + "'");
        } else {
            for (Symbol cand : p.symbols()) {
                if (p.degree_in(cand) != 1) continue;
                if (!s.registry.provably_nonzero(RationalFunction(p.coefficient_in(cand, 1)))) continue;
                x = cand;  // symbols() is ascending, keep the last eligible one
            }
            if (!x) throw StepFailure("relation '" + label + "' has no solvable unknown");
        }
        LinearSolution sol;
        try {
            sol = power == 1 ? solve_linear(rel, *x) : solve_for_power(rel, *x, power);
        } catch (const NotLinearError& e) {
            throw StepFailure("relation '" + label + "': " + e.what());
        }
        if (sol.condition && !s.registry.provably_nonzero(*sol.condition)) {
            throw StepFailure("relation '" + label + "': coefficient " + sol.condition->to_string() +
                              " of " + x->name() + " is not provably nonzero");
        }
        return Rule{*x, power, sol.value};
    }

    static RationalFunction reduce(RationalFunction e, const std::vector<Rule>& rules)
    {
        constexpr int kMaxPasses = 32;
        for (int pass = 0; pass < kMaxPasses; ++pass) {
            bool changed = false;
            for (const auto& r : rules) {
                if (!e.contains(r.target)) continue;
                if (r.power == 1) {
                    e = substitute(e, Bindings{{r.target, r.value}});
                } else {
                    if (e.num().degree_in(r.target) < r.power && e.den().degree_in(r.target) < r.power) continue;
                    e = substitute_power(e, r.target, r.power, r.value);
                }
                changed = true;
            }
            if (!changed) return e;
        }
        throw StepFailure("substitution does not terminate (cyclic rules)");
    }

    std::vector<Rule> rules_from(const State& s, const std::string& refs)
    {
        std::vector<Rule> rules;
        for (const auto& ref : split_top(refs, ',')) rules.push_back(solve(s, ref));
        return rules;
    }

    const ExactPoint& point(const State& s) const
    {
        if (!s.point) throw StepFailure("no spec declared");
        return *s.point;
    }

    static ExactVector field(const std::string& name) { return ExactVector::basis(static_cast<int>(direction(name))); }

    std::string establish_components(State& s, const std::vector<std::string>& labels, const ExactVector& v)
    {
        if (labels.size() != 3) throw StepFailure("expected three component labels");
        std::string shown;
        for (std::size_t k = 0; k < 3; ++k) {
            auto d = establish(s, labels[k], v[k]);
            if (!d.empty()) shown += (shown.empty() ? "" : "; ") + d;
        }
        return shown;
    }

    void declare_spec(State& s, const std::string& args)
    {
        auto sp = args.find(' ');
        std::string kind = args.substr(0, sp);
        std::map<std::string, RationalFunction> values;
        std::vector<std::string> names = kind == "hopf"
                                             ? std::vector<std::string>{"c", "alpha", "lambda", "nu"}
                                             : std::vector<std::string>{"c", "alpha", "beta", "gamma", "delta", "mu"};
        if (kind != "hopf" && kind != "nonhopf") throw StepFailure("spec kind must be hopf or nonhopf");
        for (const auto& n : names) values[n] = RationalFunction::symbol(n);
        if (sp != std::string::npos) {
            for (const auto& b : split_top(args.substr(sp + 1), ',')) {
                auto parts = split_top(b, '=');
                if (parts.size() != 2 || !values.contains(parts[0])) {
                    throw StepFailure("bad binding '" + b + "'");
                }
                RationalFunction v = expression(parts[1]);
                RationalFunction gap = RationalFunction::symbol(parts[0]) - v;
                if (!gap.is_zero() && !implied(s, gap)) {
                    throw StepFailure("binding " + parts[0] + " = " + v.to_string() +
                                      " is not an established relation");
                }
                values[parts[0]] = v;
            }
        }
        try {
            if (kind == "hopf") {
                s.point = ExactPoint::hopf(values["c"], values["alpha"], values["lambda"], values["nu"]);
                s.table.reset();
            } else {
                s.point = ExactPoint::nonhopf(values["c"], values["alpha"], values["beta"], values["gamma"],
                                              values["delta"], values["mu"]);
                s.table = connection_from_spec(*s.point);
            }
        } catch (const std::invalid_argument& e) {
            throw StepFailure(e.what());
        }
    }

    static bool implied(const State& s, const RationalFunction& gap)
    {
        Polynomial want = core(s, gap);
        return std::any_of(s.relations.begin(), s.relations.end(), [&](const auto& kv) {
            return factor_match(RationalFunction(core(s, kv.second.expr)), RationalFunction(want)).has_value();
        });
    }

    bool run_statement(const Statement& st, State& s, int depth)
    {
        try {
            return dispatch(st, s, depth);
        } catch (const StepFailure& e) {
            if (report_.failure.empty()) fail(st, depth, e.what());
            throw;
        } catch (const std::exception& e) {
            fail(st, depth, e.what());
        }
    }

    bool dispatch(const Statement& st, State& s, int depth)
    {
        const std::string& kw = st.keyword;
        const std::string& args = st.args;

        if (kw == "assume") {
            auto colon = args.find(':');
            if (colon == std::string::npos) throw StepFailure("expected 'assume <label>: <equation>'");
            record(st, depth, StepStatus::Pass, establish(s, trim(args.substr(0, colon)), equation(args.substr(colon + 1))));
            return false;
        }
        if (kw == "assume-nonzero") {
            for (const auto& e : split_top(args, ',')) s.registry.add(expression(e));
            record(st, depth, StepStatus::Pass, {});
            return false;
        }
        if (kw == "spec") {
            declare_spec(s, args);
            record(st, depth, StepStatus::Pass, {});
            return false;
        }
        if (kw == "codazzi" || kw == "curvcomm" || kw == "pseudo" || kw == "assume-jacobi-zero") {
            auto [head, labels] = split_as(args);
            auto f = words(head);
            const auto& p = point(s);
            ExactVector v;
            if (kw == "codazzi") {
                if (f.size() != 2 || !s.table) throw StepFailure("codazzi needs two fields and a non-Hopf spec");
                v = codazzi_residual(p, *s.table, field(f[0]), field(f[1]));
            } else if (kw == "curvcomm") {
                if (f.size() != 3 || !s.table) throw StepFailure("curvcomm needs three fields and a non-Hopf spec");
                v = curvature_commutation_residual(p, *s.table, field(f[0]), field(f[1]), field(f[2]));
            } else if (kw == "pseudo") {
                if (f.size() != 3) throw StepFailure("pseudo needs three fields");
                const auto a = shape_from_spec(p);
                const auto l = jacobi_l(p.c(), a);
                const auto x = field(f[0]);
                const auto y = field(f[1]);
                const auto z = field(f[2]);
                const auto lz = l.apply(z);
                const auto lhs = riemann(p.c(), a, x, y, lz) - l.apply(riemann(p.c(), a, x, y, z));
                const auto brace = wedge(x, y, lz) - l.apply(wedge(x, y, z));
                v = lhs - RationalFunction::symbol("L") * brace;
            } else {
                if (f.size() != 1) throw StepFailure("assume-jacobi-zero needs one field");
                v = jacobi_l(p).apply(field(f[0]));
            }
            record(st, depth, StepStatus::Pass, establish_components(s, labels, v));
            return false;
        }
        if (kw == "diff") {
            auto [head, labels] = split_as(args);
            auto f = words(head);
            if (f.size() != 3 || f[1] != "along" || labels.size() != 1) {
                throw StepFailure("expected 'diff <label> along <X> as <label>'");
            }
            Polynomial base = core(s, relation(s, f[0]).expr);
            RationalFunction d(differentiate(base, direction(f[2])));
            record(st, depth, StepStatus::Pass, establish(s, labels[0], d));
            return false;
        }
        if (kw == "commutator") {
            auto [head, labels] = split_as(args);
            auto f = words(head);
            if (f.size() != 3 || labels.size() != 1 || !s.table) {
                throw StepFailure("expected 'commutator <X> <Y> <symbol> as <label>' with a non-Hopf spec");
            }
            auto sym = Symbol::lookup(f[2]);
            if (!sym) throw StepFailure("unknown symbol '" + f[2] + "'");
            auto rel = commutator_relation(*s.table, direction(f[0]), direction(f[1]), *sym);
            record(st, depth, StepStatus::Pass, establish(s, labels[0], rel));
            return false;
        }
        if (kw == "subst") {
            auto [head, labels] = split_as(args);
            auto using_pos = head.find(" using ");
            if (using_pos == std::string::npos || labels.size() != 1) {
                throw StepFailure("expected 'subst <label> using <refs> as <label>'");
            }
            const auto& src = relation(s, trim(head.substr(0, using_pos)));
            auto rules = rules_from(s, head.substr(using_pos + 7));
            auto out = reduce(RationalFunction(core(s, src.expr)), rules);
            record(st, depth, StepStatus::Pass, establish(s, labels[0], out));
            return false;
        }
        if (kw == "expect") {
            auto colon = args.find(':');
            if (colon == std::string::npos) throw StepFailure("expected 'expect <label>: <equation>'");
            const auto& rel = relation(s, trim(args.substr(0, colon)));
            RationalFunction tmpl = equation(args.substr(colon + 1));
            if (auto k = factor_match(rel.expr, tmpl)) {
                record(st, depth, StepStatus::Pass, "k = " + k->get_str());
                return false;
            }
            if (auto k = factor_match(RationalFunction(core(s, rel.expr)), RationalFunction(core(s, tmpl)))) {
                record(st, depth, StepStatus::Pass,
                       "k = " + k->get_str() + " modulo nonzero factors");
                return false;
            }
            throw StepFailure("no rational k with " + rel.expr.to_string() + " = k*(" + tmpl.to_string() + ")");
        }
        if (kw == "conclude") {
            auto using_pos = args.find(" using ");
            RationalFunction e = equation(args.substr(0, using_pos));
            std::vector<Rule> rules;
            if (using_pos != std::string::npos) {
                rules = rules_from(s, args.substr(using_pos + 7));
            } else {
                rules = automatic_rules(s);
            }
            auto r = reduce(e, rules);
            if (!r.is_zero()) throw StepFailure("residual " + r.to_string() + " is not zero");
            record(st, depth, StepStatus::Pass, "0 = 0");
            return false;
        }
        if (kw == "hopf-check") {
            const auto& p = point(s);
            if (!p.is_hopf()) throw StepFailure("hopf-check needs a Hopf spec");
            const auto& h = p.hopf_shape();
            auto r = hopf_check(h.alpha, h.lambda, h.nu, p.c());
            if (auto using_pos = args.find("using "); using_pos != std::string::npos) {
                r = reduce(r, rules_from(s, args.substr(using_pos + 6)));
            }
            if (!r.is_zero()) throw StepFailure("hopf relation residual " + r.to_string() + " is not zero");
            record(st, depth, StepStatus::Pass, "lambda*nu = alpha/2*(lambda+nu) + c/4");
            return false;
        }
        if (kw == "conclude-jacobi-zero") {
            auto l = jacobi_l(point(s));
            if (!l.is_zero()) throw StepFailure("structure Jacobi operator does not vanish");
            record(st, depth, StepStatus::Pass, "l = 0");
            return false;
        }
        if (kw == "contradiction") {
            std::string label = s.last;
            std::optional<RationalFunction> expected;
            std::string spec = args;
            if (auto colon = spec.find(':'); colon != std::string::npos) {
                expected = expression(spec.substr(colon + 1));
                spec = trim(spec.substr(0, colon));
            }
            if (!spec.empty()) label = spec;
            if (label.empty()) throw StepFailure("no relation to contradict");
            const auto& rel = relation(s, label);
            if (!s.registry.provably_nonzero(rel.expr)) {
                throw StepFailure(rel.expr.to_string() + " = 0 does not contradict the standing assumptions");
            }
            std::string detail = label + ": " + rel.expr.to_string() + " = 0";
            if (expected) {
                if (!s.registry.provably_nonzero(*expected) || !rel.expr.num().divide_exact(expected->num())) {
                    throw StepFailure("relation is not of the form " + expected->to_string() + " = 0");
                }
                detail = expected->to_string() + " = 0 (" + detail + ")";
            }
            record(st, depth, StepStatus::Pass, detail);
            return true;
        }
        if (kw == "external") {
            record(st, depth, StepStatus::External, "unverified external step");
            return true;
        }
        if (kw == "cite") {
            return cite(st, depth, trim(args));
        }
        if (kw == "case") {
            std::string head = args;
            std::string label = "case" + std::to_string(st.line);
            if (args.find(" as ") != std::string::npos) {
                auto [h, labels] = split_as(args);
                if (labels.size() != 1) throw StepFailure("expected 'case <equation> [as <label>] {'");
                head = h;
                label = labels[0];
            }
            RationalFunction cond = equation(head);
            record(st, depth, StepStatus::Pass, "split on " + cond.to_string());
            State yes = s;
            establish(yes, label, cond);
            if (!run_block(st.then_block, std::move(yes), depth + 1)) {
                fail(st, depth, "branch '" + cond.to_string() + " = 0' does not reach a contradiction");
            }
            State no = s;
            no.registry.add(cond);
            report_.steps.push_back({st.line, depth, "else (" + cond.to_string() + " != 0)", StepStatus::Pass, {}});
            if (!run_block(st.else_block, std::move(no), depth + 1)) {
                fail(st, depth, "branch '" + cond.to_string() + " != 0' does not reach a contradiction");
            }
            return true;
        }
        throw StepFailure("unknown statement");
    }

    static std::vector<Rule> automatic_rules(const State& s)
    {
        std::vector<Rule> rules;
        for (const auto& [label, rel] : s.relations) {
            try {
                Rule r = solve(s, label);
                bool taken = std::any_of(rules.begin(), rules.end(), [&](const Rule& o) { return o.target == r.target; });
                if (!taken) rules.push_back(std::move(r));
            } catch (const StepFailure&) {
                // not solvable for a single unknown; skip
            }
        }
        return rules;
    }

    bool cite(const Statement& st, int depth, const std::string& name)
    {
        if (std::find(cite_stack_.begin(), cite_stack_.end(), name) != cite_stack_.end()) {
            throw StepFailure("circular citation of '" + name + "'");
        }
        auto path = dir_ / (name + ".dsl");
        DerivationScript cited;
        try {
            cited = DerivationScript::load(path);
        } catch (const std::exception& e) {
            throw StepFailure(e.what());
        }
        ScriptReport sub;
        sub.name = cited.name;
        cite_stack_.push_back(name);
        Executor inner(sub, cite_stack_, path.parent_path());
        try {
            inner.run_block(cited.body, State{}, 0);
            sub.passed = true;
        } catch (const StepFailure&) {
            sub.passed = false;
        }
        cite_stack_.pop_back();
        if (!sub.passed) throw StepFailure("cited script '" + name + "' fails: " + sub.failure);
        record(st, depth, StepStatus::Cited, name + " PASS (" + std::to_string(sub.steps.size()) + " steps)");
        return true;
    }

    ScriptReport& report_;
    std::vector<std::string>& cite_stack_;
    std::filesystem::path dir_;
};

}  // namespace

ScriptReport run_script(const DerivationScript& script)
{
    ScriptReport report;
    report.name = script.name;
    std::vector<std::string> stack{script.name};
    Executor ex(report, stack, script.origin.parent_path());
    try {
        ex.run_block(script.body, State{}, 0);
        report.passed = true;
    } catch (const StepFailure&) {
        report.passed = false;
    }
    return report;
}

}  // namespace ppj
