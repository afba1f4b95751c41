#pragma once

#include "ppj/exact/rational_function.hpp"

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ppj {

/// An expression asserted to vanish identically.
struct Relation {
    std::string label;
    RationalFunction expr;
};

/// Standing nonvanishing assumptions (c != 0, beta != 0, ...). Relations are
/// compared modulo these factors.
class NonzeroRegistry {
public:
    /// Registers every monomial factor and the remaining cofactor of the
    /// numerator, and the denominator.
    void add(const RationalFunction& e);

    /// Divides out every registered factor as often as it divides.
    Polynomial strip(Polynomial p) const;

    /// True when the numerator is a nonzero constant after stripping, or a
    /// definite sum of even powers with a term built from registered symbols.
    bool provably_nonzero(const RationalFunction& e) const;

    const std::vector<Polynomial>& factors() const { return factors_; }

private:
    std::vector<Polynomial> factors_;
};

struct ScriptSyntaxError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One line of a derivation script; case statements carry two sub-blocks.
struct Statement {
    int line = 0;
    std::string keyword;
    std::string args;
    std::vector<Statement> then_block;
    std::vector<Statement> else_block;

    std::string text() const { return args.empty() ? keyword : keyword + " " + args; }
};

/// Line-oriented proof script. Statement forms:
///
///   assume <label>: <lhs> = <rhs>
///   assume-nonzero <expr>[, <expr>...]
///   spec hopf|nonhopf [<symbol> = <expr>, ...]
///   codazzi <X> <Y> as <l1> <l2> <l3>
///   curvcomm <X> <Y> <Z> as <l1> <l2> <l3>
///   pseudo <X> <Y> <Z> as <l1> <l2> <l3>
///   assume-jacobi-zero <X> as <l1> <l2> <l3>
///   diff <label> along <X> as <label>
///   commutator <X> <Y> <symbol> as <label>
///   subst <label> using <ref>[, <ref>...] as <label>      ref: label or label[target]
///   expect <label>: <lhs> = <rhs>
///   conclude <lhs> = <rhs> [using <ref>, ...]
///   conclude-jacobi-zero
///   contradiction [<label>] [: <expr>]
///   external "<text>"
///   cite <script-name>
///   hopf-check [using <ref>, ...]
///   case <lhs> = <rhs> [as <label>] { ... } else { ... }
///
/// Component labels name the U, phiU, xi coordinates; "_" discards one.
struct DerivationScript {
    std::string name;
    std::filesystem::path origin;
    std::vector<Statement> body;

    /// Throws ScriptSyntaxError on unknown keywords or unbalanced blocks.
    static DerivationScript parse(std::string_view text, std::string name,
                                  std::filesystem::path origin = {});
    static DerivationScript load(const std::filesystem::path& path);
};

enum class StepStatus { Pass, Fail, External, Cited };

std::string_view to_string(StepStatus s);

struct StepResult {
    int line = 0;
    int depth = 0;
    std::string statement;
    StepStatus status = StepStatus::Pass;
    std::string detail;
};

struct ScriptReport {
    std::string name;
    bool passed = false;
    std::vector<StepResult> steps;
    /// Text of the first failing statement, empty on success.
    std::string failure;

    std::size_t count(StepStatus s) const;
    /// Per-step lines followed by a "PASS (n steps...)" or "FAIL ..." summary.
    std::string to_text() const;
};

/// Executes statements in order; the first failing statement aborts the run.
/// Both branches of a case split must end in a contradiction.
ScriptReport run_script(const DerivationScript& script);

}  // namespace ppj
