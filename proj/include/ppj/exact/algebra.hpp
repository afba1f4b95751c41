#pragma once

#include "ppj/exact/rational_function.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace ppj {

using Bindings = std::map<Symbol, RationalFunction>;

/// Simultaneous substitution; unbound symbols are left alone.
/// Throws std::domain_error if a denominator becomes zero.
RationalFunction substitute(const RationalFunction& e, const Bindings& bindings);
RationalFunction substitute(const Polynomial& p, const Bindings& bindings);

struct NotLinearError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root of a relation that is linear in one unknown.
struct LinearSolution {
    RationalFunction value;
    /// Set when the leading coefficient is not a nonzero constant; the root is
    /// valid only where this coefficient does not vanish.
    std::optional<RationalFunction> condition;
};

/// Solves num(rel) = a*x + b = 0 for x. Throws NotLinearError if the numerator
/// has degree other than one in x.
LinearSolution solve_linear(const RationalFunction& rel, Symbol x);

/// Same, treating x^power as the unknown. Every occurrence of x in the
/// numerator must be as x^0 or x^power.
LinearSolution solve_for_power(const RationalFunction& rel, Symbol x, unsigned power);

/// k != 0 with e == k * tmpl, if such a rational constant exists.
std::optional<Rational> factor_match(const RationalFunction& e, const RationalFunction& tmpl);

/// Replaces x^power (and higher multiples) by value in e.
RationalFunction substitute_power(const RationalFunction& e, Symbol x, unsigned power,
                                  const RationalFunction& value);

}  // namespace ppj
