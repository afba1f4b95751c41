#pragma once

#include "ppj/exact/rational_function.hpp"

#include <stdexcept>
#include <string_view>

namespace ppj {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses the canonical text form (and ordinary infix input) back into a
/// rational function. Grammar: + - * / ^ with integer exponents,
/// parentheses, integer or decimal literals, alphabet symbols, and
/// D_<dir>(<expr>) for the formal derivative of an expression along a frame
/// field (D_U(alpha) is the jet of alpha).
RationalFunction parse_expression(std::string_view text);

}  // namespace ppj
