#pragma once

#include <string>

#include "relift/ast.hpp"

namespace relift {

// Renders a program tree as source text: one statement per line, four-space
// indentation, minimal parentheses under C precedence. Throws ShapeError on
// trees the grammar cannot express (wrong arities, reserved tokens).
std::string pretty_print(const Node& program);

// Renders a bare expression subtree (no trailing semicolon).
std::string print_expr(const Node& expr);

// Inverse of pretty_print. Accepts any whitespace layout. Reports the first
// error with line and column. parse(pretty_print(t)) reproduces t exactly.
Node parse_program(const std::string& text);

}  // namespace relift
