#pragma once

#include <string>
#include <vector>

#include "boolring/dsl/ast.hpp"

namespace boolring::dsl {

/// Canonical source text with the fewest parentheses that re-parse to the
/// same tree.
std::string print(const Expr& e);
std::string print(const Statement& s);
/// One statement per line.
std::string print(const std::vector<Statement>& program);

}  // namespace boolring::dsl
