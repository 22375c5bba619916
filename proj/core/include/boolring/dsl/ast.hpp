#pragma once

// Syntax tree of the ring expression language.
//
//   stmt   := "ground" label* | "let" name "=" expr
//           | "ideal" name "=" "(" [expr ("," expr)*] ")" | verb arg*
//   expr   := term ("+" term)*
//   term   := factor ("*" factor)*
//   factor := atom ["'"]
//   atom   := name | "{" [label ("," label)*] "}" | "0" | "1" | "(" expr ")"
//
// Every node records where it came from. Structural comparison ignores
// those spans.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace boolring::dsl {

/// 1-based line and columns; `end` is one past the last column.
struct Span {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t end = 1;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct NameRef {
  std::string name;
};
struct SetLit {
  std::vector<std::string> labels;
};
/// The keywords 0 and 1.
struct Constant {
  bool one = false;
};
struct Binary {
  char op = '+';  ///< '+' or '*'
  ExprPtr lhs, rhs;
};
struct Complement {
  ExprPtr operand;
};

struct Expr {
  std::variant<NameRef, SetLit, Constant, Binary, Complement> node;
  Span span;
};

/// An ideal argument: a bound name or an inline `ideal(e1, ..., ek)`.
struct IdealRef {
  std::variant<std::string, std::vector<ExprPtr>> ref;
  Span span;
};

struct Word {
  std::string text;
  Span span;
};

struct Integer {
  std::uint64_t value = 0;
  Span span;
};

using Arg = std::variant<ExprPtr, IdealRef, Integer, Word>;

struct GroundDecl {
  std::vector<std::string> labels;
};
struct LetElem {
  std::string name;
  ExprPtr value;
};
struct LetIdeal {
  std::string name;
  std::vector<ExprPtr> generators;
};
struct Command {
  std::string verb;
  std::vector<Arg> args;
};

struct Statement {
  std::variant<GroundDecl, LetElem, LetIdeal, Command> node;
  Span span;
};

bool same_structure(const Expr& a, const Expr& b);
bool same_structure(const Statement& a, const Statement& b);
bool same_structure(const std::vector<Statement>& a, const std::vector<Statement>& b);

Span span_of(const Arg& arg);

}  // namespace boolring::dsl
