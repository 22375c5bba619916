#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "boolring/dsl/ast.hpp"
#include "boolring/error.hpp"

namespace boolring::dsl {

enum class Tok { Ident, Int, LBrace, RBrace, LParen, RParen, Comma, Plus, Star, Quote, Equals, Separator, End };

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

std::string_view describe(Tok kind);

/// A syntax error with its position and the tokens that would have been
/// accepted there.
class ParseError : public Error {
 public:
  ParseError(Span span, const std::string& message, std::vector<std::string> expected = {});

  const Span& span() const noexcept { return span_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  Span span_;
  std::vector<std::string> expected_;
};

/// Newlines and ';' both become Separator tokens; '#' starts a comment.
/// The stream always ends with an End token.
std::vector<Token> lex(std::string_view source);

}  // namespace boolring::dsl
