#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "boolring/dsl/ast.hpp"
#include "boolring/dsl/lexer.hpp"

namespace boolring::dsl {

/// Argument shape of a command. Each character of `signature` is one
/// argument: E expression, I ideal (name or `ideal(...)`), N integer,
/// W word. A trailing '*' repeats the preceding kind to the end of the
/// statement. `choices`, when non-empty, restricts the first word.
struct VerbSpec {
  std::string_view name;
  std::string_view signature;
  std::vector<std::string_view> choices;
  std::string_view usage;
  std::string_view summary;
};

const std::vector<VerbSpec>& verbs();
/// Sub-commands of `fincof`, keyed by their first word.
const std::vector<VerbSpec>& fincof_verbs();

/// Throws ParseError.
std::vector<Statement> parse(std::string_view source);

}  // namespace boolring::dsl
