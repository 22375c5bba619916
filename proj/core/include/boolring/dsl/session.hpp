#pragma once

// Evaluation of parsed statements against a mutable session, plus the batch
// and interactive drivers used by the command-line tool.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "boolring/dsl/ast.hpp"
#include "boolring/error.hpp"
#include "boolring/fincof.hpp"
#include "boolring/ideal.hpp"
#include "boolring/json.hpp"

namespace boolring::dsl {

enum class Mode { PowerSet, FinCof };

struct SessionOptions {
  std::size_t ground_max = 64;
  OracleBound oracle{};
};

struct Report {
  std::string text;
  Json json;
  /// Set when a self-check ran and did not pass.
  bool verification_failed = false;
};

/// A library error raised while evaluating the statement at `span`.
class EvalError : public Error {
 public:
  EvalError(ErrorKind kind, Span span, const std::string& message);
  const Span& span() const noexcept { return span_; }

 private:
  Span span_;
};

using Value = std::variant<RingElem, Ideal, FinCofElem>;

class Session {
 public:
  explicit Session(SessionOptions options = {});

  /// Throws EvalError; the session is unchanged when a statement fails.
  Report eval(const Statement& statement);

  const std::optional<GroundSet>& ground() const noexcept { return ground_; }
  Mode mode() const noexcept { return mode_; }
  const std::map<std::string, Value>& bindings() const noexcept { return bindings_; }
  const SessionOptions& options() const noexcept { return options_; }

 private:
  struct Impl;

  SessionOptions options_;
  std::optional<GroundSet> ground_;
  Mode mode_ = Mode::PowerSet;
  std::map<std::string, Value> bindings_;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitEval = 2;
inline constexpr int kExitVerify = 3;

/// Process exit code for an error kind. Parse errors give 1, name errors 2,
/// failed verification 3; every other kind has its own code from 10 up.
int exit_code(ErrorKind kind);

struct RunOptions {
  bool json = false;
};

/// "line:col: message" followed by the offending source line and a caret.
std::string diagnostic(std::string_view source, const Span& span, const std::string& message);

/// Parses then evaluates `source`, stopping at the first error. Returns the
/// process exit code.
int run_script(Session& session, std::string_view source, std::ostream& out, std::ostream& err,
               RunOptions options = {});

/// Line-at-a-time loop until end of input. Errors are reported and the loop
/// goes on.
void run_repl(Session& session, std::istream& in, std::ostream& out, std::ostream& err,
              RunOptions options = {}, bool prompt = true);

}  // namespace boolring::dsl
