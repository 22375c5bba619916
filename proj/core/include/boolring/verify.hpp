#pragma once

// Exhaustive and randomized self-checks over small rings, run by the CLI's
// `verify all`.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "boolring/ideal.hpp"

namespace boolring {

struct VerifyOptions {
  OracleBound oracle{};
  std::uint64_t seed = 20240601;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;  ///< first failing case, if any
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool ok() const { return failed() == 0; }
};

VerifyReport verify_all(const VerifyOptions& options = {});

}  // namespace boolring
