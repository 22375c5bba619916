#pragma once

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "boolring/error.hpp"
#include "boolring/powerset.hpp"

namespace testing_support {

/// The kind of the boolring::Error thrown by fn, failing the test if none is.
template <class F>
boolring::ErrorKind kind_of(F&& fn) {
  try {
    fn();
  } catch (const boolring::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return boolring::ErrorKind::VerificationFailed;
}

/// Ground set a, b, c, ... of size n.
inline boolring::GroundSet letters(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, char('a' + i)));
  return boolring::new_ground(labels);
}

}  // namespace testing_support
