#pragma once

// P(X)/P(A) ≅ P(X − A) and P(X) ≅ Fun(X, Z2).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "boolring/powerset.hpp"

namespace boolring {

/// The projection P(X) → P(X − A) that drops the points of A.
class QuotientMap {
 public:
  const GroundSet& source() const noexcept { return modulus_.ground(); }
  const RingElem& modulus() const noexcept { return modulus_; }
  /// Labels of X − A in source order.
  const GroundSet& target() const noexcept { return target_; }
  /// kept()[j] is the source index of target label j.
  const std::vector<std::size_t>& kept() const noexcept { return kept_; }

 private:
  friend QuotientMap quotient(const GroundSet& g, const RingElem& a);
  QuotientMap(RingElem modulus, GroundSet target, std::vector<std::size_t> kept)
      : modulus_(std::move(modulus)), target_(std::move(target)), kept_(std::move(kept)) {}

  RingElem modulus_;
  GroundSet target_;
  std::vector<std::size_t> kept_;
};

/// Throws GroundMismatch if a is not over g.
QuotientMap quotient(const GroundSet& g, const RingElem& a);

/// u ∩ (X − A), re-indexed into the target.
RingElem project(const QuotientMap& q, const RingElem& u);

/// A preimage of v under project: the same points, read in the source.
RingElem section(const QuotientMap& q, const RingElem& v);

using FunctionTable = std::vector<std::uint8_t>;

/// χ_a as a table over the labels: entry i is 1 iff labels[i] ∈ a.
FunctionTable to_function_table(const RingElem& a);

/// Throws LengthMismatch if the table length differs from g.size(), and
/// OutOfRange for an entry other than 0 or 1.
RingElem from_function_table(const GroundSet& g, const FunctionTable& table);

}  // namespace boolring
