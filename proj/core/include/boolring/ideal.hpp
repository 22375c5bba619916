#pragma once

// Finitely generated ideals of P(X).
//
// Every finitely generated ideal of a Boolean ring is principal: the pair
// (x, y) generates the same ideal as x + y + xy. An Ideal therefore stores
// one canonical generator next to the generators it was built from, and as
// a set of elements it is exactly { B : B ⪯ principal } = P(principal).

#include <cstddef>
#include <vector>

#include "boolring/powerset.hpp"

namespace boolring {

/// Ground-size bound for exponential oracle checks.
struct OracleBound {
  static constexpr std::size_t kDefault = 4;
  static constexpr std::size_t kHardCap = 5;
  std::size_t value = kDefault;
};

class Ideal {
 public:
  /// Zero ideal of the empty ground set.
  Ideal();

  const GroundSet& ground() const noexcept { return principal_.ground(); }
  const std::vector<RingElem>& generators() const noexcept { return generators_; }
  const RingElem& principal() const noexcept { return principal_; }

  bool is_zero() const noexcept { return principal_.is_zero(); }
  bool is_unit() const noexcept { return principal_.is_one(); }

  /// Ideals are equal iff their principal generators are.
  friend bool operator==(const Ideal& a, const Ideal& b) { return a.principal_ == b.principal_; }

 private:
  friend Ideal ideal_from_generators(const GroundSet& g, std::vector<RingElem> gens);
  Ideal(std::vector<RingElem> generators, RingElem principal);

  std::vector<RingElem> generators_;
  RingElem principal_;
};

/// The reduction step r(a, b) = a + b + ab. On sets this is a ∪ b.
RingElem reduce_pair(const RingElem& a, const RingElem& b);

/// Left fold of `gens` under reduce_pair, starting from zero.
/// Throws GroundMismatch if a generator is over another ground set.
Ideal ideal_from_generators(const GroundSet& g, std::vector<RingElem> gens);

/// (a).
Ideal principal_ideal(const RingElem& a);
Ideal zero_ideal(const GroundSet& g);
Ideal unit_ideal(const GroundSet& g);

/// Coefficients c_i with principal == Σ c_i · g_i. Unrolling the fold gives
/// c_i = complement of (g_1 ∪ ... ∪ g_{i-1}), since r + g = r + (1 + r)g.
std::vector<RingElem> generator_coefficients(const Ideal& I);

bool member(const RingElem& a, const Ideal& I);
/// I ⊆ J.
bool contains(const Ideal& J, const Ideal& I);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// Intersection of a family; the empty family gives the unit ideal of g.
Ideal ideal_intersect_all(const GroundSet& g, const std::vector<Ideal>& family);

/// √I. Idempotence makes every ideal radical, so this returns I. On ground
/// sets within the default oracle bound the result is checked against the
/// definitional radical.
Ideal radical(const Ideal& I);

bool is_proper(const Ideal& I);
/// Throws ZeroRing on the empty ground set.
bool is_maximal(const Ideal& I);
bool is_prime(const Ideal& I);
bool is_primary(const Ideal& I);

/// All 2^|X| ideals, ordered by principal generator value.
/// Throws OracleBoundExceeded when g.size() > bound.
std::vector<Ideal> enumerate_ideals(const GroundSet& g, OracleBound bound = {});

std::string to_string(const Ideal& I);

}  // namespace boolring
