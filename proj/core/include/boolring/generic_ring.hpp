#pragma once

// The full product ring Z2 × ... × Z2 (n copies), handled only through its
// ring operations, and its identification with the power-set ring on its
// atoms.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolring/powerset.hpp"

namespace boolring {

/// An element of Z2^n; coordinate i is bit i. Written "101" with
/// coordinate 0 first.
using BoolVec = Bits;

class GenericBoolRing {
 public:
  explicit GenericBoolRing(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const noexcept { return dimension_; }

  BoolVec zero() const { return BoolVec(dimension_); }
  BoolVec one() const { return ~zero(); }
  /// Parses "101"; throws LengthMismatch or OutOfRange.
  BoolVec element(std::string_view coords) const;
  /// Bit i of mask becomes coordinate i. Requires dimension <= 64.
  BoolVec from_mask(std::uint64_t mask) const;

  /// A spanning set of the ring as a Z2-vector space: the coordinate
  /// vectors.
  std::vector<BoolVec> basis() const;

  BoolVec add(const BoolVec& a, const BoolVec& b) const;
  BoolVec mul(const BoolVec& a, const BoolVec& b) const;
  BoolVec complement(const BoolVec& a) const { return add(one(), a); }
  bool leq(const BoolVec& a, const BoolVec& b) const { return mul(a, b) == a; }

 private:
  void check(const BoolVec& a) const;
  std::size_t dimension_;
};

std::string to_string(const BoolVec& v);

/// Atoms of the Boolean subring generated by `generators`, found by
/// splitting 1 into b·g and b·(1 + g) for each generator g in turn and
/// keeping the nonzero blocks. Sorted by their lowest coordinate.
std::vector<BoolVec> refine_atoms(const GenericBoolRing& r, std::span<const BoolVec> generators);

/// Minimal nonzero elements under a ⪯ b ⟺ ab = a. Throws ZeroRing for
/// dimension 0.
std::vector<BoolVec> find_atoms(const GenericBoolRing& r);

constexpr std::size_t kStoneDefaultBound = 16;

/// b ↦ { atoms α : αb = α }, a ring map into the power-set ring whose
/// ground labels name the atoms ("e1", "e2", ...).
class StoneMap {
 public:
  const GenericBoolRing& ring() const noexcept { return ring_; }
  const std::vector<BoolVec>& atom_list() const noexcept { return atoms_; }
  const GroundSet& atom_ground() const noexcept { return ground_; }

  RingElem operator()(const BoolVec& b) const;
  /// Sum of the atoms named by s.
  BoolVec inverse(const RingElem& s) const;

 private:
  friend StoneMap stone_iso(const GenericBoolRing& r, std::size_t bound);
  StoneMap(GenericBoolRing ring, std::vector<BoolVec> atoms, GroundSet ground)
      : ring_(ring), atoms_(std::move(atoms)), ground_(std::move(ground)) {}

  GenericBoolRing ring_;
  std::vector<BoolVec> atoms_;
  GroundSet ground_;
};

/// Throws OracleBoundExceeded if the dimension exceeds `bound`, ZeroRing for
/// dimension 0.
StoneMap stone_iso(const GenericBoolRing& r, std::size_t bound = kStoneDefaultBound);

struct StoneCheck {
  bool homomorphism = true;
  bool bijective = true;
  std::uint64_t pairs_checked = 0;
  bool ok() const noexcept { return homomorphism && bijective; }
};

/// Exhaustive over all pairs when dimension <= exhaustive_dim, otherwise on
/// `samples` random pairs (bijectivity then via inverse round-trips).
StoneCheck verify_stone_iso(const StoneMap& map, std::size_t exhaustive_dim = 4,
                            std::size_t samples = 1000, std::uint64_t seed = 1);

/// 1 + atom, which generates a maximal principal ideal. Throws NotAnAtom.
BoolVec maximal_principal_from_atom(const GenericBoolRing& r, const BoolVec& atom);

}  // namespace boolring
