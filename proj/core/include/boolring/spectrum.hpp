#pragma once

// Maximal spectrum and reduced primary decompositions in P(X), X finite.
//
// The maximal ideals are the m_x = P(X − {x}), one per point, and every
// proper ideal (A) is the intersection of the m_x with x ∉ A. Primary,
// prime and maximal ideals coincide in a Boolean ring, so that intersection
// is the unique reduced primary decomposition.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "boolring/ideal.hpp"

namespace boolring {

struct MaxIdealDescriptor {
  std::string point;
  Ideal ideal;  ///< m_point, generated by the complement of the atom {point}

  friend bool operator==(const MaxIdealDescriptor&, const MaxIdealDescriptor&) = default;
};

/// m_x for the label x. Throws UnknownLabel.
MaxIdealDescriptor maximal_ideal_at(const GroundSet& g, std::string_view x);

/// One descriptor per label, in label order. Throws ZeroRing on |X| = 0.
std::vector<MaxIdealDescriptor> maximal_ideals(const GroundSet& g);

class Decomposition {
 public:
  /// Packages a candidate decomposition. `verified` is computed here by
  /// intersecting the factors and comparing with the target; `reduced`
  /// stays false until verify_reduced runs.
  static Decomposition assemble(Ideal target, std::vector<MaxIdealDescriptor> factors);

  const Ideal& target() const noexcept { return target_; }
  const std::vector<MaxIdealDescriptor>& factors() const noexcept { return factors_; }
  bool verified() const noexcept { return verified_; }
  bool reduced() const noexcept { return reduced_; }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  friend bool verify_reduced(Decomposition& d);
  Decomposition() = default;

  Ideal target_;
  std::vector<MaxIdealDescriptor> factors_;
  bool verified_ = false;
  bool reduced_ = false;
};

/// Intersection of the m_x containing I, factors in label order.
/// Throws ImproperIdeal for the unit ideal and ZeroRing when |X| = 0.
Decomposition decompose(const Ideal& I);

/// Factors pairwise distinct, and no factor contains the intersection of the
/// others. Stores and returns the verdict.
/// Throws UnverifiedDecomposition if the factors do not intersect to the target.
bool verify_reduced(Decomposition& d);

/// Least k with factors[k] ⊆ P, for a prime P containing ∩ factors.
/// Throws NotPrime, or HypothesisFailed if P does not contain the intersection.
std::size_t find_contained_factor(const Ideal& P, const std::vector<Ideal>& factors);

/// Every reduced decomposition of I into maximal ideals, found by trying all
/// subfamilies of the spectrum. Throws OracleBoundExceeded or ImproperIdeal.
std::vector<Decomposition> unique_decomposition_search(const Ideal& I, OracleBound bound = {});

/// Prime-power factors of m in increasing prime order, e.g. 360 -> 8, 9, 5.
/// Throws OutOfRange unless 2 <= m <= 10^12.
std::vector<std::uint64_t> integer_demo(std::uint64_t m);

/// Checks that the factors multiply to m and, for every n in [1, limit],
/// that m | n iff each factor divides n.
bool verify_integer_decomposition(std::uint64_t m, const std::vector<std::uint64_t>& factors,
                                  std::uint64_t limit);

constexpr std::uint64_t kIntegerDemoMax = 1'000'000'000'000ULL;

std::string to_string(const Decomposition& d);

}  // namespace boolring
