#pragma once

// Brute-force, definition-level reasoning about ideals of P(X) for tiny X.
//
// Nothing here uses principal generators or the (A) = P(A) shortcut: ideals
// are explicit sets of elements built by enumerating linear combinations,
// and the prime/primary/maximal/radical predicates quantify over every
// element (pair) of the ring. The fast paths in ideal.hpp are checked
// against these.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "boolring/ideal.hpp"

namespace boolring::oracle {

/// An element of P(X), |X| = n, encoded as a mask below 2^n.
using Mask = std::uint32_t;
/// A set of elements: bit e is set iff element e is in the set.
using ElementSet = std::uint64_t;

/// Throws OracleBoundExceeded if n exceeds the bound or the bound exceeds
/// the hard cap.
void require_bound(std::size_t n, OracleBound bound = {});

constexpr std::size_t element_count(std::size_t n) { return std::size_t{1} << n; }
constexpr bool has(ElementSet s, Mask e) { return ((s >> e) & 1U) != 0; }
constexpr ElementSet with(ElementSet s, Mask e) { return s | (ElementSet{1} << e); }

/// { Σ B_i · g_i : B_i ∈ P(X) }.
ElementSet span(std::size_t n, std::span<const Mask> gens);
/// The span of an Ideal's original generators.
ElementSet element_set(const Ideal& I);

/// Contains 0, closed under +, absorbing under · by every ring element.
bool is_ideal(std::size_t n, ElementSet s);
bool is_proper(std::size_t n, ElementSet s);

/// Every subset of P(X) that is an ideal, in increasing ElementSet order.
/// Exhausts all 2^(2^n) candidates, so n <= 4.
std::vector<ElementSet> closed_subsets(std::size_t n);

/// { x : x^k ∈ I for some k > 0 }, powers computed by repeated product.
ElementSet radical(std::size_t n, ElementSet I);
/// Proper, and ab ∈ I, a ∉ I  ⟹  b ∈ I.
bool is_prime(std::size_t n, ElementSet I);
/// Proper, and ab ∈ I, a ∉ I  ⟹  b^k ∈ I for some k > 0.
bool is_primary(std::size_t n, ElementSet I);
/// Proper, and no ideal in `all_ideals` lies strictly between I and R.
bool is_maximal(std::size_t n, ElementSet I, std::span<const ElementSet> all_ideals);

/// Pointwise intersection of element sets.
constexpr ElementSet intersect(ElementSet a, ElementSet b) { return a & b; }

}  // namespace boolring::oracle
