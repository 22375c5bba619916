#include "boolring/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "boolring/error.hpp"
#include "boolring/oracle.hpp"

namespace boolring {

Ideal::Ideal() = default;

Ideal::Ideal(std::vector<RingElem> generators, RingElem principal)
    : generators_(std::move(generators)), principal_(std::move(principal)) {}

RingElem reduce_pair(const RingElem& a, const RingElem& b) { return add(add(a, b), mul(a, b)); }

Ideal ideal_from_generators(const GroundSet& g, std::vector<RingElem> gens) {
  RingElem acc = RingElem::zero(g);
  for (const auto& gen : gens) {
    require_same_ground(g, gen.ground());
    acc = reduce_pair(acc, gen);
  }
  return Ideal(std::move(gens), std::move(acc));
}

Ideal principal_ideal(const RingElem& a) { return ideal_from_generators(a.ground(), {a}); }
Ideal zero_ideal(const GroundSet& g) { return ideal_from_generators(g, {}); }
Ideal unit_ideal(const GroundSet& g) { return principal_ideal(RingElem::one(g)); }

std::vector<RingElem> generator_coefficients(const Ideal& I) {
  std::vector<RingElem> coeffs;
  coeffs.reserve(I.generators().size());
  RingElem covered = RingElem::zero(I.ground());
  for (const auto& g : I.generators()) {
    coeffs.push_back(complement(covered));
    covered = reduce_pair(covered, g);
  }
  return coeffs;
}

bool member(const RingElem& a, const Ideal& I) { return leq(a, I.principal()); }

bool contains(const Ideal& J, const Ideal& I) { return leq(I.principal(), J.principal()); }

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ground(I.ground(), J.ground());
  return ideal_from_generators(I.ground(), {I.principal(), J.principal()});
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  return principal_ideal(mul(I.principal(), J.principal()));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  // IJ is generated by products of generators; for principal ideals that is
  // the single product ab, which idempotence makes equal to I ∩ J.
  Ideal product = principal_ideal(mul(I.principal(), J.principal()));
  if (!(product == ideal_intersect(I, J))) {
    throw std::logic_error("ideal product differs from intersection");
  }
  return product;
}

Ideal ideal_intersect_all(const GroundSet& g, const std::vector<Ideal>& family) {
  RingElem acc = RingElem::one(g);
  for (const auto& I : family) acc = mul(acc, I.principal());
  return principal_ideal(acc);
}

Ideal radical(const Ideal& I) {
  const std::size_t n = I.ground().size();
  if (n <= OracleBound::kDefault) {
    const oracle::ElementSet s = oracle::element_set(I);
    if (oracle::radical(n, s) != s) throw std::logic_error("ideal is not its own radical");
  }
  return I;
}

bool is_proper(const Ideal& I) { return !I.is_unit(); }

bool is_maximal(const Ideal& I) {
  const std::size_t n = I.ground().size();
  if (n == 0) raise(ErrorKind::ZeroRing, "maximality is undefined in the zero ring");
  return n - I.principal().count() == 1;
}

bool is_prime(const Ideal& I) { return is_maximal(I); }

bool is_primary(const Ideal& I) { return is_maximal(I); }

std::vector<Ideal> enumerate_ideals(const GroundSet& g, OracleBound bound) {
  oracle::require_bound(g.size(), bound);
  std::vector<Ideal> out;
  const std::uint64_t count = std::uint64_t{1} << g.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    out.push_back(principal_ideal(RingElem::from_mask(g, mask)));
  }
  return out;
}

std::string to_string(const Ideal& I) {
  if (I.is_zero()) return "(0)";
  if (I.is_unit()) return "(1)";
  return "(" + to_string(I.principal()) + ")";
}

}  // namespace boolring
