#include "boolring/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

#include "boolring/error.hpp"
#include "boolring/oracle.hpp"

namespace boolring {

namespace {

Ideal intersect_factors(const GroundSet& g, const std::vector<MaxIdealDescriptor>& factors,
                        std::size_t skip = static_cast<std::size_t>(-1)) {
  RingElem acc = RingElem::one(g);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i != skip) acc = mul(acc, factors[i].ideal.principal());
  }
  return principal_ideal(acc);
}

}  // namespace

MaxIdealDescriptor maximal_ideal_at(const GroundSet& g, std::string_view x) {
  const std::size_t i = g.require_index(x);
  return {g.label(i), principal_ideal(complement(RingElem::singleton(g, i)))};
}

std::vector<MaxIdealDescriptor> maximal_ideals(const GroundSet& g) {
  if (g.empty()) raise(ErrorKind::ZeroRing, "the zero ring has no maximal ideals");
  std::vector<MaxIdealDescriptor> out;
  out.reserve(g.size());
  for (const auto& x : g.labels()) out.push_back(maximal_ideal_at(g, x));
  return out;
}

Decomposition Decomposition::assemble(Ideal target, std::vector<MaxIdealDescriptor> factors) {
  for (const auto& f : factors) require_same_ground(target.ground(), f.ideal.ground());
  Decomposition d;
  d.verified_ = intersect_factors(target.ground(), factors) == target;
  d.target_ = std::move(target);
  d.factors_ = std::move(factors);
  return d;
}

Decomposition decompose(const Ideal& I) {
  const GroundSet& g = I.ground();
  if (g.empty()) raise(ErrorKind::ZeroRing, "cannot decompose in the zero ring");
  if (!is_proper(I)) raise(ErrorKind::ImproperIdeal, "the unit ideal has no primary decomposition");

  std::vector<MaxIdealDescriptor> factors;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!I.principal().test(i)) factors.push_back(maximal_ideal_at(g, g.label(i)));
  }
  Decomposition d = Decomposition::assemble(I, std::move(factors));
  if (!d.verified() || !verify_reduced(d)) {
    throw std::logic_error("canonical decomposition failed certification for " + to_string(I));
  }
  return d;
}

bool verify_reduced(Decomposition& d) {
  if (!d.verified_) {
    raise(ErrorKind::UnverifiedDecomposition,
          "factors do not intersect to the target " + to_string(d.target_));
  }
  const auto& fs = d.factors_;
  bool reduced = true;
  for (std::size_t i = 0; i < fs.size() && reduced; ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (fs[i].ideal == fs[j].ideal) {
        reduced = false;
        break;
      }
    }
  }
  for (std::size_t k = 0; k < fs.size() && reduced; ++k) {
    if (contains(fs[k].ideal, intersect_factors(d.target_.ground(), fs, k))) reduced = false;
  }
  d.reduced_ = reduced;
  return reduced;
}

std::size_t find_contained_factor(const Ideal& P, const std::vector<Ideal>& factors) {
  if (!is_prime(P)) raise(ErrorKind::NotPrime, to_string(P) + " is not a prime ideal");
  const Ideal meet = ideal_intersect_all(P.ground(), factors);
  if (!contains(P, meet)) {
    raise(ErrorKind::HypothesisFailed,
          to_string(P) + " does not contain the intersection " + to_string(meet));
  }
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (contains(P, factors[k])) return k;
  }
  throw std::logic_error("prime ideal contains an intersection but none of its factors");
}

std::vector<Decomposition> unique_decomposition_search(const Ideal& I, OracleBound bound) {
  const GroundSet& g = I.ground();
  oracle::require_bound(g.size(), bound);
  if (g.empty()) raise(ErrorKind::ZeroRing, "cannot decompose in the zero ring");
  if (!is_proper(I)) raise(ErrorKind::ImproperIdeal, "the unit ideal has no primary decomposition");

  const auto spectrum = maximal_ideals(g);
  std::vector<Decomposition> found;
  for (std::uint64_t family = 1; family < (std::uint64_t{1} << spectrum.size()); ++family) {
    std::vector<MaxIdealDescriptor> factors;
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
      if ((family >> i) & 1U) factors.push_back(spectrum[i]);
    }
    Decomposition d = Decomposition::assemble(I, std::move(factors));
    if (d.verified() && verify_reduced(d)) found.push_back(std::move(d));
  }
  if (found.size() != 1 || !(found.front() == decompose(I))) {
    throw std::logic_error("reduced decomposition of " + to_string(I) + " is not unique");
  }
  return found;
}

std::vector<std::uint64_t> integer_demo(std::uint64_t m) {
  if (m < 2 || m > kIntegerDemoMax) {
    raise(ErrorKind::OutOfRange, "integer demo needs 2 <= m <= 10^12, got " + std::to_string(m));
  }
  std::vector<std::uint64_t> factors;
  std::uint64_t rest = m;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    std::uint64_t power = 1;
    while (rest % p == 0) {
      rest /= p;
      power *= p;
    }
    factors.push_back(power);
  }
  if (rest > 1) factors.push_back(rest);

  if (m <= 1'000'000 && !verify_integer_decomposition(m, factors, 2 * m)) {
    throw std::logic_error("integer decomposition check failed for " + std::to_string(m));
  }
  return factors;
}

bool verify_integer_decomposition(std::uint64_t m, const std::vector<std::uint64_t>& factors,
                                  std::uint64_t limit) {
  std::uint64_t product = 1;
  for (auto f : factors) product *= f;
  if (product != m) return false;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const bool by_all = std::all_of(factors.begin(), factors.end(),
                                    [n](std::uint64_t f) { return n % f == 0; });
    if ((n % m == 0) != by_all) return false;
  }
  return true;
}

std::string to_string(const Decomposition& d) {
  std::string out = to_string(d.target()) + " =";
  for (std::size_t i = 0; i < d.factors().size(); ++i) {
    out += i == 0 ? " " : " ∩ ";
    out += "m_" + d.factors()[i].point;
  }
  if (d.factors().empty()) out += " R";
  return out;
}

}  // namespace boolring
