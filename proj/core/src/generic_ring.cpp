#include "boolring/generic_ring.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "boolring/error.hpp"

namespace boolring {

BoolVec GenericBoolRing::element(std::string_view coords) const {
  if (coords.size() != dimension_) {
    raise(ErrorKind::LengthMismatch, "expected " + std::to_string(dimension_) + " coordinates, got " +
                                         std::to_string(coords.size()));
  }
  BoolVec v(dimension_);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != '0' && coords[i] != '1') raise(ErrorKind::OutOfRange, "coordinates must be 0 or 1");
    v[i] = coords[i] == '1';
  }
  return v;
}

BoolVec GenericBoolRing::from_mask(std::uint64_t mask) const {
  if (dimension_ > 64) raise(ErrorKind::LimitExceeded, "mask conversion needs dimension <= 64");
  BoolVec v(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) v[i] = ((mask >> i) & 1U) != 0;
  return v;
}

std::vector<BoolVec> GenericBoolRing::basis() const {
  std::vector<BoolVec> out;
  for (std::size_t i = 0; i < dimension_; ++i) {
    BoolVec v(dimension_);
    v.set(i);
    out.push_back(std::move(v));
  }
  return out;
}

void GenericBoolRing::check(const BoolVec& a) const {
  if (a.size() != dimension_) {
    raise(ErrorKind::LengthMismatch, "element of length " + std::to_string(a.size()) +
                                         " in a ring of dimension " + std::to_string(dimension_));
  }
}

BoolVec GenericBoolRing::add(const BoolVec& a, const BoolVec& b) const {
  check(a);
  check(b);
  return a ^ b;
}

BoolVec GenericBoolRing::mul(const BoolVec& a, const BoolVec& b) const {
  check(a);
  check(b);
  return a & b;
}

std::string to_string(const BoolVec& v) {
  std::string out(v.size(), '0');
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.test(i)) out[i] = '1';
  }
  return out;
}

std::vector<BoolVec> refine_atoms(const GenericBoolRing& r, std::span<const BoolVec> generators) {
  std::vector<BoolVec> blocks{r.one()};
  for (const auto& g : generators) {
    const BoolVec g_bar = r.complement(g);
    std::vector<BoolVec> next;
    next.reserve(blocks.size() * 2);
    for (const auto& b : blocks) {
      for (BoolVec part : {r.mul(b, g), r.mul(b, g_bar)}) {
        if (part.any()) next.push_back(std::move(part));
      }
    }
    blocks = std::move(next);
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const BoolVec& a, const BoolVec& b) { return a.find_first() < b.find_first(); });
  return blocks;
}

std::vector<BoolVec> find_atoms(const GenericBoolRing& r) {
  if (r.dimension() == 0) raise(ErrorKind::ZeroRing, "the zero ring has no atoms");
  const auto basis = r.basis();
  return refine_atoms(r, basis);
}

StoneMap stone_iso(const GenericBoolRing& r, std::size_t bound) {
  if (r.dimension() > bound) {
    raise(ErrorKind::OracleBoundExceeded, "dimension " + std::to_string(r.dimension()) +
                                              " exceeds the bound " + std::to_string(bound));
  }
  auto atoms = find_atoms(r);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < atoms.size(); ++i) labels.push_back("e" + std::to_string(i + 1));
  return StoneMap(r, std::move(atoms), GroundSet(std::move(labels)));
}

RingElem StoneMap::operator()(const BoolVec& b) const {
  Bits bits(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) bits[i] = ring_.leq(atoms_[i], b);
  return RingElem(ground_, std::move(bits));
}

BoolVec StoneMap::inverse(const RingElem& s) const {
  require_same_ground(ground_, s.ground());
  BoolVec out = ring_.zero();
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (s.test(i)) out = ring_.add(out, atoms_[i]);
  }
  return out;
}

StoneCheck verify_stone_iso(const StoneMap& map, std::size_t exhaustive_dim, std::size_t samples,
                            std::uint64_t seed) {
  const GenericBoolRing& r = map.ring();
  StoneCheck result;
  auto check_pair = [&](const BoolVec& a, const BoolVec& b) {
    const RingElem fa = map(a);
    const RingElem fb = map(b);
    if (!(map(r.add(a, b)) == add(fa, fb)) || !(map(r.mul(a, b)) == mul(fa, fb))) {
      result.homomorphism = false;
    }
    ++result.pairs_checked;
  };

  if (!(map(r.one()) == RingElem::one(map.atom_ground()))) result.homomorphism = false;

  if (r.dimension() <= exhaustive_dim) {
    const std::uint64_t count = std::uint64_t{1} << r.dimension();
    std::set<std::uint64_t> images;
    for (std::uint64_t x = 0; x < count; ++x) {
      images.insert(map(r.from_mask(x)).to_mask());
      for (std::uint64_t y = 0; y < count; ++y) check_pair(r.from_mask(x), r.from_mask(y));
    }
    const std::uint64_t target_count = std::uint64_t{1} << map.atom_ground().size();
    result.bijective = images.size() == count && target_count == count;
    return result;
  }

  std::mt19937_64 rng(seed);
  auto random_vec = [&] {
    BoolVec v(r.dimension());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (rng() & 1U) != 0;
    return v;
  };
  auto random_set = [&] {
    Bits v(map.atom_ground().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (rng() & 1U) != 0;
    return RingElem(map.atom_ground(), std::move(v));
  };
  for (std::size_t k = 0; k < samples; ++k) {
    const BoolVec a = random_vec();
    check_pair(a, random_vec());
    if (!(map.inverse(map(a)) == a)) result.bijective = false;
    const RingElem s = random_set();
    if (!(map(map.inverse(s)) == s)) result.bijective = false;
  }
  return result;
}

BoolVec maximal_principal_from_atom(const GenericBoolRing& r, const BoolVec& atom) {
  const auto atoms = find_atoms(r);
  if (std::find(atoms.begin(), atoms.end(), atom) == atoms.end()) {
    raise(ErrorKind::NotAnAtom, to_string(atom) + " is not an atom");
  }
  return r.complement(atom);
}

}  // namespace boolring
