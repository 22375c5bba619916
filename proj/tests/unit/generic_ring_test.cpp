#include <random>

#include "boolring/generic_ring.hpp"
#include "boolring/ideal.hpp"
#include "helpers.hpp"

using namespace boolring;
using testing_support::kind_of;

namespace {

BoolVec random_vec(std::mt19937_64& rng, std::size_t n) {
  BoolVec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = (rng() & 1U) != 0;
  return v;
}

}  // namespace

TEST(GenericRing, ParseAndPrint) {
  GenericBoolRing r(3);
  auto v = r.element("101");
  EXPECT_TRUE(v.test(0));
  EXPECT_FALSE(v.test(1));
  EXPECT_EQ(to_string(v), "101");
  EXPECT_EQ(kind_of([&] { r.element("10"); }), ErrorKind::LengthMismatch);
  EXPECT_EQ(kind_of([&] { r.element("1x1"); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([&] { r.add(r.one(), GenericBoolRing(2).one()); }), ErrorKind::LengthMismatch);
}

TEST(GenericRing, FindAtoms) {
  auto to_strings = [](const std::vector<BoolVec>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(to_string(v));
    return out;
  };
  EXPECT_EQ(to_strings(find_atoms(GenericBoolRing(3))), (std::vector<std::string>{"100", "010", "001"}));
  EXPECT_EQ(to_strings(find_atoms(GenericBoolRing(1))), (std::vector<std::string>{"1"}));
  EXPECT_EQ(to_strings(find_atoms(GenericBoolRing(2))), (std::vector<std::string>{"10", "01"}));
  EXPECT_EQ(kind_of([] { find_atoms(GenericBoolRing(0)); }), ErrorKind::ZeroRing);
}

TEST(GenericRing, AtomsAreMinimalNonzero) {
  // Brute force: scan every element for minimal nonzero ones.
  for (std::size_t n = 1; n <= 4; ++n) {
    GenericBoolRing r(n);
    std::vector<BoolVec> minimal;
    for (std::uint64_t x = 1; x < (1U << n); ++x) {
      auto a = r.from_mask(x);
      bool is_min = true;
      for (std::uint64_t y = 1; y < (1U << n); ++y)
        if (y != x && r.leq(r.from_mask(y), a)) is_min = false;
      if (is_min) minimal.push_back(a);
    }
    auto found = find_atoms(r);
    std::sort(found.begin(), found.end());
    std::sort(minimal.begin(), minimal.end());
    EXPECT_EQ(found, minimal);
  }
}

TEST(GenericRing, RefineAtomsOfSubring) {
  GenericBoolRing r(4);
  std::vector<BoolVec> gens{r.element("1100")};
  auto blocks = refine_atoms(r, gens);
  ASSERT_EQ(blocks.size(), 2U);
  EXPECT_EQ(to_string(blocks[0]), "1100");
  EXPECT_EQ(to_string(blocks[1]), "0011");
}

TEST(Stone, Examples) {
  GenericBoolRing r2(2);
  auto s2 = stone_iso(r2);
  EXPECT_TRUE(s2(r2.element("11")).is_one());

  GenericBoolRing r3(3);
  auto s3 = stone_iso(r3);
  EXPECT_EQ(s3(r3.element("101")), elem(s3.atom_ground(), {"e1", "e3"}));
  EXPECT_EQ(s3.inverse(elem(s3.atom_ground(), {"e2"})), r3.element("010"));

  EXPECT_EQ(kind_of([] { stone_iso(GenericBoolRing(17)); }), ErrorKind::OracleBoundExceeded);
  EXPECT_EQ(kind_of([] { stone_iso(GenericBoolRing(0)); }), ErrorKind::ZeroRing);
}

TEST(Stone, HomomorphismAllPairsDimensionTwo) {
  GenericBoolRing r(2);
  auto s = stone_iso(r);
  int pairs = 0;
  for (std::uint64_t x = 0; x < 4; ++x)
    for (std::uint64_t y = 0; y < 4; ++y) {
      auto a = r.from_mask(x), b = r.from_mask(y);
      EXPECT_EQ(s(r.add(a, b)), s(a) + s(b));
      EXPECT_EQ(s(r.mul(a, b)), s(a) * s(b));
      ++pairs;
    }
  EXPECT_EQ(pairs, 16);
  auto check = verify_stone_iso(s);
  EXPECT_TRUE(check.ok());
  EXPECT_EQ(check.pairs_checked, 16U);
}

TEST(Stone, VerifyUpToBound) {
  for (std::size_t n = 1; n <= 16; ++n) {
    auto check = verify_stone_iso(stone_iso(GenericBoolRing(n)), 4, 200, n);
    EXPECT_TRUE(check.ok()) << n;
  }
}

TEST(MaximalFromAtom, Examples) {
  GenericBoolRing r3(3);
  EXPECT_EQ(to_string(maximal_principal_from_atom(r3, r3.element("100"))), "011");
  GenericBoolRing r1(1);
  EXPECT_EQ(to_string(maximal_principal_from_atom(r1, r1.element("1"))), "0");
  EXPECT_EQ(kind_of([&] { maximal_principal_from_atom(r3, r3.element("110")); }), ErrorKind::NotAnAtom);
  EXPECT_EQ(kind_of([&] { maximal_principal_from_atom(r3, r3.zero()); }), ErrorKind::NotAnAtom);
}

TEST(MaximalFromAtom, ImageIsPointIdeal) {
  for (std::size_t n = 1; n <= 3; ++n) {
    GenericBoolRing r(n);
    auto s = stone_iso(r);
    for (std::size_t k = 0; k < s.atom_list().size(); ++k) {
      auto image = s(maximal_principal_from_atom(r, s.atom_list()[k]));
      auto g = s.atom_ground();
      EXPECT_EQ(image, complement(RingElem::singleton(g, k)));
      EXPECT_TRUE(is_maximal(principal_ideal(image)));
    }
  }
}

TEST(Properties, BooleanLawsRandom) {
  std::mt19937_64 rng(3);
  for (std::size_t n : {1U, 7U, 33U, 64U}) {
    GenericBoolRing r(n);
    for (int t = 0; t < 500; ++t) {
      auto x = random_vec(rng, n), y = random_vec(rng, n);
      ASSERT_EQ(r.add(x, x), r.zero());
      ASSERT_EQ(r.mul(x, y), r.mul(y, x));
      ASSERT_EQ(r.mul(x, x), x);
      // (x, y) = (x + y + xy): both generators are multiples of it.
      auto p = r.add(r.add(x, y), r.mul(x, y));
      ASSERT_EQ(r.mul(x, p), x);
      ASSERT_EQ(r.mul(y, p), y);
    }
  }
}
