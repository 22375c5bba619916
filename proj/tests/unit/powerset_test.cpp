#include <random>

#include "helpers.hpp"

using namespace boolring;
using testing_support::kind_of;
using testing_support::letters;

namespace {

GroundSet g3() { return new_ground({"a", "b", "c"}); }

Bits random_bits(std::mt19937_64& rng, std::size_t n) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (rng() & 1U) != 0;
  return b;
}

}  // namespace

TEST(GroundSet, Construction) {
  EXPECT_EQ(g3().size(), 3U);
  EXPECT_EQ(new_ground({}).size(), 0U);
  EXPECT_EQ(kind_of([] { new_ground({"a", "a"}); }), ErrorKind::DuplicateLabel);
  EXPECT_EQ(g3().require_index("c"), 2U);
  EXPECT_EQ(kind_of([] { g3().require_index("z"); }), ErrorKind::UnknownLabel);
}

TEST(GroundSet, IdentityIsLabelSequence) {
  EXPECT_EQ(g3(), g3());
  EXPECT_FALSE(g3() == new_ground({"a", "c", "b"}));
}

TEST(RingElem, ElemFromLabels) {
  auto g = g3();
  auto u = elem(g, {"a", "c"});
  EXPECT_TRUE(u.test(0));
  EXPECT_FALSE(u.test(1));
  EXPECT_TRUE(u.test(2));
  EXPECT_EQ(u.to_mask(), 0b101U);
  EXPECT_TRUE(elem(g, {}).is_zero());
  EXPECT_EQ(kind_of([&] { elem(g, {"z"}); }), ErrorKind::UnknownLabel);
  EXPECT_EQ(to_string(u), "{a,c}");
  EXPECT_EQ(to_string(elem(g, {})), "{}");
}

TEST(RingElem, Operations) {
  auto g = g3();
  EXPECT_EQ(elem(g, {"a", "b"}) + elem(g, {"b", "c"}), elem(g, {"a", "c"}));
  EXPECT_EQ(elem(g, {"a", "b"}) * elem(g, {"b", "c"}), elem(g, {"b"}));
  EXPECT_EQ(complement(elem(g, {"a"})), elem(g, {"b", "c"}));
  EXPECT_EQ(complement(RingElem::zero(g)), RingElem::one(g));
  EXPECT_EQ(complement(RingElem::one(g)), RingElem::zero(g));
  EXPECT_TRUE(leq(elem(g, {"a"}), elem(g, {"a", "b"})));
  EXPECT_FALSE(leq(elem(g, {"a", "b"}), elem(g, {"a"})));
}

TEST(RingElem, ForeignGroundRejected) {
  auto a = elem(g3(), {"a"});
  auto b = elem(new_ground({"a", "b", "c", "d"}), {"a"});
  EXPECT_EQ(kind_of([&] { add(a, b); }), ErrorKind::GroundMismatch);
  EXPECT_EQ(kind_of([&] { mul(a, b); }), ErrorKind::GroundMismatch);
  EXPECT_EQ(kind_of([&] { leq(a, b); }), ErrorKind::GroundMismatch);
  EXPECT_FALSE(a == b);
}

TEST(RingElem, MaskLimit) {
  std::vector<std::string> labels;
  for (int i = 0; i < 65; ++i) labels.push_back("x" + std::to_string(i));
  auto g = new_ground(labels);
  EXPECT_EQ(kind_of([&] { RingElem::from_mask(g, 1); }), ErrorKind::LimitExceeded);
  EXPECT_EQ(RingElem::one(g).count(), 65U);
}

TEST(Atoms, Singletons) {
  auto g = g3();
  auto at = atoms(g);
  ASSERT_EQ(at.size(), 3U);
  EXPECT_EQ(at[0], elem(g, {"a"}));
  EXPECT_EQ(at[2], elem(g, {"c"}));
  EXPECT_TRUE(atoms(new_ground({})).empty());
  auto g1 = new_ground({"x"});
  ASSERT_EQ(atoms(g1).size(), 1U);
  EXPECT_TRUE(atoms(g1)[0].is_one());
}

TEST(Atoms, MinimalNonzero) {
  auto g = new_ground({"a", "b", "c", "d"});
  for (const auto& at : atoms(g)) {
    for (std::uint64_t m = 1; m < 16; ++m) {
      auto b = RingElem::from_mask(g, m);
      if (leq(b, at)) EXPECT_EQ(b, at);
    }
  }
}

TEST(CharEval, Values) {
  auto g = new_ground({"x", "y"});
  EXPECT_TRUE(char_eval("x", elem(g, {"x"})));
  EXPECT_FALSE(char_eval("x", RingElem::zero(g)));
  EXPECT_FALSE(char_eval("a", elem(g3(), {"b", "c"})));
  EXPECT_EQ(kind_of([&] { char_eval("q", RingElem::zero(g)); }), ErrorKind::UnknownLabel);
}

TEST(ZeroRing, OperationsAreTotal) {
  auto g = new_ground({});
  auto z = RingElem::zero(g);
  EXPECT_EQ(z, RingElem::one(g));
  EXPECT_EQ(z + z, z);
  EXPECT_EQ(z * z, z);
  EXPECT_EQ(complement(z), z);
}

TEST(Properties, RingAxiomsExhaustive) {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto g = letters(n);
    const std::uint64_t size = std::uint64_t{1} << n;
    auto zero = RingElem::zero(g), one = RingElem::one(g);
    for (std::uint64_t x = 0; x < size; ++x) {
      auto a = RingElem::from_mask(g, x);
      EXPECT_EQ(a + a, zero);
      EXPECT_EQ(a * a, a);
      EXPECT_EQ(a + zero, a);
      EXPECT_EQ(a * one, a);
      EXPECT_EQ(a * complement(a), zero);
      EXPECT_EQ(a + complement(a), one);
      EXPECT_TRUE(leq(a, a));
      for (std::uint64_t y = 0; y < size; ++y) {
        auto b = RingElem::from_mask(g, y);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(leq(a, b), (x & ~y) == 0);
        if (leq(a, b) && leq(b, a)) EXPECT_EQ(a, b);
        if ((a * b).is_one()) EXPECT_TRUE(a.is_one() && b.is_one());
        for (std::uint64_t z = 0; z < size; ++z) {
          auto c = RingElem::from_mask(g, z);
          EXPECT_EQ((a + b) + c, a + (b + c));
          EXPECT_EQ((a * b) * c, a * (b * c));
          EXPECT_EQ(a * (b + c), a * b + a * c);
          if (leq(a, b) && leq(b, c)) EXPECT_TRUE(leq(a, c));
        }
      }
    }
  }
}

TEST(Properties, RingAxiomsRandom) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {5U, 17U, 64U, 130U}) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    auto g = new_ground(labels);
    for (int t = 0; t < 300; ++t) {
      RingElem a(g, random_bits(rng, n)), b(g, random_bits(rng, n)), c(g, random_bits(rng, n));
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a * b, b * a);
      ASSERT_TRUE((a + a).is_zero());
      auto p = a;
      for (int k = 0; k < 5; ++k) p = p * a;
      ASSERT_EQ(p, a);
    }
  }
}

TEST(Properties, CharEvalIsHomomorphism) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto g = letters(n);
    for (std::uint64_t x = 0; x < (1U << n); ++x)
      for (std::uint64_t y = 0; y < (1U << n); ++y) {
        auto a = RingElem::from_mask(g, x), b = RingElem::from_mask(g, y);
        for (const auto& l : g.labels()) {
          EXPECT_EQ(char_eval(l, a + b), char_eval(l, a) != char_eval(l, b));
          EXPECT_EQ(char_eval(l, a * b), char_eval(l, a) && char_eval(l, b));
        }
      }
  }
}
