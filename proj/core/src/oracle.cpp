#include "boolring/oracle.hpp"

#include <bit>
#include <string>

#include "boolring/error.hpp"

namespace boolring::oracle {

namespace {

ElementSet full_set(std::size_t n) {
  const std::size_t m = element_count(n);
  return m == 64 ? ~ElementSet{0} : (ElementSet{1} << m) - 1;
}

template <typename F>
void for_each_member(ElementSet s, F&& f) {
  while (s != 0) {
    f(static_cast<Mask>(std::countr_zero(s)));
    s &= s - 1;
  }
}

bool some_power_in(std::size_t n, Mask b, ElementSet I) {
  // b^k for k = 1 .. |R| covers every value the power sequence can take.
  Mask power = b;
  for (std::size_t k = 1; k <= element_count(n); ++k) {
    if (has(I, power)) return true;
    power &= b;
  }
  return false;
}

}  // namespace

void require_bound(std::size_t n, OracleBound bound) {
  if (bound.value > OracleBound::kHardCap) {
    raise(ErrorKind::OracleBoundExceeded, "oracle bound " + std::to_string(bound.value) +
                                              " exceeds the hard cap " +
                                              std::to_string(OracleBound::kHardCap));
  }
  if (n > bound.value) {
    raise(ErrorKind::OracleBoundExceeded, "ground size " + std::to_string(n) +
                                              " exceeds the oracle bound " +
                                              std::to_string(bound.value));
  }
}

ElementSet span(std::size_t n, std::span<const Mask> gens) {
  require_bound(n, OracleBound{OracleBound::kHardCap});
  ElementSet acc = with(0, 0);
  for (Mask g : gens) {
    ElementSet next = 0;
    for_each_member(acc, [&](Mask s) {
      for (Mask b = 0; b < element_count(n); ++b) next = with(next, s ^ (b & g));
    });
    acc = next;
  }
  return acc;
}

ElementSet element_set(const Ideal& I) {
  std::vector<Mask> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(static_cast<Mask>(g.to_mask()));
  return span(I.ground().size(), gens);
}

bool is_ideal(std::size_t n, ElementSet s) {
  if (!has(s, 0)) return false;
  bool ok = true;
  for_each_member(s, [&](Mask a) {
    if (!ok) return;
    for_each_member(s, [&](Mask b) {
      if (!has(s, a ^ b)) ok = false;
    });
    for (Mask r = 0; r < element_count(n) && ok; ++r) {
      if (!has(s, a & r)) ok = false;
    }
  });
  return ok;
}

bool is_proper(std::size_t n, ElementSet s) {
  const Mask one = static_cast<Mask>(element_count(n) - 1);
  return !has(s, one);
}

std::vector<ElementSet> closed_subsets(std::size_t n) {
  require_bound(n, OracleBound{4});
  std::vector<ElementSet> out;
  const ElementSet last = full_set(n);
  for (ElementSet s = 0;; ++s) {
    if (is_ideal(n, s)) out.push_back(s);
    if (s == last) break;
  }
  return out;
}

ElementSet radical(std::size_t n, ElementSet I) {
  ElementSet out = 0;
  for (Mask x = 0; x < element_count(n); ++x) {
    if (some_power_in(n, x, I)) out = with(out, x);
  }
  return out;
}

bool is_prime(std::size_t n, ElementSet I) {
  if (!is_proper(n, I)) return false;
  for (Mask a = 0; a < element_count(n); ++a) {
    if (has(I, a)) continue;
    for (Mask b = 0; b < element_count(n); ++b) {
      if (has(I, a & b) && !has(I, b)) return false;
    }
  }
  return true;
}

bool is_primary(std::size_t n, ElementSet I) {
  if (!is_proper(n, I)) return false;
  for (Mask a = 0; a < element_count(n); ++a) {
    if (has(I, a)) continue;
    for (Mask b = 0; b < element_count(n); ++b) {
      if (has(I, a & b) && !some_power_in(n, b, I)) return false;
    }
  }
  return true;
}

bool is_maximal(std::size_t n, ElementSet I, std::span<const ElementSet> all_ideals) {
  if (!is_proper(n, I)) return false;
  for (ElementSet J : all_ideals) {
    const bool strictly_above = (J & I) == I && J != I;
    if (strictly_above && is_proper(n, J)) return false;
  }
  return true;
}

}  // namespace boolring::oracle
