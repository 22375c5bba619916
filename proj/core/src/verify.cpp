#include "boolring/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "boolring/fincof.hpp"
#include "boolring/generic_ring.hpp"
#include "boolring/oracle.hpp"
#include "boolring/quotient.hpp"
#include "boolring/spectrum.hpp"

namespace boolring {

namespace {

GroundSet letters(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return GroundSet(std::move(labels));
}

std::vector<RingElem> all_elements(const GroundSet& g) {
  std::vector<RingElem> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.size()); ++m) out.push_back(RingElem::from_mask(g, m));
  return out;
}

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool cond, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (!cond && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

// Runs body, turning an escaped exception into a failed check.
CheckResult run(std::string name, const std::function<void(Check&)>& body) {
  Check c(std::move(name));
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, [&] { return std::string("exception: ") + e.what(); });
  }
  return c.take();
}

std::size_t exhaustive_max(const VerifyOptions& o) { return std::min<std::size_t>(o.oracle.value, 4); }

CheckResult ring_axioms(const VerifyOptions& o) {
  return run("ring axioms of P(X)", [&](Check& c) {
    for (std::size_t n = 0; n <= exhaustive_max(o); ++n) {
      const GroundSet g = letters(n);
      const auto els = all_elements(g);
      const RingElem zero = RingElem::zero(g), one = RingElem::one(g);
      for (const auto& a : els) {
        auto at = [&] { return "n=" + std::to_string(n) + " a=" + to_string(a); };
        c.expect(add(a, a) == zero, at);
        c.expect(mul(a, a) == a, at);
        c.expect(add(a, zero) == a && mul(a, one) == a, at);
        c.expect(mul(a, complement(a)) == zero && add(a, complement(a)) == one, at);
        for (const auto& b : els) {
          c.expect(add(a, b) == add(b, a) && mul(a, b) == mul(b, a), at);
          c.expect(leq(a, b) == a.bits().is_subset_of(b.bits()), at);
          c.expect(!(mul(a, b) == one) || (a == one && b == one), at);
          for (std::size_t i = 0; i < n; ++i) {
            const auto& x = g.label(i);
            c.expect(char_eval(x, add(a, b)) == (char_eval(x, a) != char_eval(x, b)), at);
            c.expect(char_eval(x, mul(a, b)) == (char_eval(x, a) && char_eval(x, b)), at);
          }
          for (const auto& d : els) {
            c.expect(add(add(a, b), d) == add(a, add(b, d)), at);
            c.expect(mul(mul(a, b), d) == mul(a, mul(b, d)), at);
            c.expect(mul(a, add(b, d)) == add(mul(a, b), mul(a, d)), at);
            c.expect(!(leq(a, b) && leq(b, d)) || leq(a, d), at);
          }
          c.expect(!(leq(a, b) && leq(b, a)) || a == b, at);
        }
      }
    }
  });
}

CheckResult principal_is_powerset(const VerifyOptions& o) {
  return run("(A) = P(A)", [&](Check& c) {
    for (std::size_t n = 0; n <= exhaustive_max(o); ++n) {
      const GroundSet g = letters(n);
      for (const auto& a : all_elements(g)) {
        const Ideal I = principal_ideal(a);
        oracle::ElementSet expected = 0;
        for (const auto& b : all_elements(g)) {
          c.expect(member(b, I) == leq(b, a), [&] { return to_string(b) + " in " + to_string(I); });
          if (leq(b, a)) expected = oracle::with(expected, static_cast<oracle::Mask>(b.to_mask()));
        }
        c.expect(oracle::element_set(I) == expected, [&] { return "span of " + to_string(a); });
      }
    }
  });
}

CheckResult reduction_soundness(const VerifyOptions& o) {
  return run("generator reduction", [&](Check& c) {
    for (std::size_t n = 0; n <= std::min<std::size_t>(exhaustive_max(o), 3); ++n) {
      const GroundSet g = letters(n);
      const auto els = all_elements(g);
      std::function<void(std::vector<RingElem>&)> rec = [&](std::vector<RingElem>& gens) {
        const Ideal I = ideal_from_generators(g, gens);
        RingElem uni = RingElem::zero(g), combo = RingElem::zero(g);
        const auto coeffs = generator_coefficients(I);
        for (std::size_t i = 0; i < gens.size(); ++i) {
          uni = RingElem(g, uni.bits() | gens[i].bits());
          combo = add(combo, mul(coeffs[i], gens[i]));
          c.expect(member(gens[i], I), [&] { return "generator outside " + to_string(I); });
        }
        c.expect(I.principal() == uni, [&] { return "principal of " + to_string(I) + " is not the union"; });
        c.expect(combo == I.principal(), [&] { return "coefficients do not rebuild " + to_string(I); });
        c.expect(oracle::element_set(I) == oracle::element_set(principal_ideal(I.principal())),
                 [&] { return "span mismatch for " + to_string(I); });
        if (gens.size() == 3) return;
        for (const auto& e : els) {
          gens.push_back(e);
          rec(gens);
          gens.pop_back();
        }
      };
      std::vector<RingElem> gens;
      rec(gens);
    }
  });
}

CheckResult radical_and_predicates(const VerifyOptions& o) {
  return run("radical, prime, primary, maximal vs definitions", [&](Check& c) {
    for (std::size_t n = 1; n <= o.oracle.value; ++n) {
      const GroundSet g = letters(n);
      const auto ideals = enumerate_ideals(g, o.oracle);
      std::vector<oracle::ElementSet> sets;
      for (const auto& I : ideals) sets.push_back(oracle::element_set(I));
      for (std::size_t k = 0; k < ideals.size(); ++k) {
        const Ideal& I = ideals[k];
        const auto s = sets[k];
        auto at = [&] { return "n=" + std::to_string(n) + " I=" + to_string(I); };
        c.expect(radical(I) == I && oracle::radical(n, s) == s, at);
        c.expect(is_prime(I) == oracle::is_prime(n, s), at);
        c.expect(is_primary(I) == oracle::is_primary(n, s), at);
        c.expect(is_maximal(I) == oracle::is_maximal(n, s, sets), at);
        c.expect(is_proper(I) == oracle::is_proper(n, s), at);
      }
    }
  });
}

CheckResult ideal_enumeration(const VerifyOptions& o) {
  return run("ideal enumeration vs subset-closure filter", [&](Check& c) {
    for (std::size_t n = 0; n <= exhaustive_max(o); ++n) {
      const GroundSet g = letters(n);
      std::vector<oracle::ElementSet> ours;
      for (const auto& I : enumerate_ideals(g, o.oracle)) ours.push_back(oracle::element_set(I));
      std::sort(ours.begin(), ours.end());
      const auto theirs = oracle::closed_subsets(n);
      c.expect(ours.size() == (std::size_t{1} << n), [&] { return "count at n=" + std::to_string(n); });
      c.expect(ours == theirs, [&] { return "ideal sets differ at n=" + std::to_string(n); });
    }
  });
}

CheckResult product_intersection(const VerifyOptions& o) {
  return run("product equals intersection", [&](Check& c) {
    for (std::size_t n = 0; n <= std::min<std::size_t>(exhaustive_max(o), 3); ++n) {
      const GroundSet g = letters(n);
      const auto ideals = enumerate_ideals(g, o.oracle);
      for (const auto& I : ideals) {
        for (const auto& J : ideals) {
          const auto expected = oracle::intersect(oracle::element_set(I), oracle::element_set(J));
          c.expect(ideal_product(I, J) == ideal_intersect(I, J) &&
                       oracle::element_set(ideal_intersect(I, J)) == expected,
                   [&] { return to_string(I) + " and " + to_string(J); });
        }
      }
    }
  });
}

CheckResult decompositions(const VerifyOptions& o) {
  return run("decompositions: intersection, factor count, uniqueness", [&](Check& c) {
    for (std::size_t n = 1; n <= o.oracle.value; ++n) {
      const GroundSet g = letters(n);
      const auto spectrum = maximal_ideals(g);
      for (const auto& I : enumerate_ideals(g, o.oracle)) {
        auto at = [&] { return "n=" + std::to_string(n) + " I=" + to_string(I); };
        std::vector<Ideal> above;
        for (const auto& m : spectrum) {
          if (contains(m.ideal, I)) above.push_back(m.ideal);
        }
        c.expect(ideal_intersect_all(g, above) == I, at);
        if (!is_proper(I)) continue;
        const Decomposition d = decompose(I);
        std::vector<Ideal> fs;
        for (const auto& f : d.factors()) fs.push_back(f.ideal);
        c.expect(d.verified() && d.reduced() && ideal_intersect_all(g, fs) == I, at);
        c.expect(d.factors().size() == n - I.principal().count(), at);
        const auto found = unique_decomposition_search(I, o.oracle);
        c.expect(found.size() == 1 && found.front() == d, at);
      }
    }
  });
}

CheckResult contained_factor(const VerifyOptions& o) {
  return run("prime containing an intersection contains a factor", [&](Check& c) {
    for (std::size_t n = 1; n <= std::min<std::size_t>(exhaustive_max(o), 3); ++n) {
      const GroundSet g = letters(n);
      const auto ideals = enumerate_ideals(g, o.oracle);
      for (const auto& P : maximal_ideals(g)) {
        std::vector<Ideal> family;
        std::function<void()> rec = [&] {
          if (!family.empty() && contains(P.ideal, ideal_intersect_all(g, family))) {
            const std::size_t k = find_contained_factor(P.ideal, family);
            c.expect(k < family.size() && contains(P.ideal, family[k]), [&] { return to_string(P.ideal); });
          }
          if (family.size() == 3) return;
          for (const auto& I : ideals) {
            family.push_back(I);
            rec();
            family.pop_back();
          }
        };
        rec();
      }
    }
  });
}

CheckResult quotients(const VerifyOptions& o) {
  return run("quotient P(X)/P(A) and function tables", [&](Check& c) {
    for (std::size_t n = 0; n <= exhaustive_max(o); ++n) {
      const GroundSet g = letters(n);
      const auto els = all_elements(g);
      for (const auto& a : els) {
        const QuotientMap q = quotient(g, a);
        const Ideal kernel = principal_ideal(a);
        auto at = [&] { return "n=" + std::to_string(n) + " A=" + to_string(a); };
        std::vector<std::uint64_t> images;
        for (const auto& u : els) {
          c.expect(project(q, u).is_zero() == member(u, kernel), at);
          images.push_back(project(q, u).to_mask());
          for (const auto& v : els) {
            c.expect(project(q, add(u, v)) == add(project(q, u), project(q, v)), at);
            c.expect(project(q, mul(u, v)) == mul(project(q, u), project(q, v)), at);
            c.expect((project(q, u) == project(q, v)) == member(add(u, v), kernel), at);
          }
        }
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        c.expect(images.size() == (std::size_t{1} << q.target().size()), at);
      }
      for (const auto& a : els) {
        const auto t = to_function_table(a);
        c.expect(from_function_table(g, t) == a, [&] { return to_string(a); });
        for (std::size_t i = 0; i < n; ++i) {
          c.expect((t[i] == 1) == char_eval(g.label(i), a), [&] { return to_string(a); });
        }
        for (const auto& b : els) {
          const auto tb = to_function_table(b);
          const auto ts = to_function_table(add(a, b));
          const auto tp = to_function_table(mul(a, b));
          for (std::size_t i = 0; i < n; ++i) {
            c.expect(ts[i] == (t[i] ^ tb[i]) && tp[i] == (t[i] & tb[i]), [&] { return to_string(a); });
          }
        }
      }
      if (n >= 1) {
        for (const auto& m : maximal_ideals(g)) {
          for (const auto& a : els) {
            c.expect(!char_eval(m.point, a) == member(a, m.ideal), [&] { return "kernel of f_" + m.point; });
          }
        }
      }
    }
  });
}

CheckResult stone(const VerifyOptions& o) {
  return run("atoms and the map onto P(atoms)", [&](Check& c) {
    for (std::size_t dim = 1; dim <= exhaustive_max(o); ++dim) {
      const GenericBoolRing r(dim);
      const auto map = stone_iso(r);
      c.expect(verify_stone_iso(map, 4).ok(), [&] { return "dimension " + std::to_string(dim); });
      for (const auto& atom : map.atom_list()) {
        const BoolVec gen = maximal_principal_from_atom(r, atom);
        const RingElem image = map(gen);
        c.expect(image.count() + 1 == dim && is_maximal(principal_ideal(image)),
                 [&] { return "complement of atom " + to_string(atom); });
      }
    }
  });
}

CheckResult fincof(const VerifyOptions& o) {
  return run("finite-cofinite algebra and nonzero witnesses", [&](Check& c) {
    std::mt19937_64 rng(o.seed);
    auto random_elem = [&] {
      std::vector<Point> support(rng() % 6);
      for (auto& p : support) p = rng() % 20;
      return FinCofElem(rng() % 2 ? FinCofKind::Finite : FinCofKind::Cofinite, std::move(support));
    };
    for (int trial = 0; trial < 2000; ++trial) {
      const FinCofElem a = random_elem(), b = random_elem();
      const Point x = rng() % 25;
      auto at = [&] { return to_string(a) + ", " + to_string(b) + " at " + std::to_string(x); };
      c.expect(fc_member_point(x, fc_add(a, b)) == (fc_member_point(x, a) != fc_member_point(x, b)), at);
      c.expect(fc_member_point(x, fc_mul(a, b)) == (fc_member_point(x, a) && fc_member_point(x, b)), at);
      c.expect(fc_add(a, a).is_zero() && fc_mul(a, a) == a && fc_mul(a, b) == fc_mul(b, a), at);
      c.expect(!fc_in_fin(a) || !fc_in_fin(b) || fc_in_fin(fc_add(a, b)), at);
      c.expect(!fc_in_fin(a) || fc_in_fin(fc_mul(a, b)), at);
      c.expect(!fc_in_mx(x, fc_mul(a, b)) || fc_in_mx(x, a) || fc_in_mx(x, b), at);
    }
    c.expect(!fc_in_fin(FinCofElem::one()), [] { return "1 in Fin"; });
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<Point> pts(rng() % 101);
      for (auto& p : pts) p = rng() % 150;
      const FinCofElem w = witness_nonzero(pts);
      const bool common = std::all_of(pts.begin(), pts.end(), [&](Point x) { return fc_in_mx(x, w); });
      c.expect(!w.is_zero() && common, [&] { return "witness " + to_string(w); });
    }
  });
}

CheckResult integers(const VerifyOptions&) {
  return run("integer primary decomposition", [&](Check& c) {
    const auto f = integer_demo(360);
    c.expect(f == std::vector<std::uint64_t>{8, 9, 5}, [] { return "360"; });
    c.expect(verify_integer_decomposition(360, f, 10'000), [] { return "divisibility for 360"; });
    for (std::uint64_t m = 2; m <= 2000; ++m) {
      const auto fs = integer_demo(m);
      bool coprime = true;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) coprime = coprime && std::gcd(fs[i], fs[j]) == 1;
      }
      c.expect(coprime, [&] { return std::to_string(m); });
    }
  });
}

}  // namespace

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& r) { return r.passed; }));
}

VerifyReport verify_all(const VerifyOptions& options) {
  oracle::require_bound(0, options.oracle);
  VerifyReport report;
  for (auto* check : {ring_axioms, principal_is_powerset, reduction_soundness, radical_and_predicates,
                      ideal_enumeration, product_intersection, decompositions, contained_factor,
                      quotients, stone, fincof, integers}) {
    report.checks.push_back(check(options));
  }
  return report;
}

}  // namespace boolring
