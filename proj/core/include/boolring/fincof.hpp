#pragma once

// The finite–cofinite subalgebra of P(ℕ).
//
// An element is a finite set of naturals or the complement of one, stored
// symbolically by its finite support. Fin, the ideal of finite sets, is not
// finitely generated, and no finite family of the point ideals m_x meets in
// zero; witness_nonzero produces the element that shows it.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace boolring {

using Point = std::uint64_t;

enum class FinCofKind { Finite, Cofinite };

class FinCofElem {
 public:
  /// Zero: the empty finite set.
  FinCofElem() = default;
  FinCofElem(FinCofKind kind, std::vector<Point> support);

  static FinCofElem finite(std::initializer_list<Point> points);
  static FinCofElem cofinite(std::initializer_list<Point> points);
  static FinCofElem zero() { return {}; }
  static FinCofElem one() { return FinCofElem(FinCofKind::Cofinite, {}); }

  FinCofKind kind() const noexcept { return kind_; }
  /// Members if finite, non-members if cofinite; sorted and unique.
  const std::vector<Point>& support() const noexcept { return support_; }

  bool is_zero() const noexcept { return kind_ == FinCofKind::Finite && support_.empty(); }

  friend bool operator==(const FinCofElem&, const FinCofElem&) = default;

 private:
  FinCofKind kind_ = FinCofKind::Finite;
  std::vector<Point> support_;
};

FinCofElem fc_add(const FinCofElem& a, const FinCofElem& b);
FinCofElem fc_mul(const FinCofElem& a, const FinCofElem& b);
FinCofElem fc_complement(const FinCofElem& a);

/// χ_a(x).
bool fc_member_point(Point x, const FinCofElem& a);
/// a ∈ Fin.
bool fc_in_fin(const FinCofElem& a);
/// a ∈ m_x, i.e. x ∉ a.
bool fc_in_mx(Point x, const FinCofElem& a);

/// A nonzero element lying in every m_x for x in `points`: the singleton
/// {y} for the least y above every given point (y = 0 for no points). The
/// result is re-checked before it is returned.
FinCofElem witness_nonzero(std::span<const Point> points);

/// "F{1,2}" or "C{5}".
std::string to_string(const FinCofElem& a);

}  // namespace boolring
