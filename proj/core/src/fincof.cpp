#include "boolring/fincof.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace boolring {

namespace {

using Support = std::vector<Point>;

Support sym_diff(const Support& a, const Support& b) {
  Support out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Support meet(const Support& a, const Support& b) {
  Support out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Support join(const Support& a, const Support& b) {
  Support out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Support minus(const Support& a, const Support& b) {
  Support out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

FinCofElem::FinCofElem(FinCofKind kind, std::vector<Point> support)
    : kind_(kind), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
}

FinCofElem FinCofElem::finite(std::initializer_list<Point> points) {
  return FinCofElem(FinCofKind::Finite, points);
}

FinCofElem FinCofElem::cofinite(std::initializer_list<Point> points) {
  return FinCofElem(FinCofKind::Cofinite, points);
}

FinCofElem fc_add(const FinCofElem& a, const FinCofElem& b) {
  // (X − S) Δ (X − T) = S Δ T and S Δ (X − T) = X − (S Δ T).
  const auto kind = a.kind() == b.kind() ? FinCofKind::Finite : FinCofKind::Cofinite;
  return FinCofElem(kind, sym_diff(a.support(), b.support()));
}

FinCofElem fc_mul(const FinCofElem& a, const FinCofElem& b) {
  using K = FinCofKind;
  if (a.kind() == K::Finite && b.kind() == K::Finite) return FinCofElem(K::Finite, meet(a.support(), b.support()));
  if (a.kind() == K::Cofinite && b.kind() == K::Cofinite) {
    return FinCofElem(K::Cofinite, join(a.support(), b.support()));
  }
  const FinCofElem& fin = a.kind() == K::Finite ? a : b;
  const FinCofElem& cof = a.kind() == K::Finite ? b : a;
  return FinCofElem(K::Finite, minus(fin.support(), cof.support()));
}

FinCofElem fc_complement(const FinCofElem& a) {
  const auto kind = a.kind() == FinCofKind::Finite ? FinCofKind::Cofinite : FinCofKind::Finite;
  return FinCofElem(kind, a.support());
}

bool fc_member_point(Point x, const FinCofElem& a) {
  const bool listed = std::binary_search(a.support().begin(), a.support().end(), x);
  return a.kind() == FinCofKind::Finite ? listed : !listed;
}

bool fc_in_fin(const FinCofElem& a) { return a.kind() == FinCofKind::Finite; }

bool fc_in_mx(Point x, const FinCofElem& a) { return !fc_member_point(x, a); }

FinCofElem witness_nonzero(std::span<const Point> points) {
  const Point fresh = points.empty() ? 0 : *std::max_element(points.begin(), points.end()) + 1;
  FinCofElem w(FinCofKind::Finite, {fresh});
  const bool in_all = std::all_of(points.begin(), points.end(), [&](Point x) { return fc_in_mx(x, w); });
  if (w.is_zero() || !in_all) throw std::logic_error("witness failed its own check");
  return w;
}

std::string to_string(const FinCofElem& a) {
  std::string out = a.kind() == FinCofKind::Finite ? "F{" : "C{";
  for (std::size_t i = 0; i < a.support().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(a.support()[i]);
  }
  return out + "}";
}

}  // namespace boolring
