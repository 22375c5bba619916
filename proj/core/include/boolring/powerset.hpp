#pragma once

// The power-set ring P(X) over a finite, ordered universe of labels.
//
// Addition is symmetric difference, multiplication is intersection, the
// empty set is 0 and the whole universe is 1. Bit i of an element stands
// for labels()[i]; that correspondence is fixed when the GroundSet is
// created.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace boolring {

using Bits = boost::dynamic_bitset<std::uint64_t>;

class GroundSet {
 public:
  /// The empty universe (the zero ring, where 0 == 1).
  GroundSet();

  /// Throws DuplicateLabel if a label repeats.
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const noexcept { return data_->labels.size(); }
  bool empty() const noexcept { return size() == 0; }
  std::span<const std::string> labels() const noexcept { return data_->labels; }
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }

  std::optional<std::size_t> index_of(std::string_view label) const;
  /// Throws UnknownLabel.
  std::size_t require_index(std::string_view label) const;
  bool contains(std::string_view label) const { return index_of(label).has_value(); }

  /// Two ground sets are the same universe iff they list the same labels in
  /// the same order.
  friend bool operator==(const GroundSet& a, const GroundSet& b) noexcept;

 private:
  struct Data {
    std::vector<std::string> labels;
    std::map<std::string, std::size_t, std::less<>> index;
  };
  std::shared_ptr<const Data> data_;
};

GroundSet new_ground(std::vector<std::string> labels);

class RingElem {
 public:
  /// Zero of the empty ground set.
  RingElem();
  /// Throws LengthMismatch unless bits.size() == ground.size().
  RingElem(GroundSet ground, Bits bits);

  static RingElem zero(const GroundSet& g);
  static RingElem one(const GroundSet& g);
  static RingElem singleton(const GroundSet& g, std::size_t index);

  /// Element whose bit i is bit i of `mask`. Requires g.size() <= 64.
  static RingElem from_mask(const GroundSet& g, std::uint64_t mask);
  /// Inverse of from_mask. Requires ground().size() <= 64.
  std::uint64_t to_mask() const;

  const GroundSet& ground() const noexcept { return ground_; }
  const Bits& bits() const noexcept { return bits_; }

  bool test(std::size_t index) const { return bits_.test(index); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool is_zero() const noexcept { return bits_.none(); }
  bool is_one() const noexcept { return bits_.all(); }

  /// Member labels in ground order.
  std::vector<std::string> members() const;

  /// Bitwise equality; elements of different ground sets are never equal.
  friend bool operator==(const RingElem& a, const RingElem& b);

 private:
  GroundSet ground_;
  Bits bits_;
};

/// Throws UnknownLabel for a member outside g.
RingElem elem(const GroundSet& g, std::span<const std::string> members);
RingElem elem(const GroundSet& g, std::initializer_list<std::string_view> members);

// Ring arithmetic. Binary operations throw GroundMismatch when the operands
// live over different ground sets.
RingElem add(const RingElem& a, const RingElem& b);
RingElem mul(const RingElem& a, const RingElem& b);
RingElem complement(const RingElem& a);
/// a ⪯ b  iff  ab == a; for P(X) this is a ⊆ b.
bool leq(const RingElem& a, const RingElem& b);

inline RingElem operator+(const RingElem& a, const RingElem& b) { return add(a, b); }
inline RingElem operator*(const RingElem& a, const RingElem& b) { return mul(a, b); }

/// The singletons, in label order.
std::vector<RingElem> atoms(const GroundSet& g);

/// χ_a(x): the evaluation homomorphism P(X) → Z2 at the point x.
bool char_eval(std::string_view x, const RingElem& a);

/// Orders same-ground elements by the integer value of their bit-vector,
/// bit i weighing 2^i.
bool value_less(const RingElem& a, const RingElem& b);

/// Set-literal rendering, e.g. "{a,c}" or "{}".
std::string to_string(const RingElem& a);

void require_same_ground(const GroundSet& a, const GroundSet& b);

}  // namespace boolring
