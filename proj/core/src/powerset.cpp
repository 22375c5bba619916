#include "boolring/powerset.hpp"

#include "boolring/error.hpp"

namespace boolring {

namespace {

std::string quote(std::string_view s) { return "\"" + std::string(s) + "\""; }

}  // namespace

GroundSet::GroundSet() : data_(std::make_shared<const Data>()) {}

GroundSet::GroundSet(std::vector<std::string> labels) {
  Data data;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = data.index.emplace(labels[i], i);
    if (!inserted) raise(ErrorKind::DuplicateLabel, quote(labels[i]));
  }
  data.labels = std::move(labels);
  data_ = std::make_shared<const Data>(std::move(data));
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
  auto it = data_->index.find(label);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t GroundSet::require_index(std::string_view label) const {
  auto idx = index_of(label);
  if (!idx) raise(ErrorKind::UnknownLabel, quote(label));
  return *idx;
}

bool operator==(const GroundSet& a, const GroundSet& b) noexcept {
  return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
}

GroundSet new_ground(std::vector<std::string> labels) { return GroundSet(std::move(labels)); }

RingElem::RingElem() = default;

RingElem::RingElem(GroundSet ground, Bits bits) : ground_(std::move(ground)), bits_(std::move(bits)) {
  if (bits_.size() != ground_.size()) {
    raise(ErrorKind::LengthMismatch, "bit-vector of length " + std::to_string(bits_.size()) +
                                         " over a ground set of size " +
                                         std::to_string(ground_.size()));
  }
}

RingElem RingElem::zero(const GroundSet& g) { return RingElem(g, Bits(g.size())); }

RingElem RingElem::one(const GroundSet& g) {
  Bits bits(g.size());
  bits.set();
  return RingElem(g, std::move(bits));
}

RingElem RingElem::singleton(const GroundSet& g, std::size_t index) {
  Bits bits(g.size());
  bits.set(index);
  return RingElem(g, std::move(bits));
}

RingElem RingElem::from_mask(const GroundSet& g, std::uint64_t mask) {
  if (g.size() > 64) raise(ErrorKind::LimitExceeded, "mask conversion needs a ground set of size <= 64");
  if (g.size() < 64 && (mask >> g.size()) != 0) {
    raise(ErrorKind::LengthMismatch, "mask has bits beyond the ground set");
  }
  Bits bits(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) bits[i] = ((mask >> i) & 1U) != 0;
  return RingElem(g, std::move(bits));
}

std::uint64_t RingElem::to_mask() const {
  if (ground_.size() > 64) raise(ErrorKind::LimitExceeded, "mask conversion needs a ground set of size <= 64");
  std::uint64_t mask = 0;
  for (std::size_t i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::vector<std::string> RingElem::members() const {
  std::vector<std::string> out;
  out.reserve(bits_.count());
  for (std::size_t i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
    out.push_back(ground_.label(i));
  }
  return out;
}

bool operator==(const RingElem& a, const RingElem& b) {
  return a.ground_ == b.ground_ && a.bits_ == b.bits_;
}

RingElem elem(const GroundSet& g, std::span<const std::string> members) {
  Bits bits(g.size());
  for (const auto& m : members) bits.set(g.require_index(m));
  return RingElem(g, std::move(bits));
}

RingElem elem(const GroundSet& g, std::initializer_list<std::string_view> members) {
  Bits bits(g.size());
  for (auto m : members) bits.set(g.require_index(m));
  return RingElem(g, std::move(bits));
}

void require_same_ground(const GroundSet& a, const GroundSet& b) {
  if (!(a == b)) {
    raise(ErrorKind::GroundMismatch, "operands belong to different ground sets (sizes " +
                                         std::to_string(a.size()) + " and " +
                                         std::to_string(b.size()) + ")");
  }
}

RingElem add(const RingElem& a, const RingElem& b) {
  require_same_ground(a.ground(), b.ground());
  return RingElem(a.ground(), a.bits() ^ b.bits());
}

RingElem mul(const RingElem& a, const RingElem& b) {
  require_same_ground(a.ground(), b.ground());
  return RingElem(a.ground(), a.bits() & b.bits());
}

RingElem complement(const RingElem& a) { return RingElem(a.ground(), ~a.bits()); }

bool leq(const RingElem& a, const RingElem& b) {
  require_same_ground(a.ground(), b.ground());
  return a.bits().is_subset_of(b.bits());
}

std::vector<RingElem> atoms(const GroundSet& g) {
  std::vector<RingElem> out;
  out.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out.push_back(RingElem::singleton(g, i));
  return out;
}

bool char_eval(std::string_view x, const RingElem& a) {
  return a.test(a.ground().require_index(x));
}

bool value_less(const RingElem& a, const RingElem& b) {
  require_same_ground(a.ground(), b.ground());
  for (std::size_t i = a.bits().size(); i-- > 0;) {
    if (a.test(i) != b.test(i)) return b.test(i);
  }
  return false;
}

std::string to_string(const RingElem& a) {
  std::string out = "{";
  bool first = true;
  for (const auto& m : a.members()) {
    if (!first) out += ',';
    out += m;
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace boolring
