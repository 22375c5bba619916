#include "boolring/quotient.hpp"

#include "boolring/error.hpp"

namespace boolring {

QuotientMap quotient(const GroundSet& g, const RingElem& a) {
  require_same_ground(g, a.ground());
  std::vector<std::string> labels;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!a.test(i)) {
      labels.push_back(g.label(i));
      kept.push_back(i);
    }
  }
  return QuotientMap(a, GroundSet(std::move(labels)), std::move(kept));
}

RingElem project(const QuotientMap& q, const RingElem& u) {
  require_same_ground(q.source(), u.ground());
  Bits bits(q.target().size());
  for (std::size_t j = 0; j < q.kept().size(); ++j) bits[j] = u.test(q.kept()[j]);
  return RingElem(q.target(), std::move(bits));
}

RingElem section(const QuotientMap& q, const RingElem& v) {
  require_same_ground(q.target(), v.ground());
  Bits bits(q.source().size());
  for (std::size_t j = 0; j < q.kept().size(); ++j) bits[q.kept()[j]] = v.test(j);
  return RingElem(q.source(), std::move(bits));
}

FunctionTable to_function_table(const RingElem& a) {
  FunctionTable table(a.ground().size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = a.test(i) ? 1 : 0;
  return table;
}

RingElem from_function_table(const GroundSet& g, const FunctionTable& table) {
  if (table.size() != g.size()) {
    raise(ErrorKind::LengthMismatch, "function table of length " + std::to_string(table.size()) +
                                         " over a ground set of size " + std::to_string(g.size()));
  }
  Bits bits(g.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] > 1) raise(ErrorKind::OutOfRange, "function table entries must be 0 or 1");
    bits[i] = table[i] == 1;
  }
  return RingElem(g, std::move(bits));
}

}  // namespace boolring
