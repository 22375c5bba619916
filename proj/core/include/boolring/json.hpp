#pragma once

// JSON encodings. Keys are emitted in the documented order, so identical
// values always serialize to identical bytes.
//
//   RingElem       {"ground": [labels], "members": [labels]}
//   Ideal          {"generators": [RingElem], "principal": RingElem}
//   Decomposition  {"target": Ideal,
//                   "factors": [{"point": label, "principal": RingElem}],
//                   "reduced": bool, "verified": bool}
//   QuotientMap    {"modulus": RingElem, "target": [labels]}
//   FunctionTable  [0 | 1, ...]
//   FinCofElem     {"kind": "finite" | "cofinite", "support": [ints]}
//
// The *_from_json readers reject anything else with a TypeError.

#include <nlohmann/json.hpp>

#include "boolring/fincof.hpp"
#include "boolring/ideal.hpp"
#include "boolring/quotient.hpp"
#include "boolring/spectrum.hpp"

namespace boolring {

using Json = nlohmann::ordered_json;

Json to_json(const RingElem& a);
Json to_json(const Ideal& I);
Json to_json(const Decomposition& d);
Json to_json(const QuotientMap& q);
Json to_json(const FunctionTable& t);
Json to_json(const FinCofElem& a);

RingElem elem_from_json(const Json& j);
/// Rebuilds an ideal from its generators and checks the stored principal.
Ideal ideal_from_json(const Json& j);
/// Re-derives `verified` and `reduced` and rejects documents whose flags
/// disagree.
Decomposition decomposition_from_json(const Json& j);
FunctionTable function_table_from_json(const Json& j);
FinCofElem fincof_from_json(const Json& j);

}  // namespace boolring
