#include "boolring/json.hpp"

#include "boolring/error.hpp"

namespace boolring {

namespace {

void expect(bool cond, const std::string& what) {
  if (!cond) raise(ErrorKind::TypeError, "malformed JSON: " + what);
}

void expect_keys(const Json& j, std::initializer_list<const char*> keys) {
  expect(j.is_object(), "expected an object");
  expect(j.size() == keys.size(), "unexpected number of keys");
  for (const char* k : keys) expect(j.contains(k), std::string("missing key \"") + k + "\"");
}

std::vector<std::string> string_array(const Json& j, const char* what) {
  expect(j.is_array(), std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    expect(v.is_string(), std::string(what) + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

Json to_json(const RingElem& a) {
  Json j;
  j["ground"] = std::vector<std::string>(a.ground().labels().begin(), a.ground().labels().end());
  j["members"] = a.members();
  return j;
}

Json to_json(const Ideal& I) {
  Json j;
  j["generators"] = Json::array();
  for (const auto& g : I.generators()) j["generators"].push_back(to_json(g));
  j["principal"] = to_json(I.principal());
  return j;
}

Json to_json(const Decomposition& d) {
  Json j;
  j["target"] = to_json(d.target());
  j["factors"] = Json::array();
  for (const auto& f : d.factors()) {
    Json fj;
    fj["point"] = f.point;
    fj["principal"] = to_json(f.ideal.principal());
    j["factors"].push_back(std::move(fj));
  }
  j["reduced"] = d.reduced();
  j["verified"] = d.verified();
  return j;
}

Json to_json(const QuotientMap& q) {
  Json j;
  j["modulus"] = to_json(q.modulus());
  j["target"] = std::vector<std::string>(q.target().labels().begin(), q.target().labels().end());
  return j;
}

Json to_json(const FunctionTable& t) {
  Json j = Json::array();
  for (auto bit : t) j.push_back(static_cast<int>(bit));
  return j;
}

Json to_json(const FinCofElem& a) {
  Json j;
  j["kind"] = a.kind() == FinCofKind::Finite ? "finite" : "cofinite";
  j["support"] = a.support();
  return j;
}

RingElem elem_from_json(const Json& j) {
  expect_keys(j, {"ground", "members"});
  const GroundSet g(string_array(j["ground"], "ground"));
  return elem(g, string_array(j["members"], "members"));
}

Ideal ideal_from_json(const Json& j) {
  expect_keys(j, {"generators", "principal"});
  expect(j["generators"].is_array(), "generators must be an array");
  const RingElem principal = elem_from_json(j["principal"]);
  std::vector<RingElem> gens;
  for (const auto& g : j["generators"]) gens.push_back(elem_from_json(g));
  Ideal I = ideal_from_generators(principal.ground(), std::move(gens));
  expect(I.principal() == principal, "principal does not match the generators");
  return I;
}

Decomposition decomposition_from_json(const Json& j) {
  expect_keys(j, {"target", "factors", "reduced", "verified"});
  expect(j["factors"].is_array(), "factors must be an array");
  expect(j["reduced"].is_boolean() && j["verified"].is_boolean(), "flags must be booleans");
  Ideal target = ideal_from_json(j["target"]);
  std::vector<MaxIdealDescriptor> factors;
  for (const auto& f : j["factors"]) {
    expect_keys(f, {"point", "principal"});
    expect(f["point"].is_string(), "point must be a string");
    auto desc = maximal_ideal_at(target.ground(), f["point"].get<std::string>());
    expect(desc.ideal.principal() == elem_from_json(f["principal"]), "factor principal is not m_point");
    factors.push_back(std::move(desc));
  }
  Decomposition d = Decomposition::assemble(std::move(target), std::move(factors));
  expect(d.verified() == j["verified"].get<bool>(), "verified flag disagrees with the factors");
  if (d.verified()) verify_reduced(d);
  expect(d.reduced() == j["reduced"].get<bool>(), "reduced flag disagrees with the factors");
  return d;
}

FunctionTable function_table_from_json(const Json& j) {
  expect(j.is_array(), "function table must be an array");
  FunctionTable t;
  for (const auto& v : j) {
    expect(v.is_number_integer() && (v == 0 || v == 1), "function table entries must be 0 or 1");
    t.push_back(v.get<std::uint8_t>());
  }
  return t;
}

FinCofElem fincof_from_json(const Json& j) {
  expect_keys(j, {"kind", "support"});
  expect(j["kind"] == "finite" || j["kind"] == "cofinite", "kind must be \"finite\" or \"cofinite\"");
  expect(j["support"].is_array(), "support must be an array");
  std::vector<Point> support;
  for (const auto& v : j["support"]) {
    expect(v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0),
           "support entries must be natural numbers");
    support.push_back(v.get<Point>());
  }
  const auto kind = j["kind"] == "finite" ? FinCofKind::Finite : FinCofKind::Cofinite;
  return FinCofElem(kind, std::move(support));
}

}  // namespace boolring
