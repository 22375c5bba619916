#include "boolring/dsl/session.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "boolring/dsl/parser.hpp"
#include "boolring/generic_ring.hpp"
#include "boolring/quotient.hpp"
#include "boolring/spectrum.hpp"
#include "boolring/verify.hpp"

namespace boolring::dsl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string located(const Span& span, const std::string& message) {
  return std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message;
}

// Runs f, attaching `span` to any library error that escapes.
template <class F>
auto at(const Span& span, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const EvalError&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw EvalError(e.kind(), span, e.what());
  }
}

[[noreturn]] void fail(ErrorKind kind, const Span& span, const std::string& message) {
  throw EvalError(kind, span, std::string(to_string(kind)) + ": " + message);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

EvalError::EvalError(ErrorKind kind, Span span, const std::string& message)
    : Error(kind, located(span, message)), span_(span) {}

Session::Session(SessionOptions options) : options_(options) {}

struct Session::Impl {
  Session& s;
  // Pending changes, committed only if the whole statement succeeds.
  std::optional<GroundSet> ground;
  Mode mode;
  std::map<std::string, Value> bindings;

  explicit Impl(Session& session)
      : s(session), ground(session.ground_), mode(session.mode_), bindings(session.bindings_) {}

  void commit() {
    s.ground_ = std::move(ground);
    s.mode_ = mode;
    s.bindings_ = std::move(bindings);
  }

  const GroundSet& require_ground(const Span& span) const {
    if (!ground) fail(ErrorKind::NameError, span, "no ground set declared; start with `ground a b c`");
    return *ground;
  }

  const Value& lookup(const std::string& name, const Span& span) const {
    auto it = bindings.find(name);
    if (it == bindings.end()) fail(ErrorKind::NameError, span, "unbound name '" + name + "'");
    return it->second;
  }

  // Power-set expressions.
  RingElem elem_expr(const Expr& e) {
    return std::visit(
        overloaded{
            [&](const NameRef& n) -> RingElem {
              const Value& v = lookup(n.name, e.span);
              if (const auto* r = std::get_if<RingElem>(&v)) return *r;
              fail(ErrorKind::TypeError, e.span, "'" + n.name + "' is not a subset of the ground set");
            },
            [&](const SetLit& lit) {
              const GroundSet& g = require_ground(e.span);
              return at(e.span, [&] { return boolring::elem(g, lit.labels); });
            },
            [&](const Constant& c) {
              const GroundSet& g = require_ground(e.span);
              return c.one ? RingElem::one(g) : RingElem::zero(g);
            },
            [&](const Binary& b) {
              RingElem l = elem_expr(*b.lhs);
              RingElem r = elem_expr(*b.rhs);
              return at(e.span, [&] { return b.op == '+' ? add(l, r) : mul(l, r); });
            },
            [&](const Complement& c) { return complement(elem_expr(*c.operand)); },
        },
        e.node);
  }

  // Finite-cofinite expressions.
  FinCofElem fincof_expr(const Expr& e) {
    return std::visit(
        overloaded{
            [&](const NameRef& n) -> FinCofElem {
              const Value& v = lookup(n.name, e.span);
              if (const auto* r = std::get_if<FinCofElem>(&v)) return *r;
              fail(ErrorKind::TypeError, e.span, "'" + n.name + "' is not a finite-cofinite element");
            },
            [&](const SetLit& lit) {
              std::vector<Point> pts;
              for (const auto& l : lit.labels) pts.push_back(point(l, e.span));
              return FinCofElem(FinCofKind::Finite, std::move(pts));
            },
            [&](const Constant& c) { return c.one ? FinCofElem::one() : FinCofElem::zero(); },
            [&](const Binary& b) {
              FinCofElem l = fincof_expr(*b.lhs);
              FinCofElem r = fincof_expr(*b.rhs);
              return b.op == '+' ? fc_add(l, r) : fc_mul(l, r);
            },
            [&](const Complement& c) { return fc_complement(fincof_expr(*c.operand)); },
        },
        e.node);
  }

  static Point point(const std::string& label, const Span& span) {
    Point p = 0;
    auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), p);
    if (ec != std::errc{} || ptr != label.data() + label.size()) {
      fail(ErrorKind::TypeError, span, "finite-cofinite points are natural numbers, got '" + label + "'");
    }
    return p;
  }

  Ideal ideal_arg(const IdealRef& ref) {
    if (const auto* name = std::get_if<std::string>(&ref.ref)) {
      const Value& v = lookup(*name, ref.span);
      if (const auto* I = std::get_if<Ideal>(&v)) return *I;
      fail(ErrorKind::TypeError, ref.span, "'" + *name + "' is not an ideal");
    }
    return make_ideal(std::get<std::vector<ExprPtr>>(ref.ref), ref.span);
  }

  Ideal make_ideal(const std::vector<ExprPtr>& exprs, const Span& span) {
    const GroundSet& g = require_ground(span);
    std::vector<RingElem> gens;
    for (const auto& e : exprs) gens.push_back(elem_expr(*e));
    return at(span, [&] { return ideal_from_generators(g, std::move(gens)); });
  }

  RingElem elem_arg(const Arg& a) { return elem_expr(*std::get<ExprPtr>(a)); }
  Ideal ideal_arg(const Arg& a) { return ideal_arg(std::get<IdealRef>(a)); }
  static std::uint64_t int_arg(const Arg& a) { return std::get<Integer>(a).value; }
  static const std::string& word_arg(const Arg& a) { return std::get<Word>(a).text; }

  void require_powerset(const Span& span) const {
    if (mode != Mode::PowerSet) fail(ErrorKind::TypeError, span, "command needs `mode powerset`");
  }

  Report statement(const Statement& st) {
    return std::visit(overloaded{
                          [&](const GroundDecl& d) { return ground_decl(d, st.span); },
                          [&](const LetElem& l) { return let_elem(l, st.span); },
                          [&](const LetIdeal& l) { return let_ideal(l, st.span); },
                          [&](const Command& c) { return command(c, st.span); },
                      },
                      st.node);
  }

  Report ground_decl(const GroundDecl& d, const Span& span) {
    if (d.labels.size() > s.options_.ground_max) {
      fail(ErrorKind::LimitExceeded, span,
           std::to_string(d.labels.size()) + " labels exceed --ground-max " + std::to_string(s.options_.ground_max));
    }
    ground = at(span, [&] { return GroundSet(d.labels); });
    bindings.clear();
    Report r;
    r.text = "X = " + to_string(RingElem::one(*ground)) + " (" + std::to_string(ground->size()) + " points)";
    r.json = Json{{"ground", d.labels}};
    return r;
  }

  Report let_elem(const LetElem& l, const Span&) {
    Report r;
    if (mode == Mode::FinCof) {
      FinCofElem v = fincof_expr(*l.value);
      r.text = l.name + " = " + to_string(v);
      r.json = to_json(v);
      bindings[l.name] = std::move(v);
    } else {
      RingElem v = elem_expr(*l.value);
      r.text = l.name + " = " + to_string(v);
      r.json = to_json(v);
      bindings[l.name] = std::move(v);
    }
    return r;
  }

  Report let_ideal(const LetIdeal& l, const Span& span) {
    require_powerset(span);
    Ideal I = make_ideal(l.generators, span);
    Report r;
    r.text = l.name + " = " + to_string(I);
    r.json = to_json(I);
    bindings[l.name] = std::move(I);
    return r;
  }

  static Report bool_report(const std::string& text, bool value) {
    return {text + ": " + yes_no(value), Json(value), false};
  }

  static Report ideal_report(const std::string& lhs, const Ideal& I) {
    return {lhs + " = " + to_string(I), to_json(I), false};
  }

  Report command(const Command& c, const Span& span) {
    const auto& v = c.verb;
    const auto& a = c.args;
    if (v == "help") return help();
    if (v == "mode") {
      mode = word_arg(a[0]) == "fincof" ? Mode::FinCof : Mode::PowerSet;
      return {"mode " + word_arg(a[0]), Json{{"mode", word_arg(a[0])}}, false};
    }
    if (v == "intdemo") return intdemo(int_arg(a[0]), span_of(a[0]));
    if (v == "stone") return stone(int_arg(a[0]), span_of(a[0]));
    if (v == "verify") return verify();
    if (v == "fincof") return fincof(c, span);
    if (v == "show" && mode == Mode::FinCof) {
      FinCofElem e = fincof_expr(*std::get<ExprPtr>(a[0]));
      return {to_string(e), to_json(e), false};
    }

    require_powerset(span);
    if (v == "decompose") {
      const Ideal I = ideal_arg(a[0]);
      const Decomposition d = at(span_of(a[0]), [&] { return decompose(I); });
      std::string text = to_string(d);
      for (const auto& f : d.factors()) text += "\n  m_" + f.point + " = " + to_string(f.ideal);
      text += "\n  verified=" + yes_no(d.verified()) + " reduced=" + yes_no(d.reduced());
      return {text, to_json(d), false};
    }
    if (v == "radical") {
      const Ideal I = ideal_arg(a[0]);
      return ideal_report("√" + to_string(I), at(span_of(a[0]), [&] { return radical(I); }));
    }
    if (v == "classify") {
      const Ideal I = ideal_arg(a[0]);
      return at(span_of(a[0]), [&] {
        const bool proper = is_proper(I), maximal = is_maximal(I), prime = is_prime(I), primary = is_primary(I);
        Report r;
        r.text = to_string(I) + ": proper=" + yes_no(proper) + " maximal=" + yes_no(maximal) +
                 " prime=" + yes_no(prime) + " primary=" + yes_no(primary);
        r.json = Json{{"ideal", to_json(I)}, {"proper", proper}, {"maximal", maximal}, {"prime", prime}, {"primary", primary}};
        return r;
      });
    }
    if (v == "unique") {
      const Ideal I = ideal_arg(a[0]);
      const auto found = at(span_of(a[0]), [&] { return unique_decomposition_search(I, s.options_.oracle); });
      Report r;
      r.text = std::to_string(found.size()) + " reduced decomposition(s) of " + to_string(I);
      r.json = Json::array();
      for (const auto& d : found) {
        r.text += "\n  " + to_string(d);
        r.json.push_back(to_json(d));
      }
      return r;
    }
    if (v == "findfactor") {
      const Ideal P = ideal_arg(a[0]);
      std::vector<Ideal> family;
      for (std::size_t i = 1; i < a.size(); ++i) family.push_back(ideal_arg(a[i]));
      const std::size_t k = at(span, [&] { return find_contained_factor(P, family); });
      return {"k = " + std::to_string(k) + ": " + to_string(family[k]) + " ⊆ " + to_string(P), Json(k), false};
    }
    if (v == "sum" || v == "intersect" || v == "product") {
      const Ideal I = ideal_arg(a[0]);
      const Ideal J = ideal_arg(a[1]);
      return at(span, [&] {
        if (v == "sum") return ideal_report(to_string(I) + " + " + to_string(J), ideal_sum(I, J));
        if (v == "intersect") return ideal_report(to_string(I) + " ∩ " + to_string(J), ideal_intersect(I, J));
        return ideal_report(to_string(I) + " · " + to_string(J), ideal_product(I, J));
      });
    }
    if (v == "member") {
      const RingElem u = elem_arg(a[0]);
      const Ideal I = ideal_arg(a[1]);
      return bool_report(to_string(u) + " ∈ " + to_string(I), at(span, [&] { return member(u, I); }));
    }
    if (v == "spectrum") {
      const auto ms = at(span, [&] { return maximal_ideals(require_ground(span)); });
      Report r;
      r.json = Json::array();
      std::vector<std::string> lines;
      for (const auto& m : ms) {
        lines.push_back("m_" + m.point + " = " + to_string(m.ideal));
        r.json.push_back(Json{{"point", m.point}, {"principal", to_json(m.ideal.principal())}});
      }
      r.text = join(lines, "\n");
      return r;
    }
    if (v == "ideals") {
      const auto all = at(span, [&] { return enumerate_ideals(require_ground(span), s.options_.oracle); });
      Report r;
      r.json = Json::array();
      std::vector<std::string> lines;
      for (const auto& I : all) {
        lines.push_back(to_string(I));
        r.json.push_back(to_json(I));
      }
      r.text = std::to_string(all.size()) + " ideals: " + join(lines, " ");
      return r;
    }
    if (v == "atoms") {
      Report r;
      r.json = Json::array();
      std::vector<std::string> parts;
      for (const auto& x : atoms(require_ground(span))) {
        parts.push_back(to_string(x));
        r.json.push_back(to_json(x));
      }
      r.text = "atoms: " + join(parts, " ");
      return r;
    }
    if (v == "show") {
      const RingElem u = elem_arg(a[0]);
      return {to_string(u), to_json(u), false};
    }
    if (v == "leq") {
      const RingElem x = elem_arg(a[0]);
      const RingElem y = elem_arg(a[1]);
      return bool_report(to_string(x) + " ⪯ " + to_string(y), at(span, [&] { return leq(x, y); }));
    }
    if (v == "chi") {
      const RingElem u = elem_arg(a[1]);
      const bool bit = at(span_of(a[0]), [&] { return char_eval(word_arg(a[0]), u); });
      return {"χ_" + to_string(u) + "(" + word_arg(a[0]) + ") = " + (bit ? "1" : "0"), Json(bit ? 1 : 0), false};
    }
    if (v == "quotient") {
      const RingElem m = elem_arg(a[0]);
      const QuotientMap q = at(span, [&] { return quotient(require_ground(span), m); });
      return {"P(X)/" + to_string(principal_ideal(m)) + " ≅ P(" + to_string(RingElem::one(q.target())) + ")",
              to_json(q), false};
    }
    if (v == "project") {
      const RingElem m = elem_arg(a[0]);
      const RingElem u = elem_arg(a[1]);
      const RingElem img = at(span, [&] { return project(quotient(require_ground(span), m), u); });
      return {to_string(u) + " ↦ " + to_string(img), to_json(img), false};
    }
    if (v == "table") {
      const RingElem u = elem_arg(a[0]);
      const FunctionTable t = to_function_table(u);
      std::vector<std::string> parts;
      for (auto b : t) parts.push_back(std::to_string(b));
      return {"χ_" + to_string(u) + " = [" + join(parts, ",") + "]", to_json(t), false};
    }
    if (v == "fromtable") {
      FunctionTable t;
      for (const auto& arg : a) {
        const auto bit = int_arg(arg);
        if (bit > 1) fail(ErrorKind::OutOfRange, span_of(arg), "function table entries must be 0 or 1");
        t.push_back(static_cast<std::uint8_t>(bit));
      }
      const RingElem u = at(span, [&] { return from_function_table(require_ground(span), t); });
      return {to_string(u), to_json(u), false};
    }
    fail(ErrorKind::NameError, span, "unknown command '" + v + "'");
  }

  static Report help() {
    std::string text = "statements:\n  ground a b c\n  let u = expr\n  ideal I = (expr, ...)\ncommands:";
    for (const auto& v : verbs()) {
      text += "\n  " + std::string(v.usage) + std::string(v.usage.size() < 34 ? 34 - v.usage.size() : 1, ' ') +
              std::string(v.summary);
    }
    Json j = Json::array();
    for (const auto& v : verbs()) j.push_back(std::string(v.name));
    return {text, j, false};
  }

  static Report intdemo(std::uint64_t m, const Span& span) {
    const auto factors = at(span, [&] { return integer_demo(m); });
    std::vector<std::string> parts;
    for (auto f : factors) parts.push_back("(" + std::to_string(f) + ")");
    return {"(" + std::to_string(m) + ") = " + join(parts, " ∩ "), Json(factors), false};
  }

  static Report stone(std::uint64_t n, const Span& span) {
    return at(span, [&] {
      const GenericBoolRing r(static_cast<std::size_t>(n));
      const StoneMap map = stone_iso(r);
      const StoneCheck check = verify_stone_iso(map);
      Report rep;
      std::vector<std::string> atom_txt, gens_txt;
      Json atoms_j = Json::array(), gens_j = Json::array();
      for (const auto& atom : map.atom_list()) {
        const BoolVec gen = maximal_principal_from_atom(r, atom);
        atom_txt.push_back(to_string(atom));
        gens_txt.push_back(to_string(gen));
        atoms_j.push_back(to_string(atom));
        gens_j.push_back(to_string(gen));
      }
      rep.text = "Z2^" + std::to_string(n) + " atoms: " + join(atom_txt, " ") +
                 "\n  maximal principal generators: " + join(gens_txt, " ") +
                 "\n  b -> {atoms below b}: homomorphism=" + yes_no(check.homomorphism) +
                 " bijective=" + yes_no(check.bijective) + " (" + std::to_string(check.pairs_checked) + " pairs)";
      rep.json = Json{{"dimension", n},
                      {"atoms", atoms_j},
                      {"maximal_generators", gens_j},
                      {"homomorphism", check.homomorphism},
                      {"bijective", check.bijective}};
      rep.verification_failed = !check.ok();
      return rep;
    });
  }

  Report verify() const {
    const VerifyReport vr = verify_all(VerifyOptions{s.options_.oracle});
    Report r;
    std::vector<std::string> lines;
    Json checks = Json::array();
    for (const auto& c : vr.checks) {
      std::string line = std::string(c.passed ? "[pass] " : "[FAIL] ") + c.name + " (" + std::to_string(c.cases) + " cases)";
      if (!c.passed) line += ": " + c.detail;
      lines.push_back(line);
      checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
    }
    lines.push_back(std::to_string(vr.passed()) + " passed, " + std::to_string(vr.failed()) + " failed");
    r.text = join(lines, "\n");
    r.json = Json{{"passed", vr.passed()}, {"failed", vr.failed()}, {"checks", checks}};
    r.verification_failed = !vr.ok();
    return r;
  }

  Report fincof(const Command& c, const Span&) {
    const auto& sub = word_arg(c.args[0]);
    const auto& a = c.args;
    if (sub == "witness") {
      std::vector<Point> pts;
      std::vector<std::string> ms;
      for (std::size_t i = 1; i < a.size(); ++i) {
        pts.push_back(int_arg(a[i]));
        ms.push_back("m_" + std::to_string(pts.back()));
      }
      const FinCofElem w = witness_nonzero(pts);
      const std::string meet = ms.empty() ? "R (empty intersection)" : join(ms, " ∩ ");
      return {to_string(w) + " is nonzero and lies in " + meet, to_json(w), false};
    }
    if (sub == "fin") {
      const FinCofElem e = fincof_expr(*std::get<ExprPtr>(a[1]));
      return bool_report(to_string(e) + " ∈ Fin", fc_in_fin(e));
    }
    const Point x = int_arg(a[1]);
    const FinCofElem e = fincof_expr(*std::get<ExprPtr>(a[2]));
    if (sub == "member") return bool_report(std::to_string(x) + " ∈ " + to_string(e), fc_member_point(x, e));
    return bool_report(to_string(e) + " ∈ m_" + std::to_string(x), fc_in_mx(x, e));
  }
};

Report Session::eval(const Statement& statement) {
  Impl impl(*this);
  Report r = at(statement.span, [&] { return impl.statement(statement); });
  impl.commit();
  return r;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return kExitParse;
    case ErrorKind::NameError: return kExitEval;
    case ErrorKind::VerificationFailed: return kExitVerify;
    case ErrorKind::DuplicateLabel: return 10;
    case ErrorKind::UnknownLabel: return 11;
    case ErrorKind::GroundMismatch: return 12;
    case ErrorKind::ZeroRing: return 13;
    case ErrorKind::OracleBoundExceeded: return 14;
    case ErrorKind::ImproperIdeal: return 15;
    case ErrorKind::UnverifiedDecomposition: return 16;
    case ErrorKind::NotPrime: return 17;
    case ErrorKind::HypothesisFailed: return 18;
    case ErrorKind::OutOfRange: return 19;
    case ErrorKind::LengthMismatch: return 20;
    case ErrorKind::NotAnAtom: return 21;
    case ErrorKind::LimitExceeded: return 22;
    case ErrorKind::TypeError: return 23;
  }
  return kExitEval;
}

std::string diagnostic(std::string_view source, const Span& span, const std::string& message) {
  std::string out = "error: " + message + "\n";
  std::size_t line_no = 1, begin = 0;
  while (line_no < span.line && begin < source.size()) {
    const auto nl = source.find('\n', begin);
    if (nl == std::string_view::npos) return out;
    begin = nl + 1;
    ++line_no;
  }
  const auto end = source.find('\n', begin);
  const std::string_view text = source.substr(begin, end == std::string_view::npos ? source.size() - begin : end - begin);
  const std::size_t width = span.end > span.column ? span.end - span.column : 1;
  out += "  " + std::string(text) + "\n  " + std::string(span.column - 1, ' ') + std::string(width, '^') + "\n";
  return out;
}

namespace {

void emit(std::ostream& out, const Report& r, const RunOptions& options) {
  if (options.json) {
    out << r.json.dump() << '\n';
  } else {
    out << r.text << '\n';
  }
}

}  // namespace

int run_script(Session& session, std::string_view source, std::ostream& out, std::ostream& err,
               RunOptions options) {
  std::vector<Statement> program;
  try {
    program = parse(source);
  } catch (const ParseError& e) {
    err << diagnostic(source, e.span(), e.what());
    return kExitParse;
  }
  for (const auto& st : program) {
    try {
      const Report r = session.eval(st);
      emit(out, r, options);
      if (r.verification_failed) return kExitVerify;
    } catch (const EvalError& e) {
      err << diagnostic(source, e.span(), e.what());
      return exit_code(e.kind());
    } catch (const std::logic_error& e) {
      err << diagnostic(source, st.span, std::string("internal check failed: ") + e.what());
      return kExitVerify;
    }
  }
  return kExitOk;
}

void run_repl(Session& session, std::istream& in, std::ostream& out, std::ostream& err, RunOptions options,
              bool prompt) {
  std::string line;
  while (true) {
    if (prompt) out << "boolring> " << std::flush;
    if (!std::getline(in, line)) break;
    try {
      for (const auto& st : parse(line)) emit(out, session.eval(st), options);
    } catch (const ParseError& e) {
      err << diagnostic(line, e.span(), e.what());
    } catch (const EvalError& e) {
      err << diagnostic(line, e.span(), e.what());
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
    }
  }
  if (prompt) out << '\n';
}

}  // namespace boolring::dsl
