#include <set>
#include <sstream>

#include "boolring/dsl/parser.hpp"
#include "boolring/dsl/session.hpp"
#include "boolring/json.hpp"
#include "boolring/spectrum.hpp"
#include "helpers.hpp"

using namespace boolring;
using namespace boolring::dsl;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::string_view src, RunOptions options = {}, SessionOptions so = {}) {
  Session s(so);
  std::ostringstream out, err;
  int code = run_script(s, src, out, err, options);
  return {code, out.str(), err.str()};
}

Report eval1(Session& s, std::string_view src) {
  auto prog = parse(src);
  EXPECT_EQ(prog.size(), 1U);
  return s.eval(prog.at(0));
}

ErrorKind eval_kind(Session& s, std::string_view src) {
  try {
    eval1(s, src);
  } catch (const EvalError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error: " << src;
  return ErrorKind::VerificationFailed;
}

bool contains(const std::string& hay, std::string_view needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Session, DecomposeZero) {
  Session s;
  eval1(s, "ground a b c");
  auto r = eval1(s, "decompose ideal(0)");
  EXPECT_TRUE(contains(r.text, "m_a"));
  EXPECT_TRUE(contains(r.text, "m_b"));
  EXPECT_TRUE(contains(r.text, "m_c"));
  EXPECT_TRUE(contains(r.text, "reduced=true"));
  EXPECT_TRUE(r.json["reduced"].get<bool>());
}

TEST(Session, IntDemo) {
  Session s;
  EXPECT_EQ(eval1(s, "intdemo 360").text, "(360) = (8) ∩ (9) ∩ (5)");
}

TEST(Session, Member) {
  Session s;
  eval1(s, "ground a b c");
  eval1(s, "ideal I = ({b})");
  auto r = eval1(s, "member {a} I");
  EXPECT_FALSE(r.json.get<bool>());
  EXPECT_TRUE(eval1(s, "member {b} I").json.get<bool>());
}

TEST(Session, LetAndShow) {
  Session s;
  eval1(s, "ground a b c");
  EXPECT_EQ(eval1(s, "let u = {a,b} + {b,c} * {c}").text, "u = {a,b,c}");
  EXPECT_EQ(eval1(s, "let v = u' + 1").text, "v = {a,b,c}");
  EXPECT_EQ(eval1(s, "show (v + {a})'").text, "{a}");
}

TEST(Session, GroundRedeclarationClearsBindings) {
  Session s;
  eval1(s, "ground a b c");
  eval1(s, "let u = {a}");
  EXPECT_EQ(s.bindings().size(), 1U);
  eval1(s, "ground a b c");
  EXPECT_TRUE(s.bindings().empty());
  EXPECT_EQ(eval_kind(s, "show u"), ErrorKind::NameError);
}

TEST(Session, FailedStatementLeavesStateAlone) {
  Session s;
  eval1(s, "ground a b");
  eval1(s, "let u = {a}");
  EXPECT_EQ(eval_kind(s, "let u = {z}"), ErrorKind::UnknownLabel);
  EXPECT_EQ(eval1(s, "show u").text, "{a}");
  EXPECT_EQ(eval_kind(s, "ground a a"), ErrorKind::DuplicateLabel);
  ASSERT_TRUE(s.ground().has_value());
  EXPECT_EQ(s.ground()->size(), 2U);
}

TEST(Session, Errors) {
  Session s;
  EXPECT_EQ(eval_kind(s, "let u = {a}"), ErrorKind::NameError);
  eval1(s, "ground a b");
  EXPECT_EQ(eval_kind(s, "member {a} J"), ErrorKind::NameError);
  eval1(s, "let u = {a}");
  eval1(s, "ideal I = ({a})");
  EXPECT_EQ(eval_kind(s, "decompose u"), ErrorKind::TypeError);
  EXPECT_EQ(eval_kind(s, "show I"), ErrorKind::TypeError);
  EXPECT_EQ(eval_kind(s, "decompose ideal(1)"), ErrorKind::ImproperIdeal);
  EXPECT_EQ(eval_kind(s, "findfactor ideal(0) ideal(0)"), ErrorKind::NotPrime);
  EXPECT_EQ(eval_kind(s, "intdemo 1"), ErrorKind::OutOfRange);
  EXPECT_EQ(eval_kind(s, "fromtable 1"), ErrorKind::LengthMismatch);
  EXPECT_EQ(eval_kind(s, "stone 40"), ErrorKind::OracleBoundExceeded);
}

TEST(Session, ErrorSpans) {
  Session s;
  eval1(s, "ground a b");
  try {
    eval1(s, "let u = {a} + {q}");
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_EQ(e.span().column, 15U);
  }
}

TEST(Session, GroundMax) {
  Session s(SessionOptions{2});
  EXPECT_EQ(eval_kind(s, "ground a b c"), ErrorKind::LimitExceeded);
  eval1(s, "ground a b");
}

TEST(Session, OracleBoundIsConfigurable) {
  Session s(SessionOptions{64, OracleBound{3}});
  eval1(s, "ground a b c d");
  EXPECT_EQ(eval_kind(s, "unique ideal(0)"), ErrorKind::OracleBoundExceeded);
  Session t;
  eval1(t, "ground a b c d");
  EXPECT_EQ(eval1(t, "unique ideal(0)").json.size(), 1U);
}

TEST(Session, FinCofMode) {
  Session s;
  eval1(s, "mode fincof");
  EXPECT_EQ(s.mode(), Mode::FinCof);
  EXPECT_EQ(eval1(s, "let w = {1,2} + {2,3}").text, "w = F{1,3}");
  EXPECT_EQ(eval1(s, "let c = {1}' * {2}'").text, "c = C{1,2}");
  EXPECT_TRUE(eval1(s, "fincof fin w").json.get<bool>());
  EXPECT_FALSE(eval1(s, "fincof fin c").json.get<bool>());
  EXPECT_TRUE(eval1(s, "fincof member 3 c").json.get<bool>());
  EXPECT_FALSE(eval1(s, "fincof mx 3 c").json.get<bool>());
  auto w = eval1(s, "fincof witness 1 2");
  EXPECT_EQ(fincof_from_json(w.json), FinCofElem::finite({3}));
}

TEST(Session, EveryVerbRuns) {
  auto r = run(
      "ground a b c\n"
      "let u = {a,b}\n"
      "ideal I = ({a}, {b})\n"
      "ideal J = ({b,c})\n"
      "decompose I\nradical I\nclassify J\nunique I\n"
      "findfactor J J ideal({a,c})\n"
      "sum I J\nintersect I J\nproduct I J\n"
      "member u I\nspectrum\nideals\natoms\nshow u'\nleq {a} u\nchi a u\n"
      "quotient {a}\nproject {a} u\ntable u\nfromtable 1 1 0\n"
      "stone 3\nintdemo 360\nhelp\nverify all\n"
      "mode fincof\nfincof witness\nfincof member 1 {1}\nfincof fin 1\nfincof mx 0 {0}'\n"
      "mode powerset\nshow u\n");
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.err.empty()) << r.err;
  EXPECT_TRUE(contains(r.out, "0 failed"));
}

TEST(RunScript, ExitCodesAreDistinct) {
  const std::vector<ErrorKind> kinds{
      ErrorKind::ParseError,   ErrorKind::NameError,     ErrorKind::VerificationFailed,
      ErrorKind::DuplicateLabel, ErrorKind::UnknownLabel, ErrorKind::GroundMismatch,
      ErrorKind::ZeroRing,     ErrorKind::OracleBoundExceeded, ErrorKind::ImproperIdeal,
      ErrorKind::UnverifiedDecomposition, ErrorKind::NotPrime, ErrorKind::HypothesisFailed,
      ErrorKind::OutOfRange,   ErrorKind::LengthMismatch, ErrorKind::NotAnAtom,
      ErrorKind::LimitExceeded, ErrorKind::TypeError};
  std::set<int> codes;
  for (auto k : kinds) {
    EXPECT_NE(exit_code(k), 0);
    codes.insert(exit_code(k));
  }
  EXPECT_EQ(codes.size(), kinds.size());
  EXPECT_EQ(exit_code(ErrorKind::ParseError), 1);
  EXPECT_EQ(exit_code(ErrorKind::NameError), 2);
  EXPECT_EQ(exit_code(ErrorKind::VerificationFailed), 3);
}

TEST(RunScript, ExitCodesFromScripts) {
  EXPECT_EQ(run("ground a b\nshow {a}").code, 0);
  EXPECT_EQ(run("ground a b\nlet u = {a").code, 1);
  EXPECT_EQ(run("ground a b\nshow v").code, 2);
  EXPECT_EQ(run("ground a a").code, exit_code(ErrorKind::DuplicateLabel));
  EXPECT_EQ(run("ground a b\nshow {z}").code, exit_code(ErrorKind::UnknownLabel));
  EXPECT_EQ(run("ground\ndecompose ideal(0)").code, exit_code(ErrorKind::ZeroRing));
  EXPECT_EQ(run("ground a b\ndecompose ideal(1)").code, exit_code(ErrorKind::ImproperIdeal));
  EXPECT_EQ(run("ground a b c\nfindfactor ideal({a,b}) ideal({b,c}) ideal({a,c})").code,
            exit_code(ErrorKind::HypothesisFailed));
  EXPECT_EQ(run("intdemo 1").code, exit_code(ErrorKind::OutOfRange));
}

TEST(RunScript, StopsAtFirstErrorWithDiagnostic) {
  auto r = run("ground a b\nshow {a}\nshow {q}\nshow {b}");
  EXPECT_EQ(r.code, exit_code(ErrorKind::UnknownLabel));
  EXPECT_TRUE(contains(r.out, "{a}"));
  EXPECT_FALSE(contains(r.out, "{b}"));
  EXPECT_TRUE(contains(r.err, "3:6"));
  EXPECT_TRUE(contains(r.err, "show {q}"));
  EXPECT_TRUE(contains(r.err, "^"));
}

TEST(RunScript, ParseDiagnosticHasCaret) {
  auto r = run("let u = {a,b");
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.err, "1:13"));
  EXPECT_TRUE(contains(r.err, "\n  " + std::string(12, ' ') + "^"));
}

TEST(RunScript, JsonDecomposeIsByteStable) {
  const std::string src = "ground a b c d\ndecompose ideal({a,b})\n";
  auto a = run(src, RunOptions{true});
  auto b = run(src, RunOptions{true});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto lines = a.out.substr(a.out.find('\n') + 1);
  auto j = Json::parse(lines);
  auto d = decomposition_from_json(j);
  EXPECT_TRUE(d.verified() && d.reduced());
  ASSERT_EQ(d.factors().size(), 2U);
  EXPECT_EQ(d.factors()[0].point, "c");
}

TEST(RunScript, VerifyAllExitsZero) {
  auto r = run("verify all");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, " 0 failed"));
}

TEST(Repl, ContinuesAfterErrors) {
  Session s;
  std::istringstream in("ground a b\nshow {q}\nlet u = {a\nfrobnicate\nshow v\nshow {a}'\n");
  std::ostringstream out, err;
  run_repl(s, in, out, err, {}, false);
  EXPECT_TRUE(contains(out.str(), "{b}"));
  EXPECT_TRUE(contains(err.str(), "UnknownLabel"));
  EXPECT_TRUE(contains(err.str(), "1:11"));
  EXPECT_TRUE(contains(err.str(), "NameError"));
}
