#include "boolring/dsl/lexer.hpp"
#include "boolring/dsl/parser.hpp"
#include "boolring/dsl/printer.hpp"
#include "corpus.hpp"
#include "helpers.hpp"

using namespace boolring;
using namespace boolring::dsl;

namespace {

ParseError parse_error(std::string_view src) {
  try {
    parse(src);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << src;
  return ParseError({}, "");
}

}  // namespace

TEST(Parser, Precedence) {
  auto prog = parse("let u = {a,b} + {b,c} * {c}");
  ASSERT_EQ(prog.size(), 1U);
  const auto& let = std::get<LetElem>(prog[0].node);
  EXPECT_EQ(let.name, "u");
  const auto& top = std::get<Binary>(let.value->node);
  EXPECT_EQ(top.op, '+');
  EXPECT_EQ(std::get<SetLit>(top.lhs->node).labels, (std::vector<std::string>{"a", "b"}));
  const auto& rhs = std::get<Binary>(top.rhs->node);
  EXPECT_EQ(rhs.op, '*');
  EXPECT_EQ(std::get<SetLit>(rhs.rhs->node).labels, (std::vector<std::string>{"c"}));
}

TEST(Parser, ComplementBindsTightest) {
  auto prog = parse("let u = v * w'");
  const auto& top = std::get<Binary>(std::get<LetElem>(prog[0].node).value->node);
  EXPECT_EQ(top.op, '*');
  EXPECT_TRUE(std::holds_alternative<Complement>(top.rhs->node));
}

TEST(Parser, LeftAssociative) {
  auto prog = parse("let u = a + b + c");
  const auto& top = std::get<Binary>(std::get<LetElem>(prog[0].node).value->node);
  EXPECT_TRUE(std::holds_alternative<Binary>(top.lhs->node));
  EXPECT_TRUE(std::holds_alternative<NameRef>(top.rhs->node));
}

TEST(Parser, LetIdeal) {
  auto prog = parse("ideal I = ({a}, {b})");
  const auto& li = std::get<LetIdeal>(prog[0].node);
  EXPECT_EQ(li.name, "I");
  EXPECT_EQ(li.generators.size(), 2U);
}

TEST(Parser, Spans) {
  auto prog = parse("ground a b\nlet u = {a} + v");
  ASSERT_EQ(prog.size(), 2U);
  EXPECT_EQ(prog[1].span.line, 2U);
  const auto& e = std::get<Binary>(std::get<LetElem>(prog[1].node).value->node);
  EXPECT_EQ(e.lhs->span.column, 9U);
  EXPECT_EQ(e.lhs->span.end, 12U);
  EXPECT_EQ(e.rhs->span.column, 15U);
}

TEST(Parser, SeparatorsAndComments) {
  auto prog = parse("# header\nground a b ; let u = {a}  # trailing\n\n spectrum");
  EXPECT_EQ(prog.size(), 3U);
}

TEST(Parser, RoundTripCorpus) {
  ASSERT_GE(testing_support::corpus().size(), 50U);
  for (const auto& src : testing_support::corpus()) {
    auto first = parse(src);
    auto printed = print(first);
    auto second = parse(printed);
    EXPECT_TRUE(same_structure(first, second)) << src << " -> " << printed;
    EXPECT_EQ(print(second), printed) << src;
  }
  std::string whole;
  for (const auto& src : testing_support::corpus()) whole += src + "\n";
  auto program = parse(whole);
  EXPECT_EQ(program.size(), testing_support::corpus().size());
  EXPECT_TRUE(same_structure(program, parse(print(program))));
}

TEST(Printer, MinimalParentheses) {
  auto p = [](std::string_view s) { return print(parse(s)[0]); };
  EXPECT_EQ(p("let u = ({a,b}) + ({b,c} * {c})"), "let u = {a,b} + {b,c} * {c}");
  EXPECT_EQ(p("let u = ({a} + {b}) * {c}"), "let u = ({a} + {b}) * {c}");
  EXPECT_EQ(p("let u = {a} + ({b} + {c})"), "let u = {a} + ({b} + {c})");
  EXPECT_EQ(p("let u = ((v))'"), "let u = v'");
}

TEST(Diagnostics, UnterminatedSet) {
  auto e = parse_error("let u = {a,b");
  EXPECT_EQ(e.span().line, 1U);
  EXPECT_EQ(e.span().column, 13U);
  EXPECT_FALSE(e.expected().empty());
  EXPECT_NE(std::string(e.what()).find("1:13"), std::string::npos);
}

TEST(Diagnostics, Positioned) {
  struct Case {
    const char* src;
    std::size_t line, column;
  };
  const Case cases[] = {
      {"let = {a}", 1, 5},
      {"let u {a}", 1, 7},
      {"let u = ", 1, 9},
      {"let u = {a,}", 1, 12},
      {"let u = {a} +", 1, 14},
      {"let u = ({a}", 1, 13},
      {"ideal I = {a}", 1, 11},
      {"ideal I = ({a}", 1, 15},
      {"ground a\nfrobnicate", 2, 1},
      {"ground a\ndecompose", 2, 10},
      {"mode sideways", 1, 6},
      {"verify some", 1, 8},
      {"intdemo x", 1, 9},
      {"intdemo 99999999999999999999999", 1, 9},
      {"stone", 1, 6},
      {"fincof", 1, 7},
      {"fincof witness a", 1, 16},
      {"spectrum extra", 1, 10},
      {"let u = {a} $ {b}", 1, 13},
      {"let let = {a}", 1, 5},
  };
  for (const auto& c : cases) {
    auto e = parse_error(c.src);
    EXPECT_EQ(e.kind(), ErrorKind::ParseError) << c.src;
    EXPECT_EQ(e.span().line, c.line) << c.src;
    EXPECT_EQ(e.span().column, c.column) << c.src << ": " << e.what();
  }
}

TEST(Verbs, EveryVerbHasUsage) {
  for (const auto& v : verbs()) {
    EXPECT_FALSE(v.usage.empty()) << v.name;
    EXPECT_FALSE(v.summary.empty()) << v.name;
  }
  EXPECT_EQ(fincof_verbs().size(), 4U);
}
