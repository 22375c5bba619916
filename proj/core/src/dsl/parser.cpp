#include "boolring/dsl/parser.hpp"

#include <algorithm>
#include <charconv>

namespace boolring::dsl {

const std::vector<VerbSpec>& verbs() {
  static const std::vector<VerbSpec> table = {
      {"decompose", "I", {}, "decompose I", "reduced primary decomposition into maximal ideals"},
      {"radical", "I", {}, "radical I", "radical of an ideal"},
      {"classify", "I", {}, "classify I", "proper / maximal / prime / primary"},
      {"unique", "I", {}, "unique I", "search every subfamily of the spectrum for reduced decompositions"},
      {"findfactor", "II*", {}, "findfactor P I1 I2 ...", "least Ik contained in a prime P containing their intersection"},
      {"sum", "II", {}, "sum I J", "I + J"},
      {"intersect", "II", {}, "intersect I J", "I ∩ J"},
      {"product", "II", {}, "product I J", "IJ"},
      {"member", "EI", {}, "member u I", "is u in I"},
      {"spectrum", "", {}, "spectrum", "the maximal ideals m_x"},
      {"ideals", "", {}, "ideals", "every ideal of P(X)"},
      {"atoms", "", {}, "atoms", "the singletons"},
      {"show", "E", {}, "show u", "evaluate an expression"},
      {"leq", "EE", {}, "leq u v", "u ⪯ v, i.e. uv = u"},
      {"chi", "WE", {}, "chi x u", "characteristic function of u at the point x"},
      {"quotient", "E", {}, "quotient A", "P(X)/P(A) ≅ P(X − A)"},
      {"project", "EE", {}, "project A u", "image of u in P(X − A)"},
      {"table", "E", {}, "table u", "u as a function X → Z2"},
      {"fromtable", "N*", {}, "fromtable b1 b2 ...", "the subset with characteristic function b"},
      {"stone", "N", {}, "stone n", "atoms of Z2^n and its identification with P(atoms)"},
      {"intdemo", "N", {}, "intdemo m", "primary decomposition of (m) in the integers"},
      {"mode", "W", {"powerset", "fincof"}, "mode powerset|fincof", "switch expression semantics"},
      {"fincof", "W", {"witness", "member", "fin", "mx"}, "fincof witness|member|fin|mx ...", "finite-cofinite algebra over the naturals"},
      {"verify", "W", {"all"}, "verify all", "run the exhaustive self-checks"},
      {"help", "", {}, "help", "list commands"},
  };
  return table;
}

const std::vector<VerbSpec>& fincof_verbs() {
  static const std::vector<VerbSpec> table = {
      {"witness", "N*", {}, "fincof witness x1 x2 ...", "nonzero element of m_x1 ∩ m_x2 ∩ ..."},
      {"member", "NE", {}, "fincof member x u", "is the point x in u"},
      {"fin", "E", {}, "fincof fin u", "is u finite"},
      {"mx", "NE", {}, "fincof mx x u", "is u in m_x"},
  };
  return table;
}

namespace {

const std::vector<std::string> kReserved = {"ground", "let", "ideal"};

std::vector<std::string> names_of(const std::vector<VerbSpec>& table) {
  std::vector<std::string> out;
  for (const auto& v : table) out.emplace_back(v.name);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  std::vector<Statement> program() {
    std::vector<Statement> out;
    while (true) {
      while (at(Tok::Separator)) ++pos_;
      if (at(Tok::End)) break;
      out.push_back(statement());
      if (!at(Tok::Separator) && !at(Tok::End)) fail("unexpected " + token_name(peek()), {"end of statement"});
    }
    return out;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_ident(std::string_view text) const { return at(Tok::Ident) && peek().text == text; }
  bool at_statement_end() const { return at(Tok::Separator) || at(Tok::End); }

  static std::string token_name(const Token& t) {
    if (t.kind == Tok::Ident || t.kind == Tok::Int) return "'" + t.text + "'";
    return std::string(describe(t.kind));
  }

  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
    throw ParseError(peek().span, message, std::move(expected));
  }

  const Token& expect(Tok kind) {
    if (!at(kind)) fail("unexpected " + token_name(peek()), {std::string(describe(kind))});
    return toks_[pos_++];
  }

  Span span_from(const Span& start) const {
    const Span& last = toks_[pos_ == 0 ? 0 : pos_ - 1].span;
    return {start.line, start.column, last.line == start.line ? last.end : start.column + 1};
  }

  std::string binding_name() {
    if (at(Tok::Ident) &&
        std::find(kReserved.begin(), kReserved.end(), peek().text) != kReserved.end()) {
      fail("'" + peek().text + "' is reserved", {"name"});
    }
    return expect(Tok::Ident).text;
  }

  Statement statement() {
    const Span start = peek().span;
    if (at_ident("ground")) {
      ++pos_;
      GroundDecl decl;
      while (at(Tok::Ident) || at(Tok::Int)) decl.labels.push_back(toks_[pos_++].text);
      if (!at_statement_end()) fail("unexpected " + token_name(peek()), {"label", "end of statement"});
      return {std::move(decl), span_from(start)};
    }
    if (at_ident("let")) {
      ++pos_;
      LetElem let;
      let.name = binding_name();
      expect(Tok::Equals);
      let.value = expr();
      return {std::move(let), span_from(start)};
    }
    if (at_ident("ideal")) {
      ++pos_;
      LetIdeal let;
      let.name = binding_name();
      expect(Tok::Equals);
      let.generators = expr_list();
      return {std::move(let), span_from(start)};
    }
    if (!at(Tok::Ident)) {
      auto expected = std::vector<std::string>{"ground", "let", "ideal"};
      auto vs = names_of(verbs());
      expected.insert(expected.end(), vs.begin(), vs.end());
      fail("unexpected " + token_name(peek()), expected);
    }
    return {command(), span_from(start)};
  }

  Command command() {
    const auto& table = verbs();
    auto it = std::find_if(table.begin(), table.end(), [&](const VerbSpec& v) { return v.name == peek().text; });
    if (it == table.end()) {
      auto expected = std::vector<std::string>{"ground", "let", "ideal"};
      auto vs = names_of(table);
      expected.insert(expected.end(), vs.begin(), vs.end());
      fail("unknown command '" + peek().text + "'", expected);
    }
    Command cmd;
    cmd.verb = toks_[pos_++].text;
    const bool nested = it->name == "fincof";
    args(*it, cmd.args, !nested);
    if (nested) {
      const auto& word = std::get<Word>(cmd.args.front()).text;
      const auto& sub = fincof_verbs();
      auto s = std::find_if(sub.begin(), sub.end(), [&](const VerbSpec& v) { return v.name == word; });
      args(*s, cmd.args, true);
    }
    return cmd;
  }

  void args(const VerbSpec& spec, std::vector<Arg>& out, bool check_end) {
    const auto sig = spec.signature;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      const bool repeat = i + 1 < sig.size() && sig[i + 1] == '*';
      if (repeat) {
        while (!at_statement_end()) out.push_back(arg(sig[i], spec, i == 0));
        ++i;
      } else {
        if (at_statement_end()) fail("missing argument to '" + std::string(spec.name) + "'", {expected_for(sig[i])});
        out.push_back(arg(sig[i], spec, i == 0));
      }
    }
    if (check_end && !at_statement_end()) {
      fail("too many arguments to '" + std::string(spec.name) + "'", {"end of statement"});
    }
  }

  static std::string expected_for(char kind) {
    switch (kind) {
      case 'E': return "expression";
      case 'I': return "ideal";
      case 'N': return "integer";
      default: return "word";
    }
  }

  Arg arg(char kind, const VerbSpec& spec, bool first) {
    switch (kind) {
      case 'E': return expr();
      case 'I': return ideal_ref();
      case 'N': return integer();
      default: {
        if (!at(Tok::Ident) && !at(Tok::Int)) fail("unexpected " + token_name(peek()), {"word"});
        if (first && !spec.choices.empty() &&
            std::find(spec.choices.begin(), spec.choices.end(), peek().text) == spec.choices.end()) {
          fail("unexpected " + token_name(peek()),
               std::vector<std::string>(spec.choices.begin(), spec.choices.end()));
        }
        const Token& t = toks_[pos_++];
        return Word{t.text, t.span};
      }
    }
  }

  Integer integer() {
    const Token& t = expect(Tok::Int);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{}) {
      --pos_;
      fail("integer out of range", {"integer"});
    }
    return {value, t.span};
  }

  IdealRef ideal_ref() {
    const Span start = peek().span;
    if (at_ident("ideal") && peek(1).kind == Tok::LParen) {
      ++pos_;
      auto gens = expr_list();
      return {std::move(gens), span_from(start)};
    }
    if (!at(Tok::Ident)) fail("unexpected " + token_name(peek()), {"ideal name", "ideal(...)"});
    return {toks_[pos_++].text, start};
  }

  std::vector<ExprPtr> expr_list() {
    expect(Tok::LParen);
    std::vector<ExprPtr> out;
    if (at(Tok::RParen)) {
      ++pos_;
      return out;
    }
    out.push_back(expr());
    while (at(Tok::Comma)) {
      ++pos_;
      out.push_back(expr());
    }
    if (!at(Tok::RParen)) fail("unexpected " + token_name(peek()), {"','", "')'"});
    ++pos_;
    return out;
  }

  static ExprPtr make(decltype(Expr::node) node, Span span) {
    return std::make_shared<const Expr>(Expr{std::move(node), span});
  }

  static Span join(const Span& a, const Span& b) {
    return {a.line, a.column, b.line == a.line ? b.end : a.end};
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (at(Tok::Plus)) {
      ++pos_;
      ExprPtr rhs = term();
      const Span s = join(lhs->span, rhs->span);
      lhs = make(Binary{'+', lhs, rhs}, s);
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (at(Tok::Star)) {
      ++pos_;
      ExprPtr rhs = factor();
      const Span s = join(lhs->span, rhs->span);
      lhs = make(Binary{'*', lhs, rhs}, s);
    }
    return lhs;
  }

  ExprPtr factor() {
    ExprPtr a = atom();
    if (at(Tok::Quote)) {
      const Span q = toks_[pos_++].span;
      a = make(Complement{a}, join(a->span, q));
    }
    return a;
  }

  ExprPtr atom() {
    const Span start = peek().span;
    switch (peek().kind) {
      case Tok::Ident:
        return make(NameRef{toks_[pos_++].text}, start);
      case Tok::Int:
        if (peek().text == "0" || peek().text == "1") {
          const bool one = peek().text == "1";
          ++pos_;
          return make(Constant{one}, start);
        }
        break;
      case Tok::LBrace: {
        ++pos_;
        SetLit lit;
        if (!at(Tok::RBrace)) {
          lit.labels.push_back(label());
          while (at(Tok::Comma)) {
            ++pos_;
            lit.labels.push_back(label());
          }
        }
        if (!at(Tok::RBrace)) fail("unexpected " + token_name(peek()), {"','", "'}'"});
        ++pos_;
        return make(std::move(lit), span_from(start));
      }
      case Tok::LParen: {
        ++pos_;
        ExprPtr inner = expr();
        expect(Tok::RParen);
        return inner;
      }
      default:
        break;
    }
    fail("unexpected " + token_name(peek()), {"name", "set literal", "0", "1", "'('"});
  }

  std::string label() {
    if (!at(Tok::Ident) && !at(Tok::Int)) fail("unexpected " + token_name(peek()), {"label"});
    return toks_[pos_++].text;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Statement> parse(std::string_view source) { return Parser(lex(source)).program(); }

}  // namespace boolring::dsl
