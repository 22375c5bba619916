#include "boolring/dsl/printer.hpp"

namespace boolring::dsl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Binding strength: '+' < '*' < postfix ' < atoms.
int precedence(const Expr& e) {
  if (const auto* b = std::get_if<Binary>(&e.node)) return b->op == '+' ? 1 : 2;
  if (std::holds_alternative<Complement>(e.node)) return 3;
  return 4;
}

std::string wrap(const Expr& e, int min_prec) {
  std::string s = print(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string expr_list(const std::vector<ExprPtr>& es) {
  std::vector<std::string> parts;
  for (const auto& e : es) parts.push_back(print(*e));
  return "(" + join(parts, ", ") + ")";
}

std::string print_arg(const Arg& a) {
  return std::visit(overloaded{
                        [](const ExprPtr& e) { return print(*e); },
                        [](const IdealRef& r) {
                          if (const auto* name = std::get_if<std::string>(&r.ref)) return *name;
                          return "ideal" + expr_list(std::get<std::vector<ExprPtr>>(r.ref));
                        },
                        [](const Integer& i) { return std::to_string(i.value); },
                        [](const Word& w) { return w.text; },
                    },
                    a);
}

}  // namespace

std::string print(const Expr& e) {
  return std::visit(overloaded{
                        [](const NameRef& n) { return n.name; },
                        [](const SetLit& s) { return "{" + join(s.labels, ",") + "}"; },
                        [](const Constant& c) { return std::string(c.one ? "1" : "0"); },
                        [](const Binary& b) {
                          const int p = b.op == '+' ? 1 : 2;
                          // Left-associative: an equal-strength right operand needs parentheses.
                          return wrap(*b.lhs, p) + (b.op == '+' ? " + " : " * ") + wrap(*b.rhs, p + 1);
                        },
                        [](const Complement& c) { return wrap(*c.operand, 4) + "'"; },
                    },
                    e.node);
}

std::string print(const Statement& s) {
  return std::visit(overloaded{
                        [](const GroundDecl& g) {
                          return g.labels.empty() ? std::string("ground") : "ground " + join(g.labels, " ");
                        },
                        [](const LetElem& l) { return "let " + l.name + " = " + print(*l.value); },
                        [](const LetIdeal& l) { return "ideal " + l.name + " = " + expr_list(l.generators); },
                        [](const Command& c) {
                          std::string out = c.verb;
                          for (const auto& a : c.args) out += " " + print_arg(a);
                          return out;
                        },
                    },
                    s.node);
}

std::string print(const std::vector<Statement>& program) {
  std::string out;
  for (const auto& s : program) out += print(s) + "\n";
  return out;
}

}  // namespace boolring::dsl
