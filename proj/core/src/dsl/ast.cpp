#include "boolring/dsl/ast.hpp"

namespace boolring::dsl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool same_exprs(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same_structure(*a[i], *b[i])) return false;
  }
  return true;
}

bool same_arg(const Arg& a, const Arg& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      overloaded{
          [&](const ExprPtr& x) { return same_structure(*x, *std::get<ExprPtr>(b)); },
          [&](const IdealRef& x) {
            const auto& y = std::get<IdealRef>(b);
            if (x.ref.index() != y.ref.index()) return false;
            if (const auto* name = std::get_if<std::string>(&x.ref)) return *name == std::get<std::string>(y.ref);
            return same_exprs(std::get<std::vector<ExprPtr>>(x.ref), std::get<std::vector<ExprPtr>>(y.ref));
          },
          [&](const Integer& x) { return x.value == std::get<Integer>(b).value; },
          [&](const Word& x) { return x.text == std::get<Word>(b).text; },
      },
      a);
}

}  // namespace

bool same_structure(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const NameRef& x) { return x.name == std::get<NameRef>(b.node).name; },
          [&](const SetLit& x) { return x.labels == std::get<SetLit>(b.node).labels; },
          [&](const Constant& x) { return x.one == std::get<Constant>(b.node).one; },
          [&](const Binary& x) {
            const auto& y = std::get<Binary>(b.node);
            return x.op == y.op && same_structure(*x.lhs, *y.lhs) && same_structure(*x.rhs, *y.rhs);
          },
          [&](const Complement& x) {
            return same_structure(*x.operand, *std::get<Complement>(b.node).operand);
          },
      },
      a.node);
}

bool same_structure(const Statement& a, const Statement& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const GroundDecl& x) { return x.labels == std::get<GroundDecl>(b.node).labels; },
          [&](const LetElem& x) {
            const auto& y = std::get<LetElem>(b.node);
            return x.name == y.name && same_structure(*x.value, *y.value);
          },
          [&](const LetIdeal& x) {
            const auto& y = std::get<LetIdeal>(b.node);
            return x.name == y.name && same_exprs(x.generators, y.generators);
          },
          [&](const Command& x) {
            const auto& y = std::get<Command>(b.node);
            if (x.verb != y.verb || x.args.size() != y.args.size()) return false;
            for (std::size_t i = 0; i < x.args.size(); ++i) {
              if (!same_arg(x.args[i], y.args[i])) return false;
            }
            return true;
          },
      },
      a.node);
}

bool same_structure(const std::vector<Statement>& a, const std::vector<Statement>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same_structure(a[i], b[i])) return false;
  }
  return true;
}

Span span_of(const Arg& arg) {
  return std::visit(overloaded{
                        [](const ExprPtr& e) { return e->span; },
                        [](const IdealRef& r) { return r.span; },
                        [](const Integer& i) { return i.span; },
                        [](const Word& w) { return w.span; },
                    },
                    arg);
}

}  // namespace boolring::dsl
