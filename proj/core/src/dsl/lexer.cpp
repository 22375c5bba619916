#include "boolring/dsl/lexer.hpp"

#include <cctype>

namespace boolring::dsl {

namespace {

std::string format(const Span& span, const std::string& message, const std::vector<std::string>& expected) {
  std::string out = std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
    out += ")";
  }
  return out;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::string_view describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "name";
    case Tok::Int: return "integer";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Plus: return "'+'";
    case Tok::Star: return "'*'";
    case Tok::Quote: return "'''";
    case Tok::Equals: return "'='";
    case Tok::Separator: return "end of statement";
    case Tok::End: return "end of input";
  }
  return "token";
}

ParseError::ParseError(Span span, const std::string& message, std::vector<std::string> expected)
    : Error(ErrorKind::ParseError, format(span, message, expected)),
      span_(span),
      expected_(std::move(expected)) {}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;

  auto push = [&](Tok kind, std::size_t len) {
    out.push_back({kind, std::string(src.substr(i, len)), {line, col, col + len}});
    i += len;
    col += len;
  };

  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      push(Tok::Separator, 1);
      ++line;
      col = 1;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') {
        ++i;
        ++col;
      }
    } else if (ident_start(c)) {
      std::size_t len = 1;
      while (i + len < src.size() && ident_char(src[i + len])) ++len;
      push(Tok::Ident, len);
    } else if (digit(c)) {
      std::size_t len = 1;
      while (i + len < src.size() && digit(src[i + len])) ++len;
      push(Tok::Int, len);
    } else {
      Tok kind;
      switch (c) {
        case '{': kind = Tok::LBrace; break;
        case '}': kind = Tok::RBrace; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ',': kind = Tok::Comma; break;
        case '+': kind = Tok::Plus; break;
        case '*': kind = Tok::Star; break;
        case '\'': kind = Tok::Quote; break;
        case '=': kind = Tok::Equals; break;
        case ';': kind = Tok::Separator; break;
        default:
          throw ParseError({line, col, col + 1}, std::string("unexpected character '") + c + "'");
      }
      push(kind, 1);
    }
  }
  out.push_back({Tok::End, "", {line, col, col}});
  return out;
}

}  // namespace boolring::dsl
