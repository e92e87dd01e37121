#include <cctype>
#include <sstream>

#include "hott/surface.hpp"

namespace hott {

std::string_view tok_kind_name(TokKind k) {
  switch (k) {
    case TokKind::Ident: return "identifier";
    case TokKind::Def: return "'def'";
    case TokKind::AxiomAssert: return "'axiom-assert'";
    case TokKind::ConvAssert: return "'conv-assert'";
    case TokKind::LParen: return "'('";
    case TokKind::RParen: return "')'";
    case TokKind::LBrace: return "'{'";
    case TokKind::RBrace: return "'}'";
    case TokKind::Colon: return "':'";
    case TokKind::Assign: return "':='";
    case TokKind::ConvEq: return "'=='";
    case TokKind::Arrow: return "'->'";
    case TokKind::Star: return "'*'";
    case TokKind::Backslash: return "'\\'";
    case TokKind::Dot: return "'.'";
    case TokKind::Proj1: return "'.1'";
    case TokKind::Proj2: return "'.2'";
    case TokKind::Comma: return "','";
    case TokKind::Eq: return "'='";
    case TokKind::EqBrace: return "'={'";
    case TokKind::End: return "end of input";
  }
  return "?";
}

std::string format_diagnostic(const Diagnostic& d) {
  std::ostringstream out;
  out << d.file << ":" << d.span.line << ":" << d.span.col << ": "
      << (d.severity == Severity::Error ? "error" : "warning") << " [" << d.code << "] " << d.message;
  if (d.expected) out << "\n  expected: " << *d.expected;
  if (d.actual) out << "\n  actual:   " << *d.actual;
  return out.str();
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      if (pos_ >= src_.size()) {
        out.push_back(Token{TokKind::End, "", here(0)});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  Span here(int length) const { return Span{line_, col_, length, static_cast<int>(pos_)}; }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_blank() {
    for (;;) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '-' && peek(1) == '-') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token make(TokKind k, std::size_t len) {
    Token t{k, std::string(src_.substr(pos_, len)), here(static_cast<int>(len))};
    advance(len);
    return t;
  }

  Token next() {
    char c = peek();
    if (ident_start(c)) {
      std::size_t len = 0;
      while (ident_char(peek(len))) ++len;
      std::string_view word = src_.substr(pos_, len);
      if ((word == "axiom" || word == "conv") && src_.substr(pos_ + len, 7) == "-assert" &&
          !ident_char(peek(len + 7))) {
        return make(word == "axiom" ? TokKind::AxiomAssert : TokKind::ConvAssert, len + 7);
      }
      if (word == "def") return make(TokKind::Def, len);
      return make(TokKind::Ident, len);
    }
    switch (c) {
      case '(': return make(TokKind::LParen, 1);
      case ')': return make(TokKind::RParen, 1);
      case '{': return make(TokKind::LBrace, 1);
      case '}': return make(TokKind::RBrace, 1);
      case ',': return make(TokKind::Comma, 1);
      case '*': return make(TokKind::Star, 1);
      case '\\': return make(TokKind::Backslash, 1);
      case ':':
        if (peek(1) == '=') return make(TokKind::Assign, 2);
        return make(TokKind::Colon, 1);
      case '=':
        if (peek(1) == '=') return make(TokKind::ConvEq, 2);
        if (peek(1) == '{') return make(TokKind::EqBrace, 2);
        return make(TokKind::Eq, 1);
      case '-':
        if (peek(1) == '>') return make(TokKind::Arrow, 2);
        break;
      case '.':
        if ((peek(1) == '1' || peek(1) == '2') && !ident_char(peek(2)))
          return make(peek(1) == '1' ? TokKind::Proj1 : TokKind::Proj2, 2);
        return make(TokKind::Dot, 1);
      default: break;
    }
    int len = 1;
    auto uc = static_cast<unsigned char>(c);
    if (uc >= 0xC0) len = uc >= 0xF0 ? 4 : uc >= 0xE0 ? 3 : 2;
    Diagnostic d;
    d.span = here(len);
    d.code = "illegal-character";
    d.message = "illegal character '" + std::string(src_.substr(pos_, len)) + "'";
    throw KernelError(std::move(d));
  }
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace hott
