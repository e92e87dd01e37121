#include <algorithm>
#include <array>
#include <sstream>

#include "hott/surface.hpp"
#include "hott/syntax.hpp"

namespace hott {

namespace {

struct PrimInfo {
  std::string_view name;
  int arity;
};

constexpr std::array kPrims = {
    PrimInfo{"Id", 3},       PrimInfo{"refl", 1},     PrimInfo{"J0", 5},      PrimInfo{"J1", 5},
    PrimInfo{"Coeq", 2},     PrimInfo{"inj", 1},      PrimInfo{"glue", 3},    PrimInfo{"cind0", 4},
    PrimInfo{"cind1", 4},    PrimInfo{"Empty", 0},    PrimInfo{"eabsurd0", 2}, PrimInfo{"eabsurd1", 2},
    PrimInfo{"Unit", 0},     PrimInfo{"tt", 0},       PrimInfo{"uind", 3},    PrimInfo{"Sum", 2},
    PrimInfo{"inl", 1},      PrimInfo{"inr", 1},      PrimInfo{"scase0", 4},  PrimInfo{"scase1", 4},
    PrimInfo{"Nat", 0},      PrimInfo{"zero", 0},     PrimInfo{"suc", 1},     PrimInfo{"nind0", 4},
    PrimInfo{"nind1", 4},    PrimInfo{"funext", 0},   PrimInfo{"univalence", 0},
    PrimInfo{"cgluebeta", 0}};

SurfacePtr make_term(SKind kind, Span span, std::vector<SurfacePtr> args = {}, std::string name = {},
                     int level = 0) {
  auto t = std::make_shared<SurfaceTerm>();
  t->kind = kind;
  t->span = span;
  t->args = std::move(args);
  t->name = std::move(name);
  t->level = level;
  return t;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  bool at_end() const { return peek().kind == TokKind::End; }

  SurfaceDecl decl() {
    const Token& start = peek();
    SurfaceDecl d;
    d.span = start.span;
    switch (start.kind) {
      case TokKind::Def: d.kind = DeclKind::Definition; break;
      case TokKind::ConvAssert: d.kind = DeclKind::ConvAssert; break;
      case TokKind::AxiomAssert: d.kind = DeclKind::AxiomAssert; break;
      default: fail(start, "expected a declaration ('def', 'conv-assert' or 'axiom-assert')");
    }
    next();
    d.name = binder_name(expect(TokKind::Ident, "a declaration name"));
    if (d.kind == DeclKind::AxiomAssert) {
      expect(TokKind::LBrace, "'{'");
      while (peek().kind != TokKind::RBrace) {
        const Token& ax = expect(TokKind::Ident, "an axiom name or '}'");
        if (!axiom_from_name(ax.text)) fail(ax, "'" + ax.text + "' is not an axiom name");
        d.axioms.push_back(ax.text);
        if (peek().kind == TokKind::Comma) next();
      }
      next();
      d.span = cover(start.span);
      return d;
    }
    while (peek().kind == TokKind::LParen) {
      auto group = binder_group();
      d.params.insert(d.params.end(), group.begin(), group.end());
    }
    expect(TokKind::Colon, "':'");
    d.type = term();
    expect(TokKind::Assign, "':='");
    d.body = term();
    if (d.kind == DeclKind::ConvAssert) {
      expect(TokKind::ConvEq, "'=='");
      d.rhs = term();
    }
    d.span = cover(start.span);
    return d;
  }

  SurfacePtr term() {
    if (peek().kind == TokKind::Backslash) return lambda();
    return equation();
  }

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    Diagnostic d;
    d.span = at.span;
    d.code = "parse-error";
    d.message = message;
    throw KernelError(std::move(d));
  }

  const Token& expect(TokKind k, const std::string& what) {
    if (peek().kind != k) fail(peek(), "expected " + what + ", found " + describe(peek()));
    return next();
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int last_end_ = 0;

  const Token& next() {
    const Token& t = toks_[std::min(pos_, toks_.size() - 1)];
    if (pos_ < toks_.size() - 1) ++pos_;
    last_end_ = t.span.offset + t.span.length;
    return t;
  }

  static std::string describe(const Token& t) {
    if (t.kind == TokKind::End) return "end of input";
    return "'" + t.text + "'";
  }

  Span cover(Span start) const {
    start.length = std::max(0, last_end_ - start.offset);
    return start;
  }

  std::string binder_name(const Token& t) const {
    if (is_keyword(t.text)) fail(t, "'" + t.text + "' is a keyword and cannot be used as a name");
    return t.text;
  }

  // '(' Ident+ ':' term ')'
  std::vector<Binder> binder_group() {
    expect(TokKind::LParen, "'('");
    std::vector<Binder> out;
    do {
      const Token& n = expect(TokKind::Ident, "a binder name");
      out.push_back(Binder{binder_name(n), nullptr, n.span});
    } while (peek().kind == TokKind::Ident);
    expect(TokKind::Colon, "':'");
    SurfacePtr ty = term();
    expect(TokKind::RParen, "')'");
    for (auto& b : out) b.type = ty;
    return out;
  }

  // Index just past the ')' matching the '(' at `i`, or 0.
  std::size_t skip_parens(std::size_t i) const {
    int depth = 0;
    for (; i < toks_.size(); ++i) {
      if (toks_[i].kind == TokKind::LParen) ++depth;
      if (toks_[i].kind == TokKind::RParen && --depth == 0) return i + 1;
      if (toks_[i].kind == TokKind::End) return 0;
    }
    return 0;
  }

  // Looks for a run of binder groups followed by '->' or '*'.
  std::optional<TokKind> telescope_ahead() const {
    std::size_t i = pos_;
    bool any = false;
    while (toks_[i].kind == TokKind::LParen) {
      std::size_t j = i + 1;
      if (toks_[j].kind != TokKind::Ident) return std::nullopt;
      while (toks_[j].kind == TokKind::Ident) ++j;
      if (toks_[j].kind != TokKind::Colon) return std::nullopt;
      i = skip_parens(i);
      if (i == 0) return std::nullopt;
      any = true;
    }
    if (!any) return std::nullopt;
    if (toks_[i].kind == TokKind::Arrow || toks_[i].kind == TokKind::Star) return toks_[i].kind;
    return std::nullopt;
  }

  SurfacePtr bind_telescope(SKind kind, const std::vector<Binder>& bs, SurfacePtr body, Span start) {
    for (auto it = bs.rbegin(); it != bs.rend(); ++it)
      body = make_term(kind, cover(it == bs.rend() - 1 ? start : it->span), {it->type, body}, it->name);
    return body;
  }

  SurfacePtr lambda() {
    Span start = next().span;
    std::vector<Binder> bs;
    while (peek().kind != TokKind::Dot) {
      if (peek().kind == TokKind::LParen) {
        auto group = binder_group();
        bs.insert(bs.end(), group.begin(), group.end());
      } else {
        const Token& n = expect(TokKind::Ident, "a binder name or '.'");
        bs.push_back(Binder{binder_name(n), nullptr, n.span});
      }
    }
    if (bs.empty()) fail(peek(), "a lambda needs at least one binder");
    next();
    SurfacePtr body = term();
    for (auto it = bs.rbegin(); it != bs.rend(); ++it)
      body = make_term(SKind::Lam, cover(it == bs.rend() - 1 ? start : it->span), {it->type, body},
                       it->name);
    return body;
  }

  SurfacePtr arrow() {
    Span start = peek().span;
    if (telescope_ahead() == TokKind::Arrow) {
      std::vector<Binder> bs;
      while (peek().kind == TokKind::LParen) {
        auto group = binder_group();
        bs.insert(bs.end(), group.begin(), group.end());
      }
      next();
      return bind_telescope(SKind::Pi, bs, arrow_rhs(), start);
    }
    SurfacePtr lhs = product();
    if (peek().kind != TokKind::Arrow) return lhs;
    next();
    return make_term(SKind::Pi, cover(start), {lhs, arrow_rhs()}, "_");
  }

  // The codomain extends as far as possible, so `A -> x ={T} y` reads
  // as `A -> (x ={T} y)`.
  SurfacePtr arrow_rhs() { return term(); }

  SurfacePtr product() {
    Span start = peek().span;
    if (telescope_ahead() == TokKind::Star) {
      std::vector<Binder> bs;
      while (peek().kind == TokKind::LParen) {
        auto group = binder_group();
        bs.insert(bs.end(), group.begin(), group.end());
      }
      next();
      return bind_telescope(SKind::Sigma, bs, product(), start);
    }
    SurfacePtr lhs = application();
    if (peek().kind != TokKind::Star) return lhs;
    next();
    return make_term(SKind::Sigma, cover(start), {lhs, product()}, "_");
  }

  SurfacePtr equation() {
    Span start = peek().span;
    SurfacePtr lhs = arrow();
    if (peek().kind == TokKind::Eq)
      fail(peek(), "an equation needs its ambient type written explicitly, as in 'a ={A} b'");
    if (peek().kind != TokKind::EqBrace) return lhs;
    next();
    SurfacePtr ty = term();
    expect(TokKind::RBrace, "'}'");
    SurfacePtr rhs = peek().kind == TokKind::Backslash ? lambda() : arrow();
    return make_term(SKind::Prim, cover(start), {ty, lhs, rhs}, "Id");
  }

  bool starts_atom(const Token& t) const {
    return t.kind == TokKind::Ident || t.kind == TokKind::LParen;
  }

  // An application argument: an atom with postfix projections, or a
  // trailing lambda.
  SurfacePtr argument() {
    if (peek().kind == TokKind::Backslash) return lambda();
    const Token& t = peek();
    if (t.kind == TokKind::Ident) {
      auto arity = prim_arity(t.text);
      if (arity && *arity > 0)
        fail(t, "'" + t.text + "' takes " + std::to_string(*arity) +
                    " arguments; put the application in parentheses");
    }
    return postfix();
  }

  SurfacePtr application() {
    Span start = peek().span;
    SurfacePtr head;
    const Token& t = peek();
    auto arity = t.kind == TokKind::Ident ? prim_arity(t.text) : std::nullopt;
    if (arity && *arity > 0) {
      const Token& kw = next();
      std::vector<SurfacePtr> args;
      for (int i = 0; i < *arity; ++i) {
        if (!starts_atom(peek()) && peek().kind != TokKind::Backslash)
          fail(peek(), "'" + kw.text + "' expects " + std::to_string(*arity) + " arguments, found " +
                           std::to_string(i));
        bool was_lambda = peek().kind == TokKind::Backslash;
        args.push_back(argument());
        if (was_lambda && i + 1 < *arity)
          fail(peek(), "'" + kw.text + "' expects " + std::to_string(*arity) + " arguments, found " +
                           std::to_string(i + 1));
      }
      head = make_term(SKind::Prim, cover(start), std::move(args), kw.text);
    } else {
      if (!starts_atom(peek()))
        fail(peek(), "expected a term, found " + describe(peek()));
      head = postfix();
    }
    while (starts_atom(peek()) || peek().kind == TokKind::Backslash) {
      bool was_lambda = peek().kind == TokKind::Backslash;
      SurfacePtr arg = argument();
      head = make_term(SKind::App, cover(start), {head, arg});
      if (was_lambda) break;
    }
    return head;
  }

  SurfacePtr postfix() {
    Span start = peek().span;
    SurfacePtr t = atom();
    for (;;) {
      if (peek().kind == TokKind::Proj1) {
        next();
        t = make_term(SKind::Fst, cover(start), {t});
      } else if (peek().kind == TokKind::Proj2) {
        next();
        t = make_term(SKind::Snd, cover(start), {t});
      } else {
        return t;
      }
    }
  }

  SurfacePtr atom() {
    const Token& t = peek();
    if (t.kind == TokKind::Ident) {
      next();
      if (t.text == "U0" || t.text == "U1")
        return make_term(SKind::Univ, t.span, {}, {}, t.text == "U0" ? 0 : 1);
      if (prim_arity(t.text)) return make_term(SKind::Prim, t.span, {}, t.text);
      return make_term(SKind::Name, t.span, {}, t.text);
    }
    if (t.kind != TokKind::LParen) fail(t, "expected a term, found " + describe(t));
    Span start = next().span;
    SurfacePtr inner = term();
    if (peek().kind == TokKind::Colon) {
      next();
      SurfacePtr ty = term();
      expect(TokKind::RParen, "')'");
      return make_term(SKind::Ann, cover(start), {inner, ty});
    }
    if (peek().kind == TokKind::Comma) {
      std::vector<SurfacePtr> parts{inner};
      while (peek().kind == TokKind::Comma) {
        next();
        parts.push_back(term());
      }
      expect(TokKind::RParen, "')'");
      SurfacePtr acc = parts.back();
      for (std::size_t i = parts.size() - 1; i-- > 0;)
        acc = make_term(SKind::Pair, cover(start), {parts[i], acc});
      return acc;
    }
    expect(TokKind::RParen, "')'");
    return inner;
  }
};

// Precedences: 0 lambda, 1 equation, 2 arrow, 3 product, 4 application, 5 atom.
class SurfacePrinter {
 public:
  std::string print(const SurfaceTerm& t, int prec) {
    int own = 0;
    std::string s = emit(t, own);
    return own < prec ? "(" + s + ")" : s;
  }

 private:
  std::string emit(const SurfaceTerm& t, int& own) {
    switch (t.kind) {
      case SKind::Name: own = 5; return t.name;
      case SKind::Univ: own = 5; return t.level == 0 ? "U0" : "U1";
      case SKind::Pi:
      case SKind::Sigma: {
        bool pi = t.kind == SKind::Pi;
        own = pi ? 2 : 3;
        std::string op = pi ? " -> " : " * ";
        if (t.name == "_") return print(*t.args[0], own + 1) + op + print(*t.args[1], own);
        return "(" + t.name + " : " + print(*t.args[0], 0) + ")" + op + print(*t.args[1], own);
      }
      case SKind::Lam: {
        own = 0;
        std::string b = t.args[0] ? "(" + t.name + " : " + print(*t.args[0], 0) + ")" : t.name;
        return "\\" + b + ". " + print(*t.args[1], 0);
      }
      case SKind::App:
        own = 4;
        return print(*t.args[0], 4) + " " + print(*t.args[1], 5);
      case SKind::Pair: own = 5; return "(" + print(*t.args[0], 0) + ", " + print(*t.args[1], 0) + ")";
      case SKind::Fst: own = 5; return print(*t.args[0], 5) + ".1";
      case SKind::Snd: own = 5; return print(*t.args[0], 5) + ".2";
      case SKind::Ann: own = 5; return "(" + print(*t.args[0], 0) + " : " + print(*t.args[1], 0) + ")";
      case SKind::Prim: {
        if (t.name == "Id" && t.args.size() == 3) {
          own = 1;
          return print(*t.args[1], 3) + " ={" + print(*t.args[0], 0) + "} " + print(*t.args[2], 2);
        }
        if (t.args.empty()) {
          own = 5;
          return t.name;
        }
        own = 4;
        std::string s = t.name;
        for (const auto& a : t.args) s += " " + print(*a, 5);
        return s;
      }
    }
    return "?";
  }
};

bool opt_equal(const SurfacePtr& a, const SurfacePtr& b) {
  if (!a || !b) return !a && !b;
  return surface_equal(*a, *b);
}

}  // namespace

std::optional<int> prim_arity(std::string_view keyword) {
  for (const auto& p : kPrims)
    if (p.name == keyword) return p.arity;
  return std::nullopt;
}

ParseResult parse_module(std::string_view source, std::string file) {
  ParseResult result;
  try {
    Parser p(tokenize(source));
    while (!p.at_end()) result.decls.push_back(p.decl());
  } catch (KernelError& e) {
    e.diag.file = file;
    result.diagnostics.push_back(e.diag);
  }
  return result;
}

SurfacePtr parse_term(std::string_view source) {
  Parser p(tokenize(source));
  SurfacePtr t = p.term();
  if (!p.at_end()) p.fail(p.peek(), "unexpected " + std::string(tok_kind_name(p.peek().kind)) +
                                        " after term");
  return t;
}

std::string print_surface(const SurfaceTerm& t) { return SurfacePrinter().print(t, 0); }

std::string print_decl(const SurfaceDecl& d) {
  std::ostringstream out;
  switch (d.kind) {
    case DeclKind::AxiomAssert: {
      out << "axiom-assert " << d.name << " {";
      for (const auto& a : d.axioms) out << " " << a;
      out << (d.axioms.empty() ? "}" : " }");
      return out.str();
    }
    case DeclKind::Definition: out << "def "; break;
    case DeclKind::ConvAssert: out << "conv-assert "; break;
  }
  out << d.name;
  for (const auto& b : d.params) out << " (" << b.name << " : " << print_surface(*b.type) << ")";
  out << " : " << print_surface(*d.type) << " :=\n  " << print_surface(*d.body);
  if (d.kind == DeclKind::ConvAssert) out << "\n  == " << print_surface(*d.rhs);
  return out.str();
}

std::string print_module(const std::vector<SurfaceDecl>& decls) {
  std::string out;
  for (const auto& d : decls) out += print_decl(d) + "\n\n";
  return out;
}

bool surface_equal(const SurfaceTerm& a, const SurfaceTerm& b) {
  if (a.kind != b.kind || a.name != b.name || a.level != b.level || a.args.size() != b.args.size())
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!opt_equal(a.args[i], b.args[i])) return false;
  return true;
}

bool surface_equal(const SurfaceDecl& a, const SurfaceDecl& b) {
  if (a.kind != b.kind || a.name != b.name || a.axioms != b.axioms ||
      a.params.size() != b.params.size())
    return false;
  for (std::size_t i = 0; i < a.params.size(); ++i)
    if (a.params[i].name != b.params[i].name || !opt_equal(a.params[i].type, b.params[i].type))
      return false;
  return opt_equal(a.type, b.type) && opt_equal(a.body, b.body) && opt_equal(a.rhs, b.rhs);
}

}  // namespace hott
