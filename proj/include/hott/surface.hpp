#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hott {

struct Span {
  int line = 1;
  int col = 1;
  int length = 0;
  int offset = 0;
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string file;
  Span span;
  std::string code;
  std::string message;
  std::optional<std::string> expected;
  std::optional<std::string> actual;
};

std::string format_diagnostic(const Diagnostic& d);

// Raised by the lexer, parser and checker; carries one diagnostic.
class KernelError : public std::runtime_error {
 public:
  explicit KernelError(Diagnostic d) : std::runtime_error(d.message), diag(std::move(d)) {}
  Diagnostic diag;
};

// ---------------------------------------------------------------------------
// Tokens

enum class TokKind {
  Ident, Def, AxiomAssert, ConvAssert,
  LParen, RParen, LBrace, RBrace,
  Colon, Assign, ConvEq, Arrow, Star, Backslash, Dot, Proj1, Proj2, Comma,
  Eq, EqBrace,
  End,
};

std::string_view tok_kind_name(TokKind k);

struct Token {
  TokKind kind;
  std::string text;
  Span span;
};

std::vector<Token> tokenize(std::string_view source);

// ---------------------------------------------------------------------------
// Surface terms

enum class SKind {
  Name,   // name
  Univ,   // level
  Pi,     // name; [domain, codomain]
  Sigma,  // name; [first, second]
  Lam,    // name; [annotation or null, body]
  App,    // [function, argument]
  Pair,   // [first, second]
  Fst,    // [pair]
  Snd,    // [pair]
  Ann,    // [term, type]
  Prim,   // name = keyword; args in core order
};

struct SurfaceTerm;
using SurfacePtr = std::shared_ptr<const SurfaceTerm>;

struct SurfaceTerm {
  SKind kind;
  std::string name;
  int level = 0;
  std::vector<SurfacePtr> args;
  Span span;
};

// Primitive keywords that take arguments, with their arity. Arity-zero
// keywords (U0, Nat, funext, ...) are included with arity 0.
std::optional<int> prim_arity(std::string_view keyword);

struct Binder {
  std::string name;
  SurfacePtr type;
  Span span;
};

enum class DeclKind { Definition, AxiomAssert, ConvAssert };

struct SurfaceDecl {
  DeclKind kind;
  std::string name;
  std::vector<Binder> params;
  SurfacePtr type;
  SurfacePtr body;  // definition body, or conversion lhs
  SurfacePtr rhs;   // conversion rhs
  std::vector<std::string> axioms;
  Span span;
};

struct ParseResult {
  std::vector<SurfaceDecl> decls;
  std::vector<Diagnostic> diagnostics;
};

// Parses a whole module. Parsing stops at the first error; declarations
// completed before it are returned.
ParseResult parse_module(std::string_view source, std::string file = "<input>");

// Parses a single term (used for kernel templates and tests).
SurfacePtr parse_term(std::string_view source);

std::string print_surface(const SurfaceTerm& t);
std::string print_decl(const SurfaceDecl& d);
std::string print_module(const std::vector<SurfaceDecl>& decls);

bool surface_equal(const SurfaceTerm& a, const SurfaceTerm& b);
bool surface_equal(const SurfaceDecl& a, const SurfaceDecl& b);

}  // namespace hott
