#include <doctest.h>

#include "support.hpp"

using namespace hott;

namespace {

std::string reprint(const std::string& s) { return print_surface(*parse_term(s)); }

Diagnostic first_error(const std::string& source) {
  ParseResult p = parse_module(source);
  REQUIRE(!p.diagnostics.empty());
  return p.diagnostics.front();
}

}  // namespace

TEST_CASE("terms print back in canonical form") {
  CHECK(reprint("\\x y. x") == "\\x. \\y. x");
  CHECK(reprint("(x : U0) -> x") == "(x : U0) -> x");
  CHECK(reprint("A -> B -> C") == "A -> B -> C");
  CHECK(reprint("(A -> B) -> C") == "(A -> B) -> C");
  CHECK(reprint("f a (g b)") == "f a (g b)");
  CHECK(reprint("p.1.2") == "p.1.2");
  CHECK(reprint("(a, b, c)") == "(a, (b, c))");
  CHECK(reprint("(x : A) * B x") == "(x : A) * B x");
}

TEST_CASE("application is left associative and arrows right associative") {
  CHECK(surface_equal(*parse_term("f a b"), *parse_term("(f a) b")));
  CHECK(surface_equal(*parse_term("A -> B -> C"), *parse_term("A -> (B -> C)")));
  CHECK(!surface_equal(*parse_term("A -> B -> C"), *parse_term("(A -> B) -> C")));
  CHECK(surface_equal(*parse_term("(a, b, c)"), *parse_term("(a, (b, c))")));
}

TEST_CASE("lambda bodies extend as far as possible") {
  CHECK(surface_equal(*parse_term("\\x. f x y"), *parse_term("\\x. (f x y)")));
  CHECK(surface_equal(*parse_term("(\\x. x, y)"), *parse_term("((\\x. x), y)")));
}

TEST_CASE("declarations of all three kinds parse") {
  ParseResult p = parse_module(
      "-- comment\n"
      "def id (A : U0) (x : A) : A := x\n"
      "conv-assert id_beta (n : Nat) : Nat := id Nat n == n\n"
      "axiom-assert id { }\n"
      "axiom-assert id { funext univalence }\n");
  REQUIRE(p.diagnostics.empty());
  REQUIRE(p.decls.size() == 4);
  CHECK(p.decls[0].kind == DeclKind::Definition);
  CHECK(p.decls[0].params.size() == 2);
  CHECK(p.decls[1].kind == DeclKind::ConvAssert);
  CHECK(p.decls[1].rhs != nullptr);
  CHECK(p.decls[2].kind == DeclKind::AxiomAssert);
  CHECK(p.decls[2].axioms.empty());
  CHECK(p.decls[3].axioms == std::vector<std::string>{"funext", "univalence"});
}

TEST_CASE("binder groups share one type") {
  ParseResult p = parse_module("def k (A B : U0) (a : A) (b : B) : A := a\n");
  REQUIRE(p.diagnostics.empty());
  REQUIRE(p.decls[0].params.size() == 4);
  CHECK(p.decls[0].params[0].name == "A");
  CHECK(p.decls[0].params[1].name == "B");
}

TEST_CASE("parse errors carry positions") {
  Diagnostic d = first_error("def x : Nat :=\n  (suc zero\n");
  CHECK(d.code == "parse-error");
  CHECK(d.span.line >= 2);

  Diagnostic e = first_error("def x : Nat := zero ~ zero\n");
  CHECK(e.code == "illegal-character");
  CHECK(e.span.line == 1);
  CHECK(e.span.col == 21);
}

TEST_CASE("parsing stops at the first error but keeps earlier declarations") {
  ParseResult p = parse_module("def a : Nat := zero\ndef b : Nat := )\ndef c : Nat := zero\n");
  CHECK(p.decls.size() == 1);
  CHECK(p.diagnostics.size() == 1);
}

TEST_CASE("keywords cannot be used as names") {
  CHECK(first_error("def refl : Nat := zero\n").code == "parse-error");
  CHECK(first_error("def x (J1 : U0) : U0 := J1\n").code == "parse-error");
}

TEST_CASE("unknown axiom names are rejected by the parser") {
  CHECK(first_error("def a : Nat := zero\naxiom-assert a { choice }\n").code == "parse-error");
}
