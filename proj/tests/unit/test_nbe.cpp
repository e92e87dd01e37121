#include <doctest.h>

#include "support.hpp"

using namespace hott;

namespace {

// Normal form of a closed term checked against a type, both in surface syntax.
std::string norm(Checker& c, const std::string& term, const std::string& type) {
  auto [ty, level] = c.infer_closed(*parse_term(type));
  (void)level;
  TermPtr t = c.check_closed(*parse_term(term), eval(Env(), ty));
  return c.print(quote(0, eval(Env(), t)));
}

}  // namespace

TEST_CASE("beta reduction under binders") {
  Checker c;
  CHECK(norm(c, "\\f x. ((\\y. f y y) : Nat -> Nat) x", "(Nat -> Nat -> Nat) -> Nat -> Nat") == "\\f x. f x x");
}

TEST_CASE("projections compute on pairs") {
  Checker c;
  test::load(c, "def p : (n : Nat) * Nat := (zero, suc zero)\n");
  CHECK(test::nf(c, "p") == "(zero, suc zero)");
  CHECK(norm(c, "p.2", "Nat") == "suc zero");
}

TEST_CASE("J computes on refl") {
  Checker c;
  CHECK(norm(c, "\\n. J1 (\\x y p. Nat) (\\x. suc x) n n (refl n)", "Nat -> Nat") == "\\n. suc n");
}

TEST_CASE("coequalizer induction computes on inj and is stuck on a variable") {
  Checker c;
  test::load_prelude(c);
  test::load(c,
             "def R (a b : Nat) : U0 := Id Nat (suc a) b\n"
             "def elim (f : Nat -> Nat)\n"
             "  (e : (a b : Nat) -> (s : R a b) -> pathover (Coeq Nat R) (\\z. Nat) (inj a) (inj b) (glue a b s) (f a) (f b))\n"
             "  (z : Coeq Nat R) : Nat := cind1 (\\z. Nat) f e z\n"
             "def on_point (f : Nat -> Nat)\n"
             "  (e : (a b : Nat) -> (s : R a b) -> pathover (Coeq Nat R) (\\z. Nat) (inj a) (inj b) (glue a b s) (f a) (f b))\n"
             "  (a : Nat) : Nat := elim f e (inj a)\n");
  CHECK(test::nf(c, "elim") == "\\f e z. cind1 (\\_. Nat) f e z");
  CHECK(test::nf(c, "on_point") == "\\f _ a. f a");
}

TEST_CASE("natural number recursion unfolds on numerals") {
  Checker c;
  test::load(c, "def add (m n : Nat) : Nat := nind0 (\\k. Nat) n (\\k h. suc h) m\n");
  CHECK(norm(c, "add (suc (suc zero)) (suc zero)", "Nat") == "suc (suc (suc zero))");
  CHECK(norm(c, "\\n. add zero n", "Nat -> Nat") == "\\n. n");
}

TEST_CASE("sum elimination computes on injections") {
  Checker c;
  CHECK(norm(c, "scase1 (\\s. Nat) (\\u. zero) (\\m. suc m) (inr zero : Sum Unit Nat)", "Nat") == "suc zero");
}

TEST_CASE("unit elimination computes on tt") {
  Checker c;
  CHECK(norm(c, "uind (\\u. Nat) zero tt", "Nat") == "zero");
}

TEST_CASE("quote without unfolding keeps constants folded") {
  Checker c;
  test::load(c, "def two : Nat := suc (suc zero)\ndef four : Nat := nind0 (\\k. Nat) two (\\k h. suc h) two\n");
  TermPtr four = mk::constant(c.signature().find("four"));
  CHECK(c.print(quote(0, eval(Env(), four), Unfold::No)) == "four");
  CHECK(c.print(quote(0, eval(Env(), four), Unfold::Yes)) == "suc (suc (suc (suc zero)))");
}
