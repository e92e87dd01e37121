#include <doctest.h>

#include "support.hpp"

using namespace hott;

namespace {

bool accepts(const std::string& source) { return test::codes_of(source).empty(); }

std::string code_of(const std::string& source) {
  auto codes = test::codes_of(source);
  REQUIRE(!codes.empty());
  return codes.front();
}

}  // namespace

TEST_CASE("small universe is included in the large one") {
  CHECK(accepts("def a : U1 := U0 -> U0\n"));
  CHECK(accepts("def f (X : U0) : U1 := X\n"));
  CHECK(accepts("def g (F : U1 -> U1) (X : U0) : U1 := F X\n"));
  CHECK(code_of("def b (X : U1) : U0 := X\n") == "universe-too-large");
  CHECK(code_of("def c : U0 := U0\n") == "universe-too-large");
}

TEST_CASE("large binder types are allowed in declarations") {
  CHECK(accepts("def k (F : U1 -> U1) (X : U1) : U1 := F X\n"));
}

TEST_CASE("eta for functions, pairs and the unit type") {
  CHECK(accepts("conv-assert fun_eta (f : Nat -> Nat) : Nat -> Nat := f == \\x. f x\n"));
  CHECK(accepts("conv-assert pair_eta (p : (n : Nat) * Nat) : (n : Nat) * Nat := p == (p.1, p.2)\n"));
  CHECK(accepts("conv-assert unit_eta (u v : Unit) : Unit := u == v\n"));
  CHECK(code_of("conv-assert no_nat_eta (m n : Nat) : Nat := m == n\n") == "conversion-failed");
}

TEST_CASE("conversion uses the delta rule for definitions") {
  CHECK(accepts("def one : Nat := suc zero\nconv-assert one_unfolds : Nat := one == suc zero\n"));
}

TEST_CASE("lambdas and pairs are check-only") {
  CHECK(code_of("def a : Nat := (\\x. x) zero\n") == "cannot-synthesize");
  CHECK(accepts("def a : (n : Nat) * Id Nat n n := (zero, refl zero)\n"));
}

TEST_CASE("dependent pairs check the second component at the substituted type") {
  CHECK(code_of("def a : (n : Nat) * Id Nat n zero := (suc zero, refl zero)\n") == "type-mismatch");
}

TEST_CASE("J checks against its motive at the endpoints") {
  CHECK(accepts("def sym (x y : Nat) (p : Id Nat x y) : Id Nat y x := J1 (\\x y p. Id Nat y x) (\\x. refl x) x y p\n"));
  CHECK(code_of("def bad (x y : Nat) (p : Id Nat x y) : Id Nat x x := J1 (\\x y p. Id Nat y x) (\\x. refl x) x y p\n") ==
        "type-mismatch");
}

TEST_CASE("level-0 eliminators need motives in the small universe") {
  CHECK(accepts("def two (n : Nat) : Nat := nind0 (\\k. Nat) n (\\k h. suc h) n\n"));
  CHECK(accepts("def fam (n : Nat) : U0 := nind1 (\\k. U0) Unit (\\k h. h) n\n"));
  CHECK(code_of("def fam (n : Nat) : U0 := nind0 (\\k. U0) Unit (\\k h. h) n\n") == "level-violation");
}

TEST_CASE("glue needs a relation witness of the right type") {
  std::string rel = "def R (a b : Nat) : U0 := Id Nat (suc a) b\n";
  CHECK(accepts(rel + "def g : Id (Coeq Nat R) (inj zero) (inj (suc zero)) := glue zero (suc zero) (refl (suc zero))\n"));
  CHECK(code_of(rel + "def g : Id (Coeq Nat R) (inj zero) (inj zero) := glue zero zero (refl (suc zero))\n") ==
        "type-mismatch");
}

TEST_CASE("a failed declaration poisons its dependents") {
  auto codes = test::codes_of("def a : Nat := tt\ndef b : Nat := a\ndef c : Nat := zero\n");
  CHECK(codes == std::vector<std::string>{"type-mismatch", "poisoned"});
}

TEST_CASE("redeclaring a name is rejected") {
  CHECK(code_of("def a : Nat := zero\ndef a : Nat := zero\n") == "duplicate-name");
  CHECK(code_of("conv-assert a : Nat := zero == zero\nconv-assert a : Nat := zero == zero\n") == "duplicate-name");
}

TEST_CASE("axiom dependencies are tracked transitively") {
  Checker c;
  test::load(c,
             "def fe (f g : Nat -> Nat) (h : (n : Nat) -> Id Nat (f n) (g n)) : Id (Nat -> Nat) f g :=\n"
             "  (funext Nat (\\n. Nat) f g).2.1 h\n"
             "def fe2 (f : Nat -> Nat) : Id (Nat -> Nat) f f := fe f f (\\n. refl (f n))\n"
             "def plain : Nat := zero\n");
  CHECK(c.axioms_used("fe2") == AxiomSet{Axiom::Funext});
  CHECK(c.axioms_used("plain").empty());
  CHECK(accepts("def plain : Nat := zero\naxiom-assert plain { }\n"));
}

TEST_CASE("axiom assertions compare against the recorded set") {
  std::string src =
      "def fe (f g : Nat -> Nat) (h : (n : Nat) -> Id Nat (f n) (g n)) : Id (Nat -> Nat) f g :=\n"
      "  (funext Nat (\\n. Nat) f g).2.1 h\n";
  CHECK(accepts(src + "axiom-assert fe { funext }\n"));
  CHECK(accepts(src + "axiom-assert fe { funext univalence }\n"));
  CHECK(code_of(src + "axiom-assert fe { univalence }\n") == "axiom-assert-failed");
}

TEST_CASE("level safety is checked on core terms") {
  Checker c;
  test::load(c, "def ok (n : Nat) : Nat := nind0 (\\k. Nat) n (\\k h. suc h) n\n");
  CHECK(level_safe(*c.signature().find("ok")->body));
  TermPtr bad = mk::node(Tag::NatElim, {mk::lam("k", mk::univ(0)), mk::node(Tag::Unit, {}),
                                        mk::lam("k", mk::lam("h", mk::var(0))), mk::node(Tag::Zero, {})},
                         0);
  CHECK(!level_safe(*bad));
}
