#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hott {

enum class Axiom : std::uint8_t { Funext, Univalence, CoeqGlueBeta };

std::string_view axiom_name(Axiom a);
std::optional<Axiom> axiom_from_name(std::string_view name);
using AxiomSet = std::set<Axiom>;

struct Term;
using TermPtr = std::shared_ptr<const Term>;
struct Value;
using ValuePtr = std::shared_ptr<const Value>;
struct ConstInfo;
using ConstPtr = std::shared_ptr<const ConstInfo>;

// One tag per core form. Children live in `kids`; the comment gives their
// order. Binders: Pi kid 1, Lam kid 0, Sigma kid 1 are under one binder.
enum class Tag : std::uint8_t {
  Var,       // num = de Bruijn index
  Univ,      // num = level (0 or 1)
  Pi,        // [domain, codomain]
  Lam,       // [body]
  App,       // [function, argument]
  Sigma,     // [first, second]
  Pair,      // [first, second]
  Fst,       // [pair]
  Snd,       // [pair]
  Id,        // [type, lhs, rhs]
  Refl,      // [point]
  J,         // num = level; [motive, base, lhs, rhs, path]
  Coeq,      // [carrier, relation]
  Inj,       // [element]
  Glue,      // [a, b, witness]
  CoeqInd,   // num = level; [motive, point case, glue case, scrutinee]
  Empty,
  EmptyElim, // num = level; [motive, scrutinee]
  Unit,
  Tt,
  UnitElim,  // [motive, base, scrutinee]
  Sum,       // [left, right]
  Inl,       // [value]
  Inr,       // [value]
  SumElim,   // num = level; [motive, left case, right case, scrutinee]
  Nat,
  Zero,
  Suc,       // [predecessor]
  NatElim,   // num = level; [motive, zero case, suc case, scrutinee]
  Axiom,     // axiom field
  Const,     // constant field
};

struct Term {
  Tag tag;
  int num = 0;
  std::string name;  // binder hint for Pi/Lam/Sigma
  std::vector<TermPtr> kids;
  hott::Axiom axiom = hott::Axiom::Funext;
  ConstPtr constant;
};

// Number of binders each child sits under.
int binders_at(Tag tag, std::size_t kid);
bool is_eliminator_with_level(Tag tag);

namespace mk {
TermPtr var(int index);
TermPtr univ(int level);
TermPtr pi(std::string name, TermPtr dom, TermPtr cod);
TermPtr lam(std::string name, TermPtr body);
TermPtr app(TermPtr fn, TermPtr arg);
TermPtr sigma(std::string name, TermPtr fst, TermPtr snd);
TermPtr node(Tag tag, std::vector<TermPtr> kids, int num = 0);
TermPtr axiom(Axiom a);
TermPtr constant(ConstPtr c);
}  // namespace mk

// A checked global declaration. The cached value of the body is filled on
// first use by the evaluator.
struct ConstInfo {
  std::string name;
  TermPtr type;
  TermPtr body;
  ValuePtr type_value;
  AxiomSet axioms;
  mutable ValuePtr body_value;
};

class Signature {
 public:
  const ConstInfo& add(ConstInfo info);
  ConstPtr find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }

  void poison(const std::string& name) { poisoned_.insert(name); }
  bool is_poisoned(std::string_view name) const;

  const std::vector<ConstPtr>& decls() const { return decls_; }
  std::size_t size() const { return decls_.size(); }

 private:
  std::vector<ConstPtr> decls_;
  std::unordered_map<std::string, std::size_t> index_;
  std::set<std::string, std::less<>> poisoned_;
};

bool alpha_equal(const Term& t, const Term& u);
inline bool alpha_equal(const TermPtr& t, const TermPtr& u) { return alpha_equal(*t, *u); }

// True iff de Bruijn index `index` (relative to t) occurs free in t.
bool occurs(const Term& t, int index);

// Axiom constants reachable from t: direct occurrences plus the recorded
// sets of referenced constants.
AxiomSet collect_axioms(const Term& t);

// Prints t in surface syntax. `scope` lists the names of enclosing binders,
// innermost last. `is_global` reports names that must not be reused for
// local binders.
std::string print_core(const Term& t, std::vector<std::string> scope = {},
                       const std::function<bool(std::string_view)>& is_global = {});

bool is_keyword(std::string_view word);

}  // namespace hott
