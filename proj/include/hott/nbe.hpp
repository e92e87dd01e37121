#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "hott/syntax.hpp"

namespace hott {

// Persistent environment: index 0 is the innermost binder.
struct EnvNode;
class Env {
 public:
  Env() = default;
  Env extend(ValuePtr v) const;
  const ValuePtr& lookup(int index) const;
  std::size_t size() const { return size_; }

 private:
  std::shared_ptr<const EnvNode> head_;
  std::size_t size_ = 0;
};

struct EnvNode {
  ValuePtr value;
  std::shared_ptr<const EnvNode> next;
};

struct Closure {
  Env env;
  TermPtr body;
};

enum class VTag : std::uint8_t {
  Univ, Pi, Lam, Sigma, Pair, Id, Refl, Coeq, Inj, Glue,
  Empty, Unit, Tt, Sum, Inl, Inr, Nat, Zero, Suc,
  Neutral,
};

// Stuck: a glue path under J. The glue value itself is kept in kids[0].
enum class HeadKind : std::uint8_t { Var, Axiom, Const, Stuck };

// An elimination waiting on a neutral scrutinee. `args` holds the
// eliminator's other operands in core order (scrutinee excluded).
enum class FrameTag : std::uint8_t { App, Fst, Snd, J, CoeqInd, EmptyElim, SumElim, NatElim };

struct Frame {
  FrameTag tag;
  int level = 0;
  std::vector<ValuePtr> args;
};

// Deferred unfolding of a defined constant applied to a spine.
class Thunk {
 public:
  explicit Thunk(std::function<ValuePtr()> compute) : compute_(std::move(compute)) {}
  const ValuePtr& get() const;

 private:
  mutable std::function<ValuePtr()> compute_;
  mutable ValuePtr cache_;
};

struct Value {
  VTag tag;
  int num = 0;  // universe level
  std::string name;
  std::vector<ValuePtr> kids;
  Closure closure;  // Pi codomain, Lam body, Sigma second component

  // Neutral fields.
  HeadKind head = HeadKind::Var;
  int head_level = 0;
  hott::Axiom head_axiom = hott::Axiom::Funext;
  ConstPtr head_const;
  std::vector<Frame> spine;
  std::shared_ptr<const Thunk> unfolded;  // set iff head == Const
};

ValuePtr eval(const Env& env, const TermPtr& t);
ValuePtr inst(const Closure& c, ValuePtr v);
ValuePtr vapply(const ValuePtr& f, const ValuePtr& a);
ValuePtr fst(const ValuePtr& p);
ValuePtr snd(const ValuePtr& p);
ValuePtr eliminate(const ValuePtr& scrutinee, const Frame& frame);

// Unfolds defined constants at the head until the value is not glued.
ValuePtr force(ValuePtr v);
bool is_glued(const Value& v);

ValuePtr vvar(int level);
ValuePtr vuniv(int level);

enum class Unfold : bool { No, Yes };

// Reads a value back at binder depth `depth`. With Unfold::No, applications
// of defined constants are kept folded.
TermPtr quote(int depth, const ValuePtr& v, Unfold unfold = Unfold::Yes);

// Definitional equality. `types` gives the type of each free variable by
// de Bruijn level; `depth` equals types.size().
class Conversion {
 public:
  explicit Conversion(std::vector<ValuePtr> types) : types_(std::move(types)) {}

  bool convertible(const ValuePtr& ty, const ValuePtr& v, const ValuePtr& w);
  bool is_subtype(const ValuePtr& sub, const ValuePtr& sup);

  // Type of a neutral value, read off its head and spine.
  std::optional<ValuePtr> neutral_type(const Value& v) { return conv_spine(v, v); }

  // Smallest n such that the type `ty` lives in U_n; 2 for types too large
  // for either universe. Empty if `ty` is not a type.
  std::optional<int> type_level(const ValuePtr& ty);

 private:
  std::vector<ValuePtr> types_;

  int depth() const { return static_cast<int>(types_.size()); }
  ValuePtr fresh(const ValuePtr& ty);
  void pop() { types_.pop_back(); }

  bool conv_canonical(const ValuePtr& ty, const ValuePtr& v, const ValuePtr& w);
  bool conv_types(const ValuePtr& a, const ValuePtr& b) { return convertible(vuniv(1), a, b); }
  // Compares two neutral spines; on success returns the type of the
  // neutral built so far.
  std::optional<ValuePtr> conv_spine(const Value& v, const Value& w);
  ValuePtr head_type(const Value& v) const;
  bool same_normal_form(const ValuePtr& v, const ValuePtr& w) const;
};

// The type of a level-annotated eliminator's operands, built from kernel
// templates. Used by both the checker and the conversion routine.
namespace frame_types {
ValuePtr j_motive(const ValuePtr& carrier, int level);
ValuePtr j_base(const ValuePtr& carrier, const ValuePtr& motive);
ValuePtr relation(const ValuePtr& carrier);
ValuePtr cind_motive(const ValuePtr& carrier, const ValuePtr& rel, int level);
ValuePtr cind_point(const ValuePtr& carrier, const ValuePtr& rel, const ValuePtr& motive);
ValuePtr cind_glue(const ValuePtr& carrier, const ValuePtr& rel, const ValuePtr& motive,
                   const ValuePtr& point_case);
ValuePtr empty_motive(int level);
ValuePtr unit_motive();
ValuePtr sum_motive(const ValuePtr& left, const ValuePtr& right, int level);
ValuePtr sum_left(const ValuePtr& left, const ValuePtr& right, const ValuePtr& motive);
ValuePtr sum_right(const ValuePtr& left, const ValuePtr& right, const ValuePtr& motive);
ValuePtr nat_motive(int level);
ValuePtr nat_suc(const ValuePtr& motive);
ValuePtr axiom_type(Axiom a);
}  // namespace frame_types

}  // namespace hott
