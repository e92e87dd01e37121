#include "hott/nbe.hpp"

#include <algorithm>
#include <stdexcept>

namespace hott {

Env Env::extend(ValuePtr v) const {
  Env e;
  e.head_ = std::make_shared<const EnvNode>(EnvNode{std::move(v), head_});
  e.size_ = size_ + 1;
  return e;
}

const ValuePtr& Env::lookup(int index) const {
  const EnvNode* node = head_.get();
  for (int i = 0; i < index; ++i) {
    if (!node) break;
    node = node->next.get();
  }
  if (!node) throw std::logic_error("environment lookup out of range");
  return node->value;
}

const ValuePtr& Thunk::get() const {
  if (!cache_) {
    cache_ = compute_();
    compute_ = nullptr;
  }
  return cache_;
}

namespace {

ValuePtr make(VTag tag, std::vector<ValuePtr> kids = {}) {
  auto v = std::make_shared<Value>();
  v->tag = tag;
  v->kids = std::move(kids);
  return v;
}

ValuePtr make_binder(VTag tag, std::string name, std::vector<ValuePtr> kids, Closure c) {
  auto v = std::make_shared<Value>();
  v->tag = tag;
  v->name = std::move(name);
  v->kids = std::move(kids);
  v->closure = std::move(c);
  return v;
}

ValuePtr vaxiom(Axiom a) {
  auto v = std::make_shared<Value>();
  v->tag = VTag::Neutral;
  v->head = HeadKind::Axiom;
  v->head_axiom = a;
  return v;
}

ValuePtr vconst(const ConstPtr& c) {
  auto v = std::make_shared<Value>();
  v->tag = VTag::Neutral;
  v->head = HeadKind::Const;
  v->head_const = c;
  v->unfolded = std::make_shared<const Thunk>([c]() -> ValuePtr {
    if (!c->body_value) c->body_value = eval(Env{}, c->body);
    return c->body_value;
  });
  return v;
}

ValuePtr head_value(const Value& v) {
  switch (v.head) {
    case HeadKind::Var: return vvar(v.head_level);
    case HeadKind::Axiom: return vaxiom(v.head_axiom);
    case HeadKind::Const: return vconst(v.head_const);
    case HeadKind::Stuck: return v.kids[0];
  }
  return nullptr;
}

ValuePtr stuck_on(const ValuePtr& point, const Frame& frame) {
  auto v = std::make_shared<Value>();
  v->tag = VTag::Neutral;
  v->head = HeadKind::Stuck;
  v->kids = {point};
  v->spine = {frame};
  return v;
}

ValuePtr push_frame(const ValuePtr& neutral, const Frame& frame) {
  auto v = std::make_shared<Value>(*neutral);
  v->spine.push_back(frame);
  if (neutral->unfolded) {
    auto prev = neutral->unfolded;
    v->unfolded = std::make_shared<const Thunk>([prev, frame]() { return eliminate(prev->get(), frame); });
  }
  return v;
}

[[noreturn]] void stuck(const char* what) {
  throw std::logic_error(std::string("ill-typed elimination: ") + what);
}

}  // namespace

ValuePtr vvar(int level) {
  auto v = std::make_shared<Value>();
  v->tag = VTag::Neutral;
  v->head = HeadKind::Var;
  v->head_level = level;
  return v;
}

ValuePtr vuniv(int level) {
  static const ValuePtr u0 = [] { auto v = make(VTag::Univ); std::const_pointer_cast<Value>(v)->num = 0; return v; }();
  static const ValuePtr u1 = [] { auto v = make(VTag::Univ); std::const_pointer_cast<Value>(v)->num = 1; return v; }();
  return level == 0 ? u0 : u1;
}

bool is_glued(const Value& v) { return v.tag == VTag::Neutral && v.head == HeadKind::Const; }

ValuePtr force(ValuePtr v) {
  while (is_glued(*v)) v = v->unfolded->get();
  return v;
}

ValuePtr inst(const Closure& c, ValuePtr v) { return eval(c.env.extend(std::move(v)), c.body); }

ValuePtr eliminate(const ValuePtr& s, const Frame& frame) {
  if (s->tag == VTag::Neutral) return push_frame(s, frame);
  const auto& a = frame.args;
  switch (frame.tag) {
    case FrameTag::App:
      if (s->tag == VTag::Lam) return inst(s->closure, a[0]);
      stuck("application");
    case FrameTag::Fst:
      if (s->tag == VTag::Pair) return s->kids[0];
      stuck("first projection");
    case FrameTag::Snd:
      if (s->tag == VTag::Pair) return s->kids[1];
      stuck("second projection");
    case FrameTag::J:
      if (s->tag == VTag::Refl) return vapply(a[1], s->kids[0]);
      if (s->tag == VTag::Glue) return stuck_on(s, frame);
      stuck("J");
    case FrameTag::CoeqInd:
      if (s->tag == VTag::Inj) return vapply(a[1], s->kids[0]);
      stuck("coequalizer induction");
    case FrameTag::EmptyElim: stuck("empty elimination");
    case FrameTag::SumElim:
      if (s->tag == VTag::Inl) return vapply(a[1], s->kids[0]);
      if (s->tag == VTag::Inr) return vapply(a[2], s->kids[0]);
      stuck("sum elimination");
    case FrameTag::NatElim:
      if (s->tag == VTag::Zero) return a[1];
      if (s->tag == VTag::Suc) return vapply(vapply(a[2], s->kids[0]), eliminate(s->kids[0], frame));
      stuck("natural number recursion");
  }
  stuck("unknown frame");
}

ValuePtr vapply(const ValuePtr& f, const ValuePtr& a) { return eliminate(f, Frame{FrameTag::App, 0, {a}}); }
ValuePtr fst(const ValuePtr& p) { return eliminate(p, Frame{FrameTag::Fst, 0, {}}); }
ValuePtr snd(const ValuePtr& p) { return eliminate(p, Frame{FrameTag::Snd, 0, {}}); }

ValuePtr eval(const Env& env, const TermPtr& t) {
  const auto& k = t->kids;
  auto ev = [&](std::size_t i) { return eval(env, k[i]); };
  switch (t->tag) {
    case Tag::Var: return env.lookup(t->num);
    case Tag::Univ: return vuniv(t->num);
    case Tag::Pi: return make_binder(VTag::Pi, t->name, {ev(0)}, Closure{env, k[1]});
    case Tag::Lam: return make_binder(VTag::Lam, t->name, {}, Closure{env, k[0]});
    case Tag::App: return vapply(ev(0), ev(1));
    case Tag::Sigma: return make_binder(VTag::Sigma, t->name, {ev(0)}, Closure{env, k[1]});
    case Tag::Pair: return make(VTag::Pair, {ev(0), ev(1)});
    case Tag::Fst: return fst(ev(0));
    case Tag::Snd: return snd(ev(0));
    case Tag::Id: return make(VTag::Id, {ev(0), ev(1), ev(2)});
    case Tag::Refl: return make(VTag::Refl, {ev(0)});
    case Tag::J: return eliminate(ev(4), Frame{FrameTag::J, t->num, {ev(0), ev(1), ev(2), ev(3)}});
    case Tag::Coeq: return make(VTag::Coeq, {ev(0), ev(1)});
    case Tag::Inj: return make(VTag::Inj, {ev(0)});
    case Tag::Glue: return make(VTag::Glue, {ev(0), ev(1), ev(2)});
    case Tag::CoeqInd: return eliminate(ev(3), Frame{FrameTag::CoeqInd, t->num, {ev(0), ev(1), ev(2)}});
    case Tag::Empty: return make(VTag::Empty);
    case Tag::EmptyElim: return eliminate(ev(1), Frame{FrameTag::EmptyElim, t->num, {ev(0)}});
    case Tag::Unit: return make(VTag::Unit);
    case Tag::Tt: return make(VTag::Tt);
    // Every inhabitant of Unit is definitionally tt, so the eliminator
    // always returns its base case.
    case Tag::UnitElim: return ev(1);
    case Tag::Sum: return make(VTag::Sum, {ev(0), ev(1)});
    case Tag::Inl: return make(VTag::Inl, {ev(0)});
    case Tag::Inr: return make(VTag::Inr, {ev(0)});
    case Tag::SumElim: return eliminate(ev(3), Frame{FrameTag::SumElim, t->num, {ev(0), ev(1), ev(2)}});
    case Tag::Nat: return make(VTag::Nat);
    case Tag::Zero: return make(VTag::Zero);
    case Tag::Suc: return make(VTag::Suc, {ev(0)});
    case Tag::NatElim: return eliminate(ev(3), Frame{FrameTag::NatElim, t->num, {ev(0), ev(1), ev(2)}});
    case Tag::Axiom: return vaxiom(t->axiom);
    case Tag::Const: return vconst(t->constant);
  }
  throw std::logic_error("eval: unknown tag");
}

TermPtr quote(int depth, const ValuePtr& value, Unfold unfold) {
  ValuePtr v = unfold == Unfold::Yes ? force(value) : value;
  auto q = [&](const ValuePtr& x) { return quote(depth, x, unfold); };
  auto under = [&](const Closure& c) { return quote(depth + 1, inst(c, vvar(depth)), unfold); };
  const auto& k = v->kids;
  switch (v->tag) {
    case VTag::Univ: return mk::univ(v->num);
    case VTag::Pi: return mk::pi(v->name, q(k[0]), under(v->closure));
    case VTag::Lam: return mk::lam(v->name, under(v->closure));
    case VTag::Sigma: return mk::sigma(v->name, q(k[0]), under(v->closure));
    case VTag::Pair: return mk::node(Tag::Pair, {q(k[0]), q(k[1])});
    case VTag::Id: return mk::node(Tag::Id, {q(k[0]), q(k[1]), q(k[2])});
    case VTag::Refl: return mk::node(Tag::Refl, {q(k[0])});
    case VTag::Coeq: return mk::node(Tag::Coeq, {q(k[0]), q(k[1])});
    case VTag::Inj: return mk::node(Tag::Inj, {q(k[0])});
    case VTag::Glue: return mk::node(Tag::Glue, {q(k[0]), q(k[1]), q(k[2])});
    case VTag::Empty: return mk::node(Tag::Empty, {});
    case VTag::Unit: return mk::node(Tag::Unit, {});
    case VTag::Tt: return mk::node(Tag::Tt, {});
    case VTag::Sum: return mk::node(Tag::Sum, {q(k[0]), q(k[1])});
    case VTag::Inl: return mk::node(Tag::Inl, {q(k[0])});
    case VTag::Inr: return mk::node(Tag::Inr, {q(k[0])});
    case VTag::Nat: return mk::node(Tag::Nat, {});
    case VTag::Zero: return mk::node(Tag::Zero, {});
    case VTag::Suc: return mk::node(Tag::Suc, {q(k[0])});
    case VTag::Neutral: break;
  }
  TermPtr acc;
  switch (v->head) {
    case HeadKind::Var: acc = mk::var(depth - v->head_level - 1); break;
    case HeadKind::Axiom: acc = mk::axiom(v->head_axiom); break;
    case HeadKind::Const: acc = mk::constant(v->head_const); break;
    case HeadKind::Stuck: acc = q(k[0]); break;
  }
  for (const auto& f : v->spine) {
    std::vector<TermPtr> args;
    for (const auto& a : f.args) args.push_back(q(a));
    switch (f.tag) {
      case FrameTag::App: acc = mk::app(acc, args[0]); break;
      case FrameTag::Fst: acc = mk::node(Tag::Fst, {acc}); break;
      case FrameTag::Snd: acc = mk::node(Tag::Snd, {acc}); break;
      case FrameTag::J: args.push_back(acc); acc = mk::node(Tag::J, args, f.level); break;
      case FrameTag::CoeqInd: args.push_back(acc); acc = mk::node(Tag::CoeqInd, args, f.level); break;
      case FrameTag::EmptyElim: args.push_back(acc); acc = mk::node(Tag::EmptyElim, args, f.level); break;
      case FrameTag::SumElim: args.push_back(acc); acc = mk::node(Tag::SumElim, args, f.level); break;
      case FrameTag::NatElim: args.push_back(acc); acc = mk::node(Tag::NatElim, args, f.level); break;
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Conversion

ValuePtr Conversion::fresh(const ValuePtr& ty) {
  types_.push_back(ty);
  return vvar(depth() - 1);
}

ValuePtr Conversion::head_type(const Value& v) const {
  switch (v.head) {
    case HeadKind::Var: return types_.at(static_cast<std::size_t>(v.head_level));
    case HeadKind::Axiom: return frame_types::axiom_type(v.head_axiom);
    case HeadKind::Const: return v.head_const->type_value;
    case HeadKind::Stuck: return nullptr;
  }
  return nullptr;
}

// Comparison without a type, by normal forms. Used only where the type is
// not recoverable, which misses eta but never equates distinct terms.
bool Conversion::same_normal_form(const ValuePtr& v, const ValuePtr& w) const {
  if (v.get() == w.get()) return true;
  return alpha_equal(quote(depth(), v), quote(depth(), w));
}

static bool same_glued_head(const Value& v, const Value& w) {
  return is_glued(v) && is_glued(w) && v.head_const->name == w.head_const->name &&
         v.spine.size() == w.spine.size();
}

bool Conversion::convertible(const ValuePtr& ty, const ValuePtr& v, const ValuePtr& w) {
  if (v.get() == w.get()) return true;
  if (same_glued_head(*v, *w) && conv_spine(*v, *w)) return true;
  ValuePtr t = force(ty);
  switch (t->tag) {
    case VTag::Pi: {
      ValuePtr x = fresh(t->kids[0]);
      bool ok = convertible(inst(t->closure, x), vapply(v, x), vapply(w, x));
      pop();
      return ok;
    }
    case VTag::Sigma: {
      ValuePtr a = fst(v);
      if (!convertible(t->kids[0], a, fst(w))) return false;
      return convertible(inst(t->closure, a), snd(v), snd(w));
    }
    case VTag::Unit: return true;
    default: return conv_canonical(t, force(v), force(w));
  }
}

bool Conversion::conv_canonical(const ValuePtr& ty, const ValuePtr& v, const ValuePtr& w) {
  if (v->tag == VTag::Neutral && w->tag == VTag::Neutral) return conv_spine(*v, *w).has_value();
  if (v->tag != w->tag) return false;
  const auto& a = v->kids;
  const auto& b = w->kids;
  switch (v->tag) {
    case VTag::Univ: return v->num == w->num;
    case VTag::Pi:
    case VTag::Sigma: {
      if (!conv_types(a[0], b[0])) return false;
      ValuePtr x = fresh(a[0]);
      bool ok = conv_types(inst(v->closure, x), inst(w->closure, x));
      pop();
      return ok;
    }
    case VTag::Id:
      return conv_types(a[0], b[0]) && convertible(a[0], a[1], b[1]) && convertible(a[0], a[2], b[2]);
    case VTag::Refl: {
      ValuePtr t = force(ty);
      if (t->tag != VTag::Id) return false;
      return convertible(t->kids[0], a[0], b[0]);
    }
    case VTag::Coeq:
      return conv_types(a[0], b[0]) && convertible(frame_types::relation(a[0]), a[1], b[1]);
    case VTag::Inj: {
      ValuePtr t = force(ty);
      if (t->tag != VTag::Coeq) return false;
      return convertible(t->kids[0], a[0], b[0]);
    }
    case VTag::Glue: {
      ValuePtr t = force(ty);
      if (t->tag != VTag::Id) return false;
      ValuePtr c = force(t->kids[0]);
      if (c->tag != VTag::Coeq) return false;
      const ValuePtr& carrier = c->kids[0];
      return convertible(carrier, a[0], b[0]) && convertible(carrier, a[1], b[1]) &&
             convertible(vapply(vapply(c->kids[1], a[0]), a[1]), a[2], b[2]);
    }
    case VTag::Sum: return conv_types(a[0], b[0]) && conv_types(a[1], b[1]);
    case VTag::Inl:
    case VTag::Inr: {
      ValuePtr t = force(ty);
      if (t->tag != VTag::Sum) return false;
      return convertible(t->kids[v->tag == VTag::Inl ? 0 : 1], a[0], b[0]);
    }
    case VTag::Suc: return convertible(ty, a[0], b[0]);
    case VTag::Empty:
    case VTag::Unit:
    case VTag::Tt:
    case VTag::Nat:
    case VTag::Zero: return true;
    case VTag::Lam:
    case VTag::Pair:
    case VTag::Neutral: return false;
  }
  return false;
}

std::optional<ValuePtr> Conversion::conv_spine(const Value& v, const Value& w) {
  if (v.head != w.head || v.spine.size() != w.spine.size()) return std::nullopt;
  switch (v.head) {
    case HeadKind::Var:
      if (v.head_level != w.head_level) return std::nullopt;
      break;
    case HeadKind::Axiom:
      if (v.head_axiom != w.head_axiom) return std::nullopt;
      break;
    case HeadKind::Const:
      if (v.head_const->name != w.head_const->name) return std::nullopt;
      break;
    case HeadKind::Stuck:
      if (!same_normal_form(v.kids[0], w.kids[0])) return std::nullopt;
      break;
  }
  ValuePtr cur = head_value(v);
  ValuePtr ty = head_type(v);
  for (std::size_t i = 0; i < v.spine.size(); ++i) {
    const Frame& f = v.spine[i];
    const Frame& g = w.spine[i];
    if (f.tag != g.tag) return std::nullopt;
    ValuePtr t = ty ? force(ty) : nullptr;
    const auto& x = f.args;
    const auto& y = g.args;
    switch (f.tag) {
      case FrameTag::App:
        if (t->tag != VTag::Pi || !convertible(t->kids[0], x[0], y[0])) return std::nullopt;
        ty = inst(t->closure, x[0]);
        break;
      case FrameTag::Fst:
        if (t->tag != VTag::Sigma) return std::nullopt;
        ty = t->kids[0];
        break;
      case FrameTag::Snd:
        if (t->tag != VTag::Sigma) return std::nullopt;
        ty = inst(t->closure, fst(cur));
        break;
      case FrameTag::J: {
        if (!ty) {
          for (std::size_t j = 0; j < x.size(); ++j)
            if (!same_normal_form(x[j], y[j])) return std::nullopt;
          ty = vapply(vapply(vapply(x[0], x[2]), x[3]), cur);
          break;
        }
        if (t->tag != VTag::Id) return std::nullopt;
        const ValuePtr& carrier = t->kids[0];
        if (!convertible(frame_types::j_motive(carrier, 1), x[0], y[0]) ||
            !convertible(frame_types::j_base(carrier, x[0]), x[1], y[1]) ||
            !convertible(carrier, x[2], y[2]) || !convertible(carrier, x[3], y[3]))
          return std::nullopt;
        ty = vapply(vapply(vapply(x[0], x[2]), x[3]), cur);
        break;
      }
      case FrameTag::CoeqInd: {
        if (t->tag != VTag::Coeq) return std::nullopt;
        const ValuePtr& carrier = t->kids[0];
        const ValuePtr& rel = t->kids[1];
        if (!convertible(frame_types::cind_motive(carrier, rel, 1), x[0], y[0]) ||
            !convertible(frame_types::cind_point(carrier, rel, x[0]), x[1], y[1]) ||
            !convertible(frame_types::cind_glue(carrier, rel, x[0], x[1]), x[2], y[2]))
          return std::nullopt;
        ty = vapply(x[0], cur);
        break;
      }
      case FrameTag::EmptyElim:
        if (!convertible(frame_types::empty_motive(1), x[0], y[0])) return std::nullopt;
        ty = vapply(x[0], cur);
        break;
      case FrameTag::SumElim: {
        if (t->tag != VTag::Sum) return std::nullopt;
        const ValuePtr& l = t->kids[0];
        const ValuePtr& r = t->kids[1];
        if (!convertible(frame_types::sum_motive(l, r, 1), x[0], y[0]) ||
            !convertible(frame_types::sum_left(l, r, x[0]), x[1], y[1]) ||
            !convertible(frame_types::sum_right(l, r, x[0]), x[2], y[2]))
          return std::nullopt;
        ty = vapply(x[0], cur);
        break;
      }
      case FrameTag::NatElim: {
        ValuePtr zero = make(VTag::Zero);
        if (!convertible(frame_types::nat_motive(1), x[0], y[0]) ||
            !convertible(vapply(x[0], zero), x[1], y[1]) ||
            !convertible(frame_types::nat_suc(x[0]), x[2], y[2]))
          return std::nullopt;
        ty = vapply(x[0], cur);
        break;
      }
    }
    cur = eliminate(cur, f);
  }
  return ty;
}

bool Conversion::is_subtype(const ValuePtr& sub, const ValuePtr& sup) {
  if (sub.get() == sup.get()) return true;
  if (same_glued_head(*sub, *sup) && conv_spine(*sub, *sup)) return true;
  ValuePtr s = force(sub);
  ValuePtr p = force(sup);
  if (s->tag == VTag::Univ && p->tag == VTag::Univ) return s->num <= p->num;
  if (s->tag == VTag::Pi && p->tag == VTag::Pi) {
    if (!conv_types(s->kids[0], p->kids[0])) return false;
    ValuePtr x = fresh(p->kids[0]);
    bool ok = is_subtype(inst(s->closure, x), inst(p->closure, x));
    pop();
    return ok;
  }
  if (s->tag == VTag::Sigma && p->tag == VTag::Sigma) {
    if (!is_subtype(s->kids[0], p->kids[0])) return false;
    ValuePtr x = fresh(s->kids[0]);
    bool ok = is_subtype(inst(s->closure, x), inst(p->closure, x));
    pop();
    return ok;
  }
  return convertible(vuniv(1), s, p);
}

std::optional<int> Conversion::type_level(const ValuePtr& ty) {
  ValuePtr t = force(ty);
  switch (t->tag) {
    case VTag::Univ: return t->num + 1;
    case VTag::Pi:
    case VTag::Sigma: {
      auto dom = type_level(t->kids[0]);
      if (!dom) return std::nullopt;
      ValuePtr x = fresh(t->kids[0]);
      auto cod = type_level(inst(t->closure, x));
      pop();
      if (!cod) return std::nullopt;
      return std::max(*dom, *cod);
    }
    case VTag::Id: return type_level(t->kids[0]);
    case VTag::Coeq:
    case VTag::Empty:
    case VTag::Unit:
    case VTag::Sum:
    case VTag::Nat: return 0;
    case VTag::Neutral: {
      auto nt = neutral_type(*t);
      if (!nt) return std::nullopt;
      ValuePtr u = force(*nt);
      if (u->tag != VTag::Univ) return std::nullopt;
      return u->num;
    }
    default: return std::nullopt;
  }
}

}  // namespace hott
