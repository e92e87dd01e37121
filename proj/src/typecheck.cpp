#include "hott/typecheck.hpp"

#include <algorithm>

#include "hott/builtins.hpp"

namespace hott {

namespace {

struct Ctx {
  std::vector<std::string> names;
  std::vector<ValuePtr> types;
  Env env;

  int depth() const { return static_cast<int>(names.size()); }

  Ctx bind(const std::string& name, const ValuePtr& type) const {
    Ctx c = *this;
    c.names.push_back(name);
    c.types.push_back(type);
    c.env = env.extend(vvar(depth()));
    return c;
  }
};

[[noreturn]] void fail(const Span& span, std::string code, std::string message,
                       std::optional<std::string> expected = std::nullopt,
                       std::optional<std::string> actual = std::nullopt) {
  Diagnostic d;
  d.span = span;
  d.code = std::move(code);
  d.message = std::move(message);
  d.expected = std::move(expected);
  d.actual = std::move(actual);
  throw KernelError(std::move(d));
}

ValuePtr apply_all(ValuePtr f, std::initializer_list<ValuePtr> args) {
  for (const auto& a : args) f = vapply(f, a);
  return f;
}

class Elaborator {
 public:
  explicit Elaborator(const Signature& sig) : sig_(sig) {}

  std::string show(const Ctx& ctx, const ValuePtr& v) const {
    return print_core(*quote(ctx.depth(), v, Unfold::No), ctx.names,
                      [this](std::string_view n) { return sig_.contains(n); });
  }

  ValuePtr eval_in(const Ctx& ctx, const TermPtr& t) const { return eval(ctx.env, t); }

  // Elaborates a type, returning it with its universe level (2 when it
  // lives in no universe).
  std::pair<TermPtr, int> elab_type(const Ctx& ctx, const SurfaceTerm& s) {
    switch (s.kind) {
      case SKind::Univ: return {mk::univ(s.level), s.level + 1};
      case SKind::Pi:
      case SKind::Sigma: {
        auto [dom, l1] = elab_type(ctx, *s.args[0]);
        auto [cod, l2] = elab_type(ctx.bind(s.name, eval_in(ctx, dom)), *s.args[1]);
        TermPtr t = s.kind == SKind::Pi ? mk::pi(s.name, dom, cod) : mk::sigma(s.name, dom, cod);
        return {t, std::max(l1, l2)};
      }
      case SKind::Prim:
        if (s.name == "Id") return elab_id(ctx, s);
        break;
      default: break;
    }
    auto [t, ty] = infer(ctx, s);
    ValuePtr u = force(ty);
    if (u->tag != VTag::Univ)
      fail(s.span, "not-a-type", "expected a type, but this term has type " + show(ctx, ty));
    return {t, u->num};
  }

  std::pair<TermPtr, int> elab_id(const Ctx& ctx, const SurfaceTerm& s) {
    auto [a, level] = elab_type(ctx, *s.args[0]);
    ValuePtr av = eval_in(ctx, a);
    TermPtr x = check(ctx, *s.args[1], av);
    TermPtr y = check(ctx, *s.args[2], av);
    return {mk::node(Tag::Id, {a, x, y}), level};
  }

  std::pair<TermPtr, ValuePtr> small_type(const Ctx& ctx, const SurfaceTerm& s) {
    auto [t, level] = elab_type(ctx, s);
    if (level > 1) fail(s.span, "universe-too-large", "this type is too large to belong to a universe");
    return {t, vuniv(level)};
  }

  std::pair<TermPtr, ValuePtr> infer(const Ctx& ctx, const SurfaceTerm& s) {
    switch (s.kind) {
      case SKind::Name: return infer_name(ctx, s);
      case SKind::Univ:
      case SKind::Pi:
      case SKind::Sigma: return small_type(ctx, s);
      case SKind::Lam: {
        if (!s.args[0])
          fail(s.span, "cannot-synthesize",
               "cannot infer the type of a lambda without an annotated binder");
        auto [dom, dl] = elab_type(ctx, *s.args[0]);
        ValuePtr dv = eval_in(ctx, dom);
        Ctx inner = ctx.bind(s.name, dv);
        auto [body, bt] = infer(inner, *s.args[1]);
        TermPtr pi = mk::pi(s.name, dom, quote(inner.depth(), bt, Unfold::No));
        return {mk::lam(s.name, body), eval_in(ctx, pi)};
      }
      case SKind::App: {
        auto [fn, ft] = infer(ctx, *s.args[0]);
        ValuePtr t = force(ft);
        if (t->tag != VTag::Pi)
          fail(s.args[0]->span, "not-a-function",
               "this term is applied to an argument but its type is " + show(ctx, ft));
        TermPtr arg = check(ctx, *s.args[1], t->kids[0]);
        return {mk::app(fn, arg), inst(t->closure, eval_in(ctx, arg))};
      }
      case SKind::Pair: {
        auto [a, at] = infer(ctx, *s.args[0]);
        auto [b, bt] = infer(ctx, *s.args[1]);
        TermPtr sig = mk::sigma("_", quote(ctx.depth(), at, Unfold::No),
                                quote(ctx.depth() + 1, bt, Unfold::No));
        return {mk::node(Tag::Pair, {a, b}), eval_in(ctx, sig)};
      }
      case SKind::Fst:
      case SKind::Snd: {
        auto [p, pt] = infer(ctx, *s.args[0]);
        ValuePtr t = force(pt);
        if (t->tag != VTag::Sigma)
          fail(s.span, "not-a-pair", "projection from a term of type " + show(ctx, pt));
        if (s.kind == SKind::Fst) return {mk::node(Tag::Fst, {p}), t->kids[0]};
        return {mk::node(Tag::Snd, {p}), inst(t->closure, fst(eval_in(ctx, p)))};
      }
      case SKind::Ann: {
        auto [ty, level] = elab_type(ctx, *s.args[1]);
        ValuePtr tv = eval_in(ctx, ty);
        return {check(ctx, *s.args[0], tv), tv};
      }
      case SKind::Prim: return infer_prim(ctx, s);
    }
    fail(s.span, "cannot-synthesize", "cannot infer a type for this term");
  }

  std::pair<TermPtr, ValuePtr> infer_name(const Ctx& ctx, const SurfaceTerm& s) {
    for (int i = ctx.depth() - 1; i >= 0; --i) {
      if (ctx.names[static_cast<std::size_t>(i)] == s.name && s.name != "_")
        return {mk::var(ctx.depth() - 1 - i), ctx.types[static_cast<std::size_t>(i)]};
    }
    if (sig_.is_poisoned(s.name))
      fail(s.span, "poisoned", "'" + s.name + "' refers to a declaration that failed to check");
    ConstPtr c = sig_.find(s.name);
    if (!c) fail(s.span, "unbound-name", "unbound name '" + s.name + "'");
    return {mk::constant(c), c->type_value};
  }

  void subsume(const Ctx& ctx, const SurfaceTerm& s, const ValuePtr& actual, const ValuePtr& expected) {
    Conversion conv(ctx.types);
    if (conv.is_subtype(actual, expected)) return;
    ValuePtr a = force(actual);
    ValuePtr e = force(expected);
    std::string code = a->tag == VTag::Univ && e->tag == VTag::Univ ? "universe-too-large" : "type-mismatch";
    fail(s.span, code, "type mismatch", show(ctx, expected), show(ctx, actual));
  }

  [[noreturn]] void shape_mismatch(const Ctx& ctx, const SurfaceTerm& s, const std::string& what,
                                   const ValuePtr& expected) {
    fail(s.span, "type-mismatch", what + " cannot have type " + show(ctx, expected), show(ctx, expected),
         std::nullopt);
  }

  TermPtr check(const Ctx& ctx, const SurfaceTerm& s, const ValuePtr& expected) {
    switch (s.kind) {
      case SKind::Lam: {
        ValuePtr t = force(expected);
        if (t->tag != VTag::Pi) shape_mismatch(ctx, s, "a lambda", expected);
        if (s.args[0]) {
          auto [dom, dl] = elab_type(ctx, *s.args[0]);
          Conversion conv(ctx.types);
          ValuePtr dv = eval_in(ctx, dom);
          if (!conv.convertible(vuniv(1), dv, t->kids[0]))
            fail(s.args[0]->span, "type-mismatch", "binder annotation does not match the expected domain",
                 show(ctx, t->kids[0]), show(ctx, dv));
        }
        Ctx inner = ctx.bind(s.name, t->kids[0]);
        TermPtr body = check(inner, *s.args[1], inst(t->closure, vvar(ctx.depth())));
        return mk::lam(s.name, body);
      }
      case SKind::Pair: {
        ValuePtr t = force(expected);
        if (t->tag != VTag::Sigma) shape_mismatch(ctx, s, "a pair", expected);
        TermPtr a = check(ctx, *s.args[0], t->kids[0]);
        TermPtr b = check(ctx, *s.args[1], inst(t->closure, eval_in(ctx, a)));
        return mk::node(Tag::Pair, {a, b});
      }
      case SKind::Univ:
      case SKind::Pi:
      case SKind::Sigma: {
        ValuePtr t = force(expected);
        if (t->tag != VTag::Univ) break;
        auto [ty, level] = elab_type(ctx, s);
        if (level > t->num)
          fail(s.span, "universe-too-large", "this type does not belong to U" + std::to_string(t->num),
               show(ctx, expected), level > 1 ? "no universe" : "U" + std::to_string(level));
        return ty;
      }
      case SKind::Prim: {
        if (auto r = check_prim(ctx, s, expected)) return r;
        break;
      }
      default: break;
    }
    auto [t, ty] = infer(ctx, s);
    subsume(ctx, s, ty, expected);
    return t;
  }

  void require_conv(const Ctx& ctx, const SurfaceTerm& s, const ValuePtr& ty, const ValuePtr& expected,
                    const ValuePtr& actual, const std::string& what) {
    Conversion conv(ctx.types);
    if (!conv.convertible(ty, expected, actual))
      fail(s.span, "type-mismatch", what, show(ctx, expected), show(ctx, actual));
  }

  TermPtr check_prim(const Ctx& ctx, const SurfaceTerm& s, const ValuePtr& expected) {
    const std::string& k = s.name;
    ValuePtr t = force(expected);
    if (k == "inj") {
      if (t->tag != VTag::Coeq) shape_mismatch(ctx, s, "an 'inj' point", expected);
      return build_prim(k, {check(ctx, *s.args[0], t->kids[0])});
    }
    if (k == "inl" || k == "inr") {
      if (t->tag != VTag::Sum) shape_mismatch(ctx, s, "an '" + k + "' injection", expected);
      return build_prim(k, {check(ctx, *s.args[0], t->kids[k == "inl" ? 0 : 1])});
    }
    if (k == "refl") {
      if (t->tag != VTag::Id) shape_mismatch(ctx, s, "'refl'", expected);
      TermPtr x = check(ctx, *s.args[0], t->kids[0]);
      ValuePtr xv = eval_in(ctx, x);
      require_conv(ctx, s, t->kids[0], t->kids[1], xv, "'refl' does not match the left endpoint");
      require_conv(ctx, s, t->kids[0], t->kids[2], xv, "'refl' does not match the right endpoint");
      return build_prim(k, {x});
    }
    if (k == "glue") {
      if (t->tag != VTag::Id) shape_mismatch(ctx, s, "'glue'", expected);
      ValuePtr c = force(t->kids[0]);
      if (c->tag != VTag::Coeq)
        fail(s.span, "not-a-coequalizer", "'glue' builds a path in a coequalizer, not in " +
                                              show(ctx, t->kids[0]));
      TermPtr a = check(ctx, *s.args[0], c->kids[0]);
      TermPtr b = check(ctx, *s.args[1], c->kids[0]);
      ValuePtr av = eval_in(ctx, a);
      ValuePtr bv = eval_in(ctx, b);
      TermPtr w = check(ctx, *s.args[2], apply_all(c->kids[1], {av, bv}));
      ValuePtr inj_a = eval_in(ctx, build_prim("inj", {a}));
      ValuePtr inj_b = eval_in(ctx, build_prim("inj", {b}));
      require_conv(ctx, s, t->kids[0], t->kids[1], inj_a, "'glue' does not match the left endpoint");
      require_conv(ctx, s, t->kids[0], t->kids[2], inj_b, "'glue' does not match the right endpoint");
      return build_prim(k, {a, b, w});
    }
    return nullptr;
  }

  // Checks an eliminator motive. A level-0 eliminator whose motive only
  // fits the level-1 motive type is reported as a level violation.
  TermPtr check_motive(const Ctx& ctx, const SurfaceTerm& s, const std::string& keyword, int level,
                       const std::function<ValuePtr(int)>& motive_type) {
    if (level == 1) return check(ctx, s, motive_type(1));
    try {
      return check(ctx, s, motive_type(0));
    } catch (const KernelError&) {
      bool fits_large = false;
      try {
        check(ctx, s, motive_type(1));
        fits_large = true;
      } catch (const KernelError&) {
      }
      if (fits_large)
        fail(s.span, "level-violation",
             "the motive of '" + keyword + "' must land in U0; use the level-1 eliminator",
             show(ctx, motive_type(0)), show(ctx, motive_type(1)));
      throw;
    }
  }

  // Infers the type of a scrutinee, falling back on the domain of the
  // motive when the scrutinee alone is not enough.
  std::pair<TermPtr, ValuePtr> scrutinee_type(const Ctx& ctx, const SurfaceTerm& s, const SurfaceTerm& motive,
                                             const SurfaceTerm& scrutinee) {
    try {
      return infer(ctx, scrutinee);
    } catch (const KernelError& e) {
      if (e.diag.code != "cannot-synthesize") throw;
    }
    try {
      auto [m, mt] = infer(ctx, motive);
      ValuePtr t = force(mt);
      if (t->tag == VTag::Pi) return {nullptr, t->kids[0]};
    } catch (const KernelError& e) {
      if (e.diag.code != "cannot-synthesize") throw;
    }
    fail(s.span, "cannot-synthesize",
         "cannot determine the type eliminated by '" + s.name + "'; annotate the scrutinee");
  }

  std::pair<TermPtr, ValuePtr> infer_prim(const Ctx& ctx, const SurfaceTerm& s) {
    const std::string& k = s.name;
    const auto& a = s.args;
    int level = (!k.empty() && k.back() == '1') ? 1 : 0;
    auto ev = [&](const TermPtr& t) { return eval_in(ctx, t); };

    if (k == "Id") {
      auto [t, l] = elab_id(ctx, s);
      if (l > 1) fail(s.span, "universe-too-large", "this identity type is too large to belong to a universe");
      return {t, vuniv(l)};
    }
    if (k == "refl") {
      auto [x, xt] = infer(ctx, *a[0]);
      TermPtr ty = mk::node(Tag::Id, {quote(ctx.depth(), xt, Unfold::No), x, x});
      return {build_prim(k, {x}), ev(ty)};
    }
    if (k == "J0" || k == "J1") {
      TermPtr p;
      ValuePtr pt;
      ValuePtr carrier;
      try {
        std::tie(p, pt) = infer(ctx, *a[4]);
        ValuePtr t = force(pt);
        if (t->tag != VTag::Id)
          fail(a[4]->span, "not-an-identity", "'" + k + "' eliminates a path, but this term has type " +
                                                  show(ctx, pt));
        carrier = t->kids[0];
      } catch (const KernelError& e) {
        if (e.diag.code != "cannot-synthesize") throw;
        p = nullptr;
        try {
          carrier = infer(ctx, *a[2]).second;
        } catch (const KernelError& e2) {
          if (e2.diag.code != "cannot-synthesize") throw;
          fail(s.span, "cannot-synthesize", "cannot determine the type of the path eliminated by '" + k +
                                                "'; annotate it");
        }
      }
      TermPtr m = check_motive(ctx, *a[0], k, level, [&](int l) { return frame_types::j_motive(carrier, l); });
      ValuePtr mv = ev(m);
      TermPtr d = check(ctx, *a[1], frame_types::j_base(carrier, mv));
      TermPtr x = check(ctx, *a[2], carrier);
      TermPtr y = check(ctx, *a[3], carrier);
      ValuePtr xv = ev(x);
      ValuePtr yv = ev(y);
      ValuePtr id = ev(mk::node(Tag::Id, {quote(ctx.depth(), carrier, Unfold::No), x, y}));
      if (p) {
        subsume(ctx, *a[4], pt, id);
      } else {
        p = check(ctx, *a[4], id);
      }
      return {build_prim(k, {m, d, x, y, p}), apply_all(mv, {xv, yv, ev(p)})};
    }
    if (k == "Coeq") {
      TermPtr carrier = check(ctx, *a[0], vuniv(0));
      TermPtr rel = check(ctx, *a[1], frame_types::relation(ev(carrier)));
      return {build_prim(k, {carrier, rel}), vuniv(0)};
    }
    if (k == "cind0" || k == "cind1") {
      auto [x, xt] = scrutinee_type(ctx, s, *a[0], *a[3]);
      ValuePtr t = force(xt);
      if (t->tag != VTag::Coeq)
        fail(a[3]->span, "not-a-coequalizer", "'" + k + "' eliminates a coequalizer, not " + show(ctx, xt));
      const ValuePtr& carrier = t->kids[0];
      const ValuePtr& rel = t->kids[1];
      TermPtr m = check_motive(ctx, *a[0], k, level,
                               [&](int l) { return frame_types::cind_motive(carrier, rel, l); });
      ValuePtr mv = ev(m);
      TermPtr f = check(ctx, *a[1], frame_types::cind_point(carrier, rel, mv));
      TermPtr e = check(ctx, *a[2], frame_types::cind_glue(carrier, rel, mv, ev(f)));
      if (!x) x = check(ctx, *a[3], xt);
      return {build_prim(k, {m, f, e, x}), vapply(mv, ev(x))};
    }
    if (k == "eabsurd0" || k == "eabsurd1") {
      TermPtr m = check_motive(ctx, *a[0], k, level, [](int l) { return frame_types::empty_motive(l); });
      TermPtr x = check(ctx, *a[1], ev(build_prim("Empty", {})));
      return {build_prim(k, {m, x}), vapply(ev(m), ev(x))};
    }
    if (k == "uind") {
      TermPtr m = check(ctx, *a[0], frame_types::unit_motive());
      ValuePtr mv = ev(m);
      TermPtr b = check(ctx, *a[1], vapply(mv, ev(build_prim("tt", {}))));
      TermPtr x = check(ctx, *a[2], ev(build_prim("Unit", {})));
      return {build_prim(k, {m, b, x}), vapply(mv, ev(x))};
    }
    if (k == "Sum") {
      TermPtr l = check(ctx, *a[0], vuniv(0));
      TermPtr r = check(ctx, *a[1], vuniv(0));
      return {build_prim(k, {l, r}), vuniv(0)};
    }
    if (k == "scase0" || k == "scase1") {
      auto [x, xt] = scrutinee_type(ctx, s, *a[0], *a[3]);
      ValuePtr t = force(xt);
      if (t->tag != VTag::Sum)
        fail(a[3]->span, "not-a-sum", "'" + k + "' eliminates a sum, not " + show(ctx, xt));
      const ValuePtr& lt = t->kids[0];
      const ValuePtr& rt = t->kids[1];
      TermPtr m = check_motive(ctx, *a[0], k, level, [&](int l) { return frame_types::sum_motive(lt, rt, l); });
      ValuePtr mv = ev(m);
      TermPtr l = check(ctx, *a[1], frame_types::sum_left(lt, rt, mv));
      TermPtr r = check(ctx, *a[2], frame_types::sum_right(lt, rt, mv));
      if (!x) x = check(ctx, *a[3], xt);
      return {build_prim(k, {m, l, r, x}), vapply(mv, ev(x))};
    }
    if (k == "suc") {
      ValuePtr nat = ev(build_prim("Nat", {}));
      return {build_prim(k, {check(ctx, *a[0], nat)}), nat};
    }
    if (k == "nind0" || k == "nind1") {
      ValuePtr nat = ev(build_prim("Nat", {}));
      TermPtr m = check_motive(ctx, *a[0], k, level, [](int l) { return frame_types::nat_motive(l); });
      ValuePtr mv = ev(m);
      TermPtr z = check(ctx, *a[1], vapply(mv, ev(build_prim("zero", {}))));
      TermPtr sc = check(ctx, *a[2], frame_types::nat_suc(mv));
      TermPtr n = check(ctx, *a[3], nat);
      return {build_prim(k, {m, z, sc, n}), vapply(mv, ev(n))};
    }
    if (k == "Empty" || k == "Unit" || k == "Nat") return {build_prim(k, {}), vuniv(0)};
    if (k == "tt") return {build_prim(k, {}), ev(build_prim("Unit", {}))};
    if (k == "zero") return {build_prim(k, {}), ev(build_prim("Nat", {}))};
    if (auto ax = axiom_from_name(k)) return {mk::axiom(*ax), frame_types::axiom_type(*ax)};
    fail(s.span, "cannot-synthesize", "'" + k + "' needs an expected type; add an annotation");
  }

 private:
  const Signature& sig_;
};

struct Elaborated {
  Ctx ctx;
  std::vector<TermPtr> param_types;
  TermPtr type;
};

Elaborated elaborate_header(Elaborator& el, const SurfaceDecl& d) {
  Elaborated out;
  for (const auto& b : d.params) {
    auto [ty, level] = el.elab_type(out.ctx, *b.type);
    out.param_types.push_back(ty);
    out.ctx = out.ctx.bind(b.name, el.eval_in(out.ctx, ty));
  }
  out.type = el.elab_type(out.ctx, *d.type).first;
  return out;
}

bool motive_is_small(const Term& motive, int binders) {
  const Term* cur = &motive;
  for (int i = 0; i < binders; ++i) {
    if (cur->tag != Tag::Lam) return true;
    cur = cur->kids[0].get();
  }
  bool small = true;
  std::function<void(const Term&)> scan = [&](const Term& t) {
    if (t.tag == Tag::Univ) small = false;
    for (const auto& k : t.kids) scan(*k);
  };
  scan(*cur);
  return small;
}

}  // namespace

bool level_safe(const Term& t) {
  if (is_eliminator_with_level(t.tag) && t.num == 0) {
    int binders = t.tag == Tag::J ? 3 : 1;
    if (!motive_is_small(*t.kids[0], binders)) return false;
  }
  return std::all_of(t.kids.begin(), t.kids.end(), [](const TermPtr& k) { return level_safe(*k); });
}

const ConstInfo& Checker::lookup(std::string_view name) const {
  ConstPtr c = sig_.find(name);
  if (!c) throw std::out_of_range("no definition named " + std::string(name));
  return *c;
}

void Checker::check_declaration(const SurfaceDecl& d) {
  Elaborator el(sig_);
  if (d.kind == DeclKind::AxiomAssert) {
    if (sig_.is_poisoned(d.name))
      fail(d.span, "poisoned", "'" + d.name + "' refers to a declaration that failed to check");
    ConstPtr c = sig_.find(d.name);
    if (!c) fail(d.span, "unbound-name", "unbound name '" + d.name + "'");
    AxiomSet allowed;
    for (const auto& a : d.axioms) allowed.insert(*axiom_from_name(a));
    auto join = [](const AxiomSet& s) {
      std::string out;
      for (Axiom a : s) out += (out.empty() ? "" : " ") + std::string(axiom_name(a));
      return "{" + out + "}";
    };
    if (!std::includes(allowed.begin(), allowed.end(), c->axioms.begin(), c->axioms.end()))
      fail(d.span, "axiom-assert-failed", "'" + d.name + "' uses axioms outside the asserted set",
           join(allowed), join(c->axioms));
    return;
  }

  if (sig_.contains(d.name) || sig_.is_poisoned(d.name) || assertion_names_.count(d.name))
    fail(d.span, "duplicate-name", "'" + d.name + "' is already declared");

  Elaborated h = elaborate_header(el, d);
  ValuePtr tv = el.eval_in(h.ctx, h.type);

  if (d.kind == DeclKind::ConvAssert) {
    TermPtr lhs = el.check(h.ctx, *d.body, tv);
    TermPtr rhs = el.check(h.ctx, *d.rhs, tv);
    ValuePtr lv = el.eval_in(h.ctx, lhs);
    ValuePtr rv = el.eval_in(h.ctx, rhs);
    Conversion conv(h.ctx.types);
    if (!conv.convertible(tv, lv, rv))
      fail(d.span, "conversion-failed", "the two sides of '" + d.name + "' are not definitionally equal",
           el.show(h.ctx, lv), el.show(h.ctx, rv));
    assertion_names_.insert(d.name);
    return;
  }

  TermPtr body = el.check(h.ctx, *d.body, tv);
  TermPtr type = h.type;
  for (std::size_t i = d.params.size(); i-- > 0;) {
    type = mk::pi(d.params[i].name, h.param_types[i], type);
    body = mk::lam(d.params[i].name, body);
  }
  if (!level_safe(*body))
    fail(d.span, "level-violation", "a level-0 eliminator in '" + d.name + "' has a motive outside U0");
  AxiomSet axioms = collect_axioms(*type);
  AxiomSet body_axioms = collect_axioms(*body);
  axioms.insert(body_axioms.begin(), body_axioms.end());
  ConstInfo info;
  info.name = d.name;
  info.type = type;
  info.body = body;
  info.type_value = eval(Env(), type);
  info.axioms = std::move(axioms);
  sig_.add(std::move(info));
}

std::vector<DeclReport> Checker::check_module(const std::vector<SurfaceDecl>& decls, const std::string& file) {
  std::vector<DeclReport> out;
  for (const auto& d : decls) {
    DeclReport r{d.kind, d.name, d.span, false, {}, std::nullopt};
    try {
      check_declaration(d);
      r.ok = true;
      if (d.kind == DeclKind::Definition) r.type = print(folded_type(d.name));
    } catch (KernelError& e) {
      e.diag.file = file;
      r.diagnostic = e.diag;
      if (d.kind == DeclKind::Definition && e.diag.code != "duplicate-name") sig_.poison(d.name);
    }
    out.push_back(std::move(r));
  }
  return out;
}

TermPtr Checker::normal_form(std::string_view name) const {
  return quote(0, eval(Env(), lookup(name).body), Unfold::Yes);
}

TermPtr Checker::folded_type(std::string_view name) const {
  return quote(0, lookup(name).type_value, Unfold::No);
}

std::string Checker::print(const TermPtr& t) const {
  return print_core(*t, {}, [this](std::string_view n) { return sig_.contains(n); });
}

AxiomSet Checker::axioms_used(std::string_view name) const { return lookup(name).axioms; }

std::pair<TermPtr, ValuePtr> Checker::infer_closed(const SurfaceTerm& t) {
  Elaborator el(sig_);
  return el.infer(Ctx{}, t);
}

TermPtr Checker::check_closed(const SurfaceTerm& t, const ValuePtr& type) {
  Elaborator el(sig_);
  return el.check(Ctx{}, t, type);
}

}  // namespace hott
