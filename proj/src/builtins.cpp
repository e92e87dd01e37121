#include "hott/builtins.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "hott/nbe.hpp"

namespace hott {

namespace {

std::string biinv(const std::string& x, const std::string& y, const std::string& h) {
  const std::string X = "(" + x + ")";
  const std::string Y = "(" + y + ")";
  return "((g' : " + Y + " -> " + X + ") * ((x' : " + X + ") -> Id " + X + " (g' ((" + h +
         ") x')) x')) * ((k' : " + Y + " -> " + X + ") * ((y' : " + Y + ") -> Id " + Y + " ((" + h +
         ") (k' y')) y'))";
}

std::string transport(const std::string& fam, const std::string& x, const std::string& y,
                      const std::string& p, const std::string& u) {
  return "(J1 (\\x' y' q'. " + fam + " x' -> " + fam + " y') (\\x' u'. u') (" + x + ") (" + y + ") (" + p +
         ") (" + u + "))";
}

std::vector<KernelTemplate> build_templates() {
  const std::string rel = "A -> A -> U0";
  const std::string glued = "((glue a b s) : Id (Coeq A R) (inj a) (inj b))";
  std::vector<KernelTemplate> out = {
      {"j_motive0", {{"A", "U1"}}, "(x y : A) -> Id A x y -> U0"},
      {"j_motive1", {{"A", "U1"}}, "(x y : A) -> Id A x y -> U1"},
      {"j_base", {{"A", "U1"}, {"P", "(x y : A) -> Id A x y -> U1"}}, "(x : A) -> P x x (refl x)"},
      {"relation", {{"A", "U0"}}, rel},
      {"cind_motive0", {{"A", "U0"}, {"R", rel}}, "Coeq A R -> U0"},
      {"cind_motive1", {{"A", "U0"}, {"R", rel}}, "Coeq A R -> U1"},
      {"cind_point", {{"A", "U0"}, {"R", rel}, {"P", "Coeq A R -> U1"}}, "(a : A) -> P (inj a)"},
      {"cind_glue",
       {{"A", "U0"}, {"R", rel}, {"P", "Coeq A R -> U1"}, {"f", "(a : A) -> P (inj a)"}},
       "(a b : A) -> (s : R a b) -> Id (P (inj b)) " + transport("P", "inj a", "inj b", glued, "f a") +
           " (f b)"},
      {"empty_motive0", {}, "Empty -> U0"},
      {"empty_motive1", {}, "Empty -> U1"},
      {"unit_motive", {}, "Unit -> U1"},
      {"sum_motive0", {{"A", "U0"}, {"B", "U0"}}, "Sum A B -> U0"},
      {"sum_motive1", {{"A", "U0"}, {"B", "U0"}}, "Sum A B -> U1"},
      {"sum_left", {{"A", "U0"}, {"B", "U0"}, {"P", "Sum A B -> U1"}}, "(a : A) -> P (inl a)"},
      {"sum_right", {{"A", "U0"}, {"B", "U0"}, {"P", "Sum A B -> U1"}}, "(b : B) -> P (inr b)"},
      {"nat_motive0", {}, "Nat -> U0"},
      {"nat_motive1", {}, "Nat -> U1"},
      {"nat_suc", {{"P", "Nat -> U1"}}, "(n : Nat) -> P n -> P (suc n)"},
  };

  const std::string pis = "((x : A) -> B x)";
  const std::string happly =
      "\\p. \\x. J1 (\\u v q. Id (B x) (u x) (v x)) (\\u. refl (u x)) f g p";
  out.push_back({"funext", {},
                 "(A : U1) -> (B : A -> U1) -> (f g : " + pis + ") -> " +
                     biinv("Id " + pis + " f g", "(x : A) -> Id (B x) (f x) (g x)", happly)});

  const std::string id_equiv =
      "(\\x. x, ((\\x. x, \\x. refl x), (\\x. x, \\x. refl x)))";
  const std::string equiv_xy = "(f : X -> Y) * " + biinv("X", "Y", "f");
  const std::string idtoeqv = "\\p. J1 (\\X Y q. " + equiv_xy + ") (\\X. " + id_equiv + ") A B p";
  const std::string equiv_ab = "(f : A -> B) * " + biinv("A", "B", "f");
  out.push_back({"univalence", {},
                 "(A B : U0) -> " + biinv("Id U0 A B", "(" + equiv_ab + ")", idtoeqv)});

  const std::string g = "(\\z. cind1 P f e z)";
  const std::string apd_motive =
      "\\x y p. Id (P y) " + transport("P", "x", "y", "p", g + " x") + " (" + g + " y)";
  out.push_back(
      {"cgluebeta", {},
       "(A : U0) -> (R : A -> A -> U0) -> (P : Coeq A R -> U1) -> (f : (a : A) -> P (inj a)) -> "
       "(e : (a b : A) -> (s : R a b) -> Id (P (inj b)) " +
           transport("P", "inj a", "inj b", glued, "f a") +
           " (f b)) -> (a b : A) -> (s : R a b) -> Id (Id (P (inj b)) " +
           transport("P", "inj a", "inj b", glued, "f a") + " (f b)) (J1 (" + apd_motive +
           ") (\\x. refl (" + g + " x)) (inj a) (inj b) " + glued + ") (e a b s)"});
  return out;
}

struct Instantiated {
  TermPtr body;
  std::size_t arity;
};

const Instantiated& resolved(std::string_view name) {
  static std::map<std::string, Instantiated, std::less<>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  const KernelTemplate& t = kernel_template(name);
  std::vector<std::string> scope;
  for (const auto& p : t.params) scope.push_back(p.first);
  Instantiated inst{resolve_raw(*parse_term(t.body), scope), t.params.size()};
  return cache.emplace(std::string(name), std::move(inst)).first->second;
}

ValuePtr instantiate(std::string_view name, const std::vector<ValuePtr>& args) {
  const Instantiated& t = resolved(name);
  if (args.size() != t.arity) throw std::logic_error("kernel template arity mismatch");
  Env env;
  for (const auto& a : args) env = env.extend(a);
  return eval(env, t.body);
}

std::string leveled(std::string_view base, int level) {
  return std::string(base) + (level == 0 ? "0" : "1");
}

}  // namespace

const std::vector<KernelTemplate>& kernel_templates() {
  static const std::vector<KernelTemplate> templates = build_templates();
  return templates;
}

const KernelTemplate& kernel_template(std::string_view name) {
  for (const auto& t : kernel_templates())
    if (t.name == name) return t;
  throw std::logic_error("no kernel template named " + std::string(name));
}

TermPtr build_prim(std::string_view kw, std::vector<TermPtr> args) {
  auto leveled_node = [&](Tag tag) { return mk::node(tag, std::move(args), kw.back() == '1' ? 1 : 0); };
  if (kw == "Id") return mk::node(Tag::Id, std::move(args));
  if (kw == "refl") return mk::node(Tag::Refl, std::move(args));
  if (kw == "J0" || kw == "J1") return leveled_node(Tag::J);
  if (kw == "Coeq") return mk::node(Tag::Coeq, std::move(args));
  if (kw == "inj") return mk::node(Tag::Inj, std::move(args));
  if (kw == "glue") return mk::node(Tag::Glue, std::move(args));
  if (kw == "cind0" || kw == "cind1") return leveled_node(Tag::CoeqInd);
  if (kw == "Empty") return mk::node(Tag::Empty, {});
  if (kw == "eabsurd0" || kw == "eabsurd1") return leveled_node(Tag::EmptyElim);
  if (kw == "Unit") return mk::node(Tag::Unit, {});
  if (kw == "tt") return mk::node(Tag::Tt, {});
  if (kw == "uind") return mk::node(Tag::UnitElim, std::move(args));
  if (kw == "Sum") return mk::node(Tag::Sum, std::move(args));
  if (kw == "inl") return mk::node(Tag::Inl, std::move(args));
  if (kw == "inr") return mk::node(Tag::Inr, std::move(args));
  if (kw == "scase0" || kw == "scase1") return leveled_node(Tag::SumElim);
  if (kw == "Nat") return mk::node(Tag::Nat, {});
  if (kw == "zero") return mk::node(Tag::Zero, {});
  if (kw == "suc") return mk::node(Tag::Suc, std::move(args));
  if (kw == "nind0" || kw == "nind1") return leveled_node(Tag::NatElim);
  if (auto a = axiom_from_name(kw)) return mk::axiom(*a);
  throw std::logic_error("unknown primitive " + std::string(kw));
}

TermPtr resolve_raw(const SurfaceTerm& t, std::vector<std::string> scope) {
  auto sub = [&](const SurfacePtr& s) { return resolve_raw(*s, scope); };
  auto under = [&](const std::string& n, const SurfacePtr& s) {
    scope.push_back(n);
    TermPtr r = resolve_raw(*s, scope);
    scope.pop_back();
    return r;
  };
  switch (t.kind) {
    case SKind::Name:
      for (std::size_t i = scope.size(); i-- > 0;)
        if (scope[i] == t.name) return mk::var(static_cast<int>(scope.size() - 1 - i));
      throw std::logic_error("unbound name in kernel template: " + t.name);
    case SKind::Univ: return mk::univ(t.level);
    case SKind::Pi: return mk::pi(t.name, sub(t.args[0]), under(t.name, t.args[1]));
    case SKind::Sigma: return mk::sigma(t.name, sub(t.args[0]), under(t.name, t.args[1]));
    case SKind::Lam: return mk::lam(t.name, under(t.name, t.args[1]));
    case SKind::App: return mk::app(sub(t.args[0]), sub(t.args[1]));
    case SKind::Pair: return mk::node(Tag::Pair, {sub(t.args[0]), sub(t.args[1])});
    case SKind::Fst: return mk::node(Tag::Fst, {sub(t.args[0])});
    case SKind::Snd: return mk::node(Tag::Snd, {sub(t.args[0])});
    case SKind::Ann: return sub(t.args[0]);
    case SKind::Prim: {
      std::vector<TermPtr> args;
      for (const auto& a : t.args) {
        if (!a) throw std::logic_error("kernel template needs explicit identity types");
        args.push_back(sub(a));
      }
      return build_prim(t.name, std::move(args));
    }
  }
  throw std::logic_error("resolve_raw: unknown surface kind");
}

namespace frame_types {

ValuePtr j_motive(const ValuePtr& carrier, int level) {
  return instantiate(leveled("j_motive", level), {carrier});
}
ValuePtr j_base(const ValuePtr& carrier, const ValuePtr& motive) {
  return instantiate("j_base", {carrier, motive});
}
ValuePtr relation(const ValuePtr& carrier) { return instantiate("relation", {carrier}); }
ValuePtr cind_motive(const ValuePtr& carrier, const ValuePtr& rel, int level) {
  return instantiate(leveled("cind_motive", level), {carrier, rel});
}
ValuePtr cind_point(const ValuePtr& carrier, const ValuePtr& rel, const ValuePtr& motive) {
  return instantiate("cind_point", {carrier, rel, motive});
}
ValuePtr cind_glue(const ValuePtr& carrier, const ValuePtr& rel, const ValuePtr& motive,
                   const ValuePtr& point_case) {
  return instantiate("cind_glue", {carrier, rel, motive, point_case});
}
ValuePtr empty_motive(int level) { return instantiate(leveled("empty_motive", level), {}); }
ValuePtr unit_motive() { return instantiate("unit_motive", {}); }
ValuePtr sum_motive(const ValuePtr& left, const ValuePtr& right, int level) {
  return instantiate(leveled("sum_motive", level), {left, right});
}
ValuePtr sum_left(const ValuePtr& left, const ValuePtr& right, const ValuePtr& motive) {
  return instantiate("sum_left", {left, right, motive});
}
ValuePtr sum_right(const ValuePtr& left, const ValuePtr& right, const ValuePtr& motive) {
  return instantiate("sum_right", {left, right, motive});
}
ValuePtr nat_motive(int level) { return instantiate(leveled("nat_motive", level), {}); }
ValuePtr nat_suc(const ValuePtr& motive) { return instantiate("nat_suc", {motive}); }

ValuePtr axiom_type(Axiom a) {
  static const ValuePtr funext = instantiate("funext", {});
  static const ValuePtr univalence = instantiate("univalence", {});
  static const ValuePtr cgluebeta = instantiate("cgluebeta", {});
  switch (a) {
    case Axiom::Funext: return funext;
    case Axiom::Univalence: return univalence;
    case Axiom::CoeqGlueBeta: return cgluebeta;
  }
  return nullptr;
}

}  // namespace frame_types

}  // namespace hott
