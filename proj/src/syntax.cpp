#include "hott/syntax.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hott {

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Funext: return "funext";
    case Axiom::Univalence: return "univalence";
    case Axiom::CoeqGlueBeta: return "cgluebeta";
  }
  return "?";
}

std::optional<Axiom> axiom_from_name(std::string_view name) {
  if (name == "funext") return Axiom::Funext;
  if (name == "univalence") return Axiom::Univalence;
  if (name == "cgluebeta") return Axiom::CoeqGlueBeta;
  return std::nullopt;
}

int binders_at(Tag tag, std::size_t kid) {
  switch (tag) {
    case Tag::Pi:
    case Tag::Sigma: return kid == 1 ? 1 : 0;
    case Tag::Lam: return 1;
    default: return 0;
  }
}

bool is_eliminator_with_level(Tag tag) {
  switch (tag) {
    case Tag::J:
    case Tag::CoeqInd:
    case Tag::EmptyElim:
    case Tag::SumElim:
    case Tag::NatElim: return true;
    default: return false;
  }
}

namespace mk {

TermPtr node(Tag tag, std::vector<TermPtr> kids, int num) {
  auto t = std::make_shared<Term>();
  t->tag = tag;
  t->num = num;
  t->kids = std::move(kids);
  return t;
}

TermPtr var(int index) { return node(Tag::Var, {}, index); }
TermPtr univ(int level) { return node(Tag::Univ, {}, level); }

TermPtr pi(std::string name, TermPtr dom, TermPtr cod) {
  auto t = std::make_shared<Term>();
  t->tag = Tag::Pi;
  t->name = std::move(name);
  t->kids = {std::move(dom), std::move(cod)};
  return t;
}

TermPtr lam(std::string name, TermPtr body) {
  auto t = std::make_shared<Term>();
  t->tag = Tag::Lam;
  t->name = std::move(name);
  t->kids = {std::move(body)};
  return t;
}

TermPtr app(TermPtr fn, TermPtr arg) { return node(Tag::App, {std::move(fn), std::move(arg)}); }

TermPtr sigma(std::string name, TermPtr fst, TermPtr snd) {
  auto t = std::make_shared<Term>();
  t->tag = Tag::Sigma;
  t->name = std::move(name);
  t->kids = {std::move(fst), std::move(snd)};
  return t;
}

TermPtr axiom(Axiom a) {
  auto t = std::make_shared<Term>();
  t->tag = Tag::Axiom;
  t->axiom = a;
  return t;
}

TermPtr constant(ConstPtr c) {
  auto t = std::make_shared<Term>();
  t->tag = Tag::Const;
  t->constant = std::move(c);
  return t;
}

}  // namespace mk

const ConstInfo& Signature::add(ConstInfo info) {
  if (index_.count(info.name)) throw std::logic_error("duplicate constant " + info.name);
  auto ptr = std::make_shared<const ConstInfo>(std::move(info));
  index_.emplace(ptr->name, decls_.size());
  decls_.push_back(ptr);
  return *ptr;
}

ConstPtr Signature::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : decls_[it->second];
}

bool Signature::is_poisoned(std::string_view name) const {
  return poisoned_.find(name) != poisoned_.end();
}

bool alpha_equal(const Term& t, const Term& u) {
  if (&t == &u) return true;
  if (t.tag != u.tag || t.num != u.num || t.kids.size() != u.kids.size()) return false;
  if (t.tag == Tag::Axiom && t.axiom != u.axiom) return false;
  if (t.tag == Tag::Const && t.constant->name != u.constant->name) return false;
  for (std::size_t i = 0; i < t.kids.size(); ++i)
    if (!alpha_equal(*t.kids[i], *u.kids[i])) return false;
  return true;
}

bool occurs(const Term& t, int index) {
  if (t.tag == Tag::Var) return t.num == index;
  for (std::size_t i = 0; i < t.kids.size(); ++i)
    if (occurs(*t.kids[i], index + binders_at(t.tag, i))) return true;
  return false;
}

static void collect_axioms_into(const Term& t, AxiomSet& out) {
  if (t.tag == Tag::Axiom) out.insert(t.axiom);
  if (t.tag == Tag::Const) out.insert(t.constant->axioms.begin(), t.constant->axioms.end());
  for (const auto& k : t.kids) collect_axioms_into(*k, out);
}

AxiomSet collect_axioms(const Term& t) {
  AxiomSet out;
  collect_axioms_into(t, out);
  return out;
}

namespace {

constexpr std::array kKeywords = {
    "def",   "axiom-assert", "conv-assert", "U0",       "U1",       "Id",     "refl",
    "J0",    "J1",           "Coeq",        "inj",      "glue",     "cind0",  "cind1",
    "Empty", "eabsurd0",     "eabsurd1",    "Unit",     "tt",       "uind",   "Sum",
    "inl",   "inr",          "scase0",      "scase1",   "Nat",      "zero",   "suc",
    "nind0", "nind1",        "funext",      "univalence", "cgluebeta"};

// Precedences: 0 lambda, 1 arrow, 2 product, 3 application, 4 atom.
class CorePrinter {
 public:
  CorePrinter(std::vector<std::string> scope, const std::function<bool(std::string_view)>& is_global)
      : scope_(std::move(scope)), is_global_(is_global) {}

  std::string print(const Term& t, int prec) {
    std::ostringstream out;
    int own = emit(t, out);
    if (own < prec) return "(" + out.str() + ")";
    return out.str();
  }

 private:
  std::vector<std::string> scope_;
  const std::function<bool(std::string_view)>& is_global_;

  bool taken(const std::string& n) const {
    if (std::find(scope_.begin(), scope_.end(), n) != scope_.end()) return true;
    if (is_keyword(n)) return true;
    return is_global_ && is_global_(n);
  }

  std::string fresh(const std::string& hint, bool used) {
    if (!used) return "_";
    std::string base = (hint.empty() || hint == "_") ? "x" : hint;
    if (!taken(base)) return base;
    while (!base.empty() && std::isdigit(static_cast<unsigned char>(base.back()))) base.pop_back();
    if (base.empty()) base = "x";
    for (int i = 1;; ++i) {
      std::string cand = base + std::to_string(i);
      if (!taken(cand)) return cand;
    }
  }

  std::string under(const std::string& name, const Term& body, int prec) {
    scope_.push_back(name);
    std::string s = print(body, prec);
    scope_.pop_back();
    return s;
  }

  std::string head_apply(std::string_view head, const Term& t, std::size_t from = 0) {
    std::string s(head);
    for (std::size_t i = from; i < t.kids.size(); ++i) s += " " + print(*t.kids[i], 4);
    return s;
  }

  int emit(const Term& t, std::ostringstream& out) {
    switch (t.tag) {
      case Tag::Var: {
        int idx = t.num;
        if (idx < 0 || idx >= static_cast<int>(scope_.size())) {
          out << "#" << idx;
        } else {
          out << scope_[scope_.size() - 1 - idx];
        }
        return 4;
      }
      case Tag::Univ: out << (t.num == 0 ? "U0" : "U1"); return 4;
      case Tag::Pi:
      case Tag::Sigma: {
        bool dep = occurs(*t.kids[1], 0);
        const char* op = t.tag == Tag::Pi ? " -> " : " * ";
        int own = t.tag == Tag::Pi ? 1 : 2;
        if (!dep) {
          out << print(*t.kids[0], own + 1) << op << under("_", *t.kids[1], own);
        } else {
          std::string n = fresh(t.name, true);
          out << "(" << n << " : " << print(*t.kids[0], 0) << ")" << op << under(n, *t.kids[1], own);
        }
        return own;
      }
      case Tag::Lam: {
        out << "\\";
        const Term* cur = &t;
        std::size_t pushed = 0;
        bool first = true;
        while (cur->tag == Tag::Lam) {
          std::string n = fresh(cur->name, occurs(*cur->kids[0], 0));
          if (!first) out << " ";
          out << n;
          first = false;
          scope_.push_back(n);
          ++pushed;
          cur = cur->kids[0].get();
        }
        out << ". " << print(*cur, 0);
        scope_.resize(scope_.size() - pushed);
        return 0;
      }
      case Tag::App: {
        std::vector<const Term*> args;
        const Term* cur = &t;
        while (cur->tag == Tag::App) {
          args.push_back(cur->kids[1].get());
          cur = cur->kids[0].get();
        }
        out << print(*cur, 4);
        for (auto it = args.rbegin(); it != args.rend(); ++it) out << " " << print(**it, 4);
        return 3;
      }
      case Tag::Pair:
        out << "(" << print(*t.kids[0], 0) << ", " << print(*t.kids[1], 0) << ")";
        return 4;
      case Tag::Fst: out << print(*t.kids[0], 4) << ".1"; return 4;
      case Tag::Snd: out << print(*t.kids[0], 4) << ".2"; return 4;
      case Tag::Id: out << head_apply("Id", t); return 3;
      case Tag::Refl: out << head_apply("refl", t); return 3;
      case Tag::J: out << head_apply(t.num ? "J1" : "J0", t); return 3;
      case Tag::Coeq: out << head_apply("Coeq", t); return 3;
      case Tag::Inj: out << head_apply("inj", t); return 3;
      case Tag::Glue: out << head_apply("glue", t); return 3;
      case Tag::CoeqInd: out << head_apply(t.num ? "cind1" : "cind0", t); return 3;
      case Tag::Empty: out << "Empty"; return 4;
      case Tag::EmptyElim: out << head_apply(t.num ? "eabsurd1" : "eabsurd0", t); return 3;
      case Tag::Unit: out << "Unit"; return 4;
      case Tag::Tt: out << "tt"; return 4;
      case Tag::UnitElim: out << head_apply("uind", t); return 3;
      case Tag::Sum: out << head_apply("Sum", t); return 3;
      case Tag::Inl: out << head_apply("inl", t); return 3;
      case Tag::Inr: out << head_apply("inr", t); return 3;
      case Tag::SumElim: out << head_apply(t.num ? "scase1" : "scase0", t); return 3;
      case Tag::Nat: out << "Nat"; return 4;
      case Tag::Zero: out << "zero"; return 4;
      case Tag::Suc: out << head_apply("suc", t); return 3;
      case Tag::NatElim: out << head_apply(t.num ? "nind1" : "nind0", t); return 3;
      case Tag::Axiom: out << axiom_name(t.axiom); return 4;
      case Tag::Const: out << t.constant->name; return 4;
    }
    return 4;
  }
};

}  // namespace

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::string print_core(const Term& t, std::vector<std::string> scope,
                       const std::function<bool(std::string_view)>& is_global) {
  CorePrinter p(std::move(scope), is_global);
  return p.print(t, 0);
}

}  // namespace hott
