#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hott/nbe.hpp"
#include "hott/surface.hpp"
#include "hott/syntax.hpp"

namespace hott {

struct DeclReport {
  DeclKind kind;
  std::string name;
  Span span;
  bool ok = false;
  std::string type;  // printed type of a checked definition
  std::optional<Diagnostic> diagnostic;
};

// Checks declarations one at a time against a growing signature. A
// declaration that fails is poisoned: later references to its name report
// a `poisoned` error instead of cascading.
class Checker {
 public:
  Checker() = default;

  // Throws KernelError if the declaration is ill-typed.
  void check_declaration(const SurfaceDecl& d);

  // Checks every declaration, recording failures instead of throwing.
  std::vector<DeclReport> check_module(const std::vector<SurfaceDecl>& decls, const std::string& file);

  const Signature& signature() const { return sig_; }

  // Normal form of a definition's body with all constants unfolded.
  TermPtr normal_form(std::string_view name) const;
  // The definition's type, beta-normal with constants kept folded.
  TermPtr folded_type(std::string_view name) const;
  std::string print(const TermPtr& t) const;

  // Axioms a definition depends on, transitively.
  AxiomSet axioms_used(std::string_view name) const;

  // Elaborates a closed surface term, returning it with its type.
  std::pair<TermPtr, ValuePtr> infer_closed(const SurfaceTerm& t);
  TermPtr check_closed(const SurfaceTerm& t, const ValuePtr& type);

 private:
  Signature sig_;
  std::set<std::string, std::less<>> assertion_names_;

  const ConstInfo& lookup(std::string_view name) const;
};

// Every eliminator tagged with level 0 has a motive whose codomain is U0,
// checked on a core term without its surrounding typing context.
bool level_safe(const Term& t);

}  // namespace hott
