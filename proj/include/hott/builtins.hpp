#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hott/surface.hpp"
#include "hott/syntax.hpp"

namespace hott {

// A kernel-supplied type, written in surface syntax over named parameters.
struct KernelTemplate {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;  // name, type
  std::string body;
};

const std::vector<KernelTemplate>& kernel_templates();
const KernelTemplate& kernel_template(std::string_view name);

// Name resolution without type checking. `scope` lists bound names,
// innermost last. Globals and typing are not available; the result only
// mentions variables, primitives and axioms.
TermPtr resolve_raw(const SurfaceTerm& t, std::vector<std::string> scope = {});

}  // namespace hott

namespace hott {

// Core node for a primitive keyword applied to its arguments, given in
// surface order (which matches core order).
TermPtr build_prim(std::string_view keyword, std::vector<TermPtr> args);

}  // namespace hott
