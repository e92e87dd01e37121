#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hott/corpus.hpp"

namespace test {

inline std::filesystem::path corpus_dir() { return HOTT_CORPUS_DIR; }
inline std::filesystem::path bad_dir() { return HOTT_BAD_DIR; }

// Checks a module from source, throwing on the first failed declaration.
inline void load(hott::Checker& c, const std::string& source) {
  hott::ParseResult p = hott::parse_module(source);
  if (!p.diagnostics.empty()) throw hott::KernelError(p.diagnostics.front());
  for (const auto& d : p.decls) c.check_declaration(d);
}

inline void load_file(hott::Checker& c, const std::filesystem::path& path) { load(c, hott::read_file(path)); }

inline void load_prelude(hott::Checker& c) { load_file(c, corpus_dir() / "prelude.hott"); }

// Diagnostic codes a source produces, in report order.
inline std::vector<std::string> codes_of(const std::string& source) {
  hott::Checker c;
  hott::ParseResult p = hott::parse_module(source);
  std::vector<std::string> out;
  for (const auto& r : c.check_module(p.decls, "<input>"))
    if (!r.ok) out.push_back(r.diagnostic->code);
  for (const auto& d : p.diagnostics) out.push_back(d.code);
  return out;
}

inline std::string nf(hott::Checker& c, const std::string& name) { return c.print(c.normal_form(name)); }

}  // namespace test
