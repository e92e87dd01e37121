#include <unistd.h>

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <json.hpp>

#include "hott/corpus.hpp"

namespace {

struct Options {
  std::vector<std::string> files;
  std::string target;
  bool json = false;
  bool include_optional = false;
  bool no_color = false;
};

class Reporter {
 public:
  explicit Reporter(const Options& o) : opts_(o), color_(!o.no_color && !o.json && isatty(2)) {}

  void ok(const hott::DeclReport& r) const {
    if (opts_.json) return;
    switch (r.kind) {
      case hott::DeclKind::Definition: std::cout << "ok " << r.name << " : " << truncate(r.type) << "\n"; break;
      case hott::DeclKind::ConvAssert: std::cout << "ok " << r.name << " : conversion holds\n"; break;
      case hott::DeclKind::AxiomAssert: std::cout << "ok " << r.name << " : axioms within bound\n"; break;
    }
  }

  void error(const hott::Diagnostic& d) const {
    if (opts_.json) {
      nlohmann::json j = {{"file", d.file}, {"line", d.span.line}, {"col", d.span.col},
                          {"code", d.code}, {"message", d.message}};
      std::cout << j.dump() << "\n";
      return;
    }
    std::string text = hott::format_diagnostic(d);
    if (color_) text = "\x1b[31m" + text + "\x1b[0m";
    std::cerr << text << "\n";
  }

 private:
  const Options& opts_;
  bool color_;

  static std::string truncate(const std::string& s) {
    constexpr std::size_t kWidth = 80;
    if (s.size() <= kWidth) return s;
    return s.substr(0, kWidth - 3) + "...";
  }
};

std::vector<std::filesystem::path> resolve_files(const Options& o) {
  std::vector<std::filesystem::path> out;
  for (const auto& f : o.files) {
    std::filesystem::path p(f);
    if (!std::filesystem::is_regular_file(p)) throw std::runtime_error("no such file: " + f);
    bool optional = p.filename().string().rfind("optional_", 0) == 0;
    if (optional && !o.include_optional) continue;
    out.push_back(p);
  }
  return out;
}

// Checks the files in order. Returns the number of errors.
std::size_t run_check(hott::Checker& checker, const Options& o, bool report_ok) {
  Reporter rep(o);
  std::size_t errors = 0;
  for (const auto& path : resolve_files(o)) {
    hott::FileResult r = hott::check_file(checker, path);
    for (const auto& d : r.decls) {
      if (d.ok) {
        if (report_ok) rep.ok(d);
      } else {
        rep.error(*d.diagnostic);
      }
    }
    for (const auto& d : r.parse_errors) rep.error(d);
    errors += r.error_count();
  }
  return errors;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hott: a proof checker for homotopy type theory with coequalizers"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "emit diagnostics as newline-delimited JSON");
    sub->add_flag("--include-optional", o.include_optional, "also check files named optional_*");
    sub->add_flag("--no-color", o.no_color, "disable colored output");
  };

  CLI::App* check = app.add_subcommand("check", "check files in the given order");
  check->add_option("files", o.files, "source files, dependencies first")->required();
  add_common(check);

  CLI::App* nf = app.add_subcommand("nf", "print the normal form of a definition");
  nf->add_option("name", o.target, "definition to normalize")->required();
  nf->add_option("files", o.files, "source files, dependencies first")->required();
  add_common(nf);

  CLI::App* axioms = app.add_subcommand("axioms", "print the axioms a definition depends on");
  axioms->add_option("name", o.target, "definition to audit")->required();
  axioms->add_option("files", o.files, "source files, dependencies first")->required();
  add_common(axioms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    hott::Checker checker;
    if (check->parsed()) return run_check(checker, o, true) == 0 ? 0 : 1;

    std::size_t errors = run_check(checker, o, false);
    if (auto ax = hott::axiom_from_name(o.target)) {
      std::cout << hott::axiom_name(*ax) << "\n";
      return errors == 0 ? 0 : 1;
    }
    if (!checker.signature().contains(o.target)) {
      std::cerr << "error: no definition named '" << o.target << "'\n";
      return 1;
    }
    if (nf->parsed()) {
      std::cout << checker.print(checker.normal_form(o.target)) << "\n";
    } else {
      for (hott::Axiom a : checker.axioms_used(o.target)) std::cout << hott::axiom_name(a) << "\n";
    }
    return errors == 0 ? 0 : 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
