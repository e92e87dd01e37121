// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any required criterion fails. The stretch line never affects the exit code.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "hott/corpus.hpp"

namespace fs = std::filesystem;
using namespace hott;

namespace {

const fs::path kCorpus = HOTT_CORPUS_DIR;
const fs::path kStretch = HOTT_STRETCH_FILE;
const std::string kCli = HOTT_CLI;
const std::string kUnitTests = HOTT_UNIT_TESTS;

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& cmd) {
  Run r;
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (!p) throw std::runtime_error("cannot run " + cmd);
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string files_arg(bool include_optional) {
  std::string out;
  for (const auto& e : read_manifest(kCorpus / "manifest.txt"))
    if (!e.optional || include_optional) out += " " + (kCorpus / e.file).string();
  return out;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

void report(const std::string& label, const Verdict& v) {
  std::cout << (v.pass ? "PASS" : "FAIL") << "  " << label;
  if (!v.detail.empty()) std::cout << ": " << v.detail;
  std::cout << std::endl;
}

// Shared state: the required corpus checked once through the library.
struct Corpus {
  Checker checker;
  CorpusResult result;
  std::map<std::string, std::string> golden;

  const DeclReport* find(const std::string& name) const {
    for (const auto& f : result.files)
      for (const auto& d : f.decls)
        if (d.name == name) return &d;
    return nullptr;
  }
};

// Names that must be present for each item of the required corpus.
const std::vector<std::string> kRequiredNames = {
    "lemma_3_1",     "wild_cat",      "ObjC",          "HomC",          "catC",         "ObjD",
    "HomD",          "catD",          "Phi0",          "Phi1",          "phi1_equiv",   "phi1_id",
    "phi1_comp",     "lemma_3_4",     "lemma_3_5",     "thm_2_2",       "thm_1_4_ind",  "thm_1_4_beta1",
    "thm_1_4_beta2", "po_rel",        "Pushout",       "thm_4_1_indP",  "thm_4_1_indQ", "thm_4_1_beta1",
    "thm_4_1_beta2", "thm_4_2",       "thm_5_2",       "emb_to_ap",     "ap_to_emb"};

Verdict criterion1(Corpus& c) {
  Verdict v;
  auto start = std::chrono::steady_clock::now();
  Run r = run(kCli + " check --no-color" + files_arg(false));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.status != 0) v.fail("check exited with status " + std::to_string(r.status));
  if (secs >= 120) v.fail("check took " + std::to_string(secs) + "s");
  for (const auto& name : kRequiredNames)
    if (!c.golden.count(name)) v.fail("no golden type for " + name);
  for (const auto& [name, type] : c.golden) {
    const DeclReport* d = c.find(name);
    if (!d || !d->ok) {
      v.fail(name + " did not check");
    } else if (d->type != type) {
      v.fail(name + " has type " + d->type);
    }
  }
  if (v.pass) {
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << c.golden.size() << " golden types, " << secs << "s";
    v.detail = s.str();
  }
  return v;
}

Verdict require_asserts(const Corpus& c, const std::vector<std::string>& names) {
  Verdict v;
  for (const auto& n : names) {
    const DeclReport* d = c.find(n);
    if (!d) {
      v.fail(n + " is missing");
    } else if (d->kind != DeclKind::ConvAssert) {
      v.fail(n + " is not a conversion assertion");
    } else if (!d->ok) {
      v.fail(n + ": " + d->diagnostic->message);
    }
  }
  return v;
}

Verdict criterion2(const Corpus& c) { return require_asserts(c, {"cind_beta0", "cind_beta1", "po_elim_inl"}); }

Verdict criterion3(const Corpus& c) {
  Verdict v;
  for (const char* n : {"thm_1_4_beta1", "thm_1_4_beta2"}) {
    const DeclReport* d = c.find(n);
    auto g = c.golden.find(n);
    if (!d || !d->ok) v.fail(std::string(n) + " did not check");
    else if (g == c.golden.end() || g->second != d->type) v.fail(std::string(n) + " has an unexpected type");
  }
  return v;
}

Verdict stretch(Corpus& c) {
  Verdict v;
  FileResult r = check_file(c.checker, kStretch);
  if (r.error_count() != 0) {
    const auto& d = r.parse_errors.empty() ? *r.decls.front().diagnostic : r.parse_errors.front();
    v.fail("[" + d.code + "] " + d.message);
  }
  return v;
}

Verdict criterion4(const Corpus& c) {
  Verdict v;
  const std::set<std::string> allowed = {"funext", "univalence", "cgluebeta"};
  std::string files = files_arg(false);
  auto axioms = [&](const std::string& name) {
    Run r = run(kCli + " axioms --no-color " + name + files);
    if (r.status != 0) v.fail("axioms " + name + " exited with status " + std::to_string(r.status));
    return lines(r.out);
  };
  for (const auto& [name, type] : c.golden)
    for (const auto& a : axioms(name))
      if (!allowed.count(a)) v.fail(name + " uses " + a);
  for (const char* name : {"concat", "ap", "transport"})
    if (!axioms(name).empty()) v.fail(std::string(name) + " uses an axiom");
  auto phi0 = axioms("Phi0");
  if (std::find(phi0.begin(), phi0.end(), "univalence") == phi0.end()) v.fail("Phi0 does not use univalence");
  return v;
}

Verdict criterion5() {
  Verdict v;
  Run r = run(kUnitTests + " --source-file=*test_properties.cpp --no-colors");
  if (r.status != 0) v.fail("property suite failed");
  for (const auto& l : lines(r.out))
    if (l.find("test cases:") != std::string::npos) v.detail = l.substr(l.find("test cases:"));
  return v;
}

Verdict criterion6() {
  Verdict v;
  Run with = run(kCli + " check --no-color --include-optional" + files_arg(true));
  if (with.status != 0) v.fail("optional files do not check");
  Run without = run(kCli + " check --no-color" + files_arg(true));
  if (without.status != 0) v.fail("check without the flag failed");
  if (without.out.find("ok loop_space_initial") != std::string::npos ||
      without.out.find("ok naive_counterexample") != std::string::npos)
    v.fail("optional files were checked without the flag");
  if (with.out.find("ok loop_space_initial") == std::string::npos ||
      with.out.find("ok naive_counterexample") == std::string::npos)
    v.fail("optional theorems missing from the flagged run");
  return v;
}

}  // namespace

int main() {
  try {
    Corpus c;
    c.result = check_corpus(c.checker, kCorpus, false);
    c.golden = read_golden_types(kCorpus / "golden_types.txt");

    std::vector<std::pair<std::string, Verdict>> results = {
        {"1 required corpus checks with golden types", criterion1(c)},
        {"2 judgmental beta of cind and the pushout eliminator", criterion2(c)},
        {"3 beta terms of the based path induction principle", criterion3(c)},
        {"4 axiom audit", criterion4(c)},
        {"5 kernel property suite", criterion5()},
        {"6 optional files behind the flag", criterion6()},
    };
    bool ok = true;
    for (const auto& [label, v] : results) {
      report(label, v);
      ok = ok && v.pass;
    }
    Verdict s = stretch(c);
    std::cout << "STRETCH " << (s.pass ? "PASS" : "FAIL") << "  judgmental first beta rule (non-blocking)";
    if (!s.detail.empty()) std::cout << ": " << s.detail;
    std::cout << std::endl;
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cout << "FAIL  acceptance harness: " << e.what() << std::endl;
    return 1;
  }
}
