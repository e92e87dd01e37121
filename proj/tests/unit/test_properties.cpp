#include <doctest.h>

#include <random>
#include <sstream>

#include "support.hpp"

using namespace hott;

namespace {

Checker& prelude() {
  static Checker c = [] {
    Checker c;
    test::load_prelude(c);
    return c;
  }();
  return c;
}

TermPtr renormalize(const TermPtr& t) { return quote(0, eval(Env(), t)); }

// Re-elaborates a printed core term against a type.
void recheck(Checker& c, const TermPtr& t, const ValuePtr& type) {
  c.check_closed(*parse_term(c.print(t)), type);
}

std::vector<std::string> expected_codes(const std::string& source) {
  std::istringstream in(source);
  std::string line;
  std::getline(in, line);
  const std::string tag = "-- expect:";
  REQUIRE(line.rfind(tag, 0) == 0);
  std::istringstream codes(line.substr(tag.size()));
  std::vector<std::string> out;
  for (std::string c; codes >> c;) out.push_back(c);
  return out;
}

std::vector<std::filesystem::path> files_in(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".hott") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

// Random closed terms of type Nat over a small arithmetic vocabulary.
class NatTerms {
 public:
  explicit NatTerms(unsigned seed) : rng_(seed) {}

  std::string term(int depth, int vars) {
    int pick = std::uniform_int_distribution<int>(0, depth <= 0 ? 1 : 6)(rng_);
    switch (pick) {
      case 0: return vars > 0 && coin() ? "x" + std::to_string(below(vars)) : "zero";
      case 1: return "zero";
      case 2: return "suc (" + term(depth - 1, vars) + ")";
      case 3: return "add (" + term(depth - 1, vars) + ") (" + term(depth - 1, vars) + ")";
      case 4: {
        std::string v = "x" + std::to_string(vars);
        return "((\\" + v + ". " + term(depth - 1, vars + 1) + ") : Nat -> Nat) (" + term(depth - 1, vars) + ")";
      }
      case 5:
        return "((" + term(depth - 1, vars) + ", " + term(depth - 1, vars) + ") : (n : Nat) * Nat).2";
      default:
        return "nind0 (\\k. Nat) (" + term(depth - 1, vars) + ") (\\k h. suc h) (" + term(depth - 1, vars) + ")";
    }
  }

 private:
  std::mt19937 rng_;
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
};

}  // namespace

TEST_CASE("normalization is idempotent on every prelude body") {
  Checker& c = prelude();
  std::size_t n = 0;
  for (const auto& k : c.signature().decls()) {
    TermPtr once = c.normal_form(k->name);
    TermPtr twice = renormalize(once);
    INFO(k->name);
    CHECK(alpha_equal(once, twice));
    ++n;
  }
  CHECK(n > 50);
}

TEST_CASE("normalized prelude bodies re-check against their types") {
  Checker& c = prelude();
  for (const auto& k : c.signature().decls()) {
    INFO(k->name);
    CHECK_NOTHROW(recheck(c, c.normal_form(k->name), k->type_value));
  }
}

TEST_CASE("every corpus file round-trips through the printer") {
  std::vector<std::filesystem::path> files = files_in(test::corpus_dir());
  CHECK(files.size() >= 10);
  for (const auto& path : files) {
    INFO(path.string());
    ParseResult a = parse_module(read_file(path));
    REQUIRE(a.diagnostics.empty());
    ParseResult b = parse_module(print_module(a.decls));
    REQUIRE(b.diagnostics.empty());
    REQUIRE(a.decls.size() == b.decls.size());
    for (std::size_t i = 0; i < a.decls.size(); ++i) CHECK(surface_equal(a.decls[i], b.decls[i]));
    CHECK(print_module(b.decls) == print_module(a.decls));
  }
}

TEST_CASE("parseable bad files round-trip through the printer") {
  for (const auto& path : files_in(test::bad_dir())) {
    ParseResult a = parse_module(read_file(path));
    if (!a.diagnostics.empty()) continue;
    INFO(path.string());
    ParseResult b = parse_module(print_module(a.decls));
    REQUIRE(a.decls.size() == b.decls.size());
    for (std::size_t i = 0; i < a.decls.size(); ++i) CHECK(surface_equal(a.decls[i], b.decls[i]));
  }
}

TEST_CASE("each ill-typed golden file reproduces its diagnostic codes") {
  std::vector<std::filesystem::path> files = files_in(test::bad_dir());
  CHECK(files.size() == 20);
  for (const auto& path : files) {
    INFO(path.string());
    std::string source = read_file(path);
    std::vector<std::string> want = expected_codes(source);
    CHECK(test::codes_of(source) == want);
    CHECK(test::codes_of(source) == want);
  }
}

TEST_CASE("random arithmetic terms: idempotence, subject reduction and round trip") {
  Checker c;
  test::load(c, "def add (m n : Nat) : Nat := nind0 (\\k. Nat) n (\\k h. suc h) m\n");
  ValuePtr nat = eval(Env(), mk::node(Tag::Nat, {}));
  NatTerms gen(20240601);
  for (int i = 0; i < 200; ++i) {
    std::string src = gen.term(4, 0);
    INFO(src);
    SurfacePtr s = parse_term(src);
    CHECK(surface_equal(*s, *parse_term(print_surface(*s))));
    TermPtr t = c.check_closed(*s, nat);
    TermPtr n = renormalize(t);
    CHECK(alpha_equal(n, renormalize(n)));
    CHECK_NOTHROW(recheck(c, n, nat));
  }
}
