#include "hott/corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hott {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  std::vector<ManifestEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line.rfind("--", 0) == 0) continue;
    ManifestEntry e;
    if (line.rfind("optional:", 0) == 0) {
      e.optional = true;
      line = trim(line.substr(9));
    }
    e.file = line;
    out.push_back(e);
  }
  return out;
}

std::map<std::string, std::string> read_golden_types(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.rfind("--", 0) == 0) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw std::runtime_error("malformed golden line: " + line);
    out[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return out;
}

std::size_t FileResult::error_count() const {
  std::size_t n = parse_errors.size();
  for (const auto& d : decls)
    if (!d.ok) ++n;
  return n;
}

FileResult check_file(Checker& checker, const std::filesystem::path& path) {
  FileResult r;
  r.file = path.string();
  std::string source = read_file(path);
  ParseResult parsed = parse_module(source, r.file);
  r.decls = checker.check_module(parsed.decls, r.file);
  r.parse_errors = std::move(parsed.diagnostics);
  return r;
}

std::size_t CorpusResult::error_count() const {
  std::size_t n = 0;
  for (const auto& f : files) n += f.error_count();
  return n;
}

CorpusResult check_corpus(Checker& checker, const std::filesystem::path& dir, bool include_optional) {
  CorpusResult out;
  for (const auto& e : read_manifest(dir / "manifest.txt")) {
    if (e.optional && !include_optional) continue;
    out.files.push_back(check_file(checker, dir / e.file));
  }
  return out;
}

}  // namespace hott
