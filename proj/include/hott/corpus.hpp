#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "hott/typecheck.hpp"

namespace hott {

struct ManifestEntry {
  std::string file;
  bool optional = false;
};

// One file name per line; `optional:` marks files checked only on request.
// Blank lines and `--` comments are ignored.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

// name <TAB> printed type, one per line.
std::map<std::string, std::string> read_golden_types(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

struct FileResult {
  std::string file;
  std::vector<Diagnostic> parse_errors;
  std::vector<DeclReport> decls;

  std::size_t error_count() const;
};

FileResult check_file(Checker& checker, const std::filesystem::path& path);

// Checks the manifest's files in order from an empty signature.
struct CorpusResult {
  std::vector<FileResult> files;
  std::size_t error_count() const;
};

CorpusResult check_corpus(Checker& checker, const std::filesystem::path& dir, bool include_optional);

}  // namespace hott
