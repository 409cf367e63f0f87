#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace bog {

/// One `.bog` file with its `# invoke:` lines. `{}` in an invocation stands
/// for the file itself.
struct GoldenCase {
  std::filesystem::path spec;
  std::string id;  // tag/case
  std::vector<std::string> invocations;
};

struct CaseOutput {
  std::string text;
  std::string json;
};

/// Cases under `root` in sorted order.
std::vector<GoldenCase> load_corpus(const std::filesystem::path& root);

/// Runs every invocation in text and JSON mode. Paths in diagnostics are
/// rendered relative to the case directory.
CaseOutput run_case(const GoldenCase& c);

std::vector<CaseOutput> run_all(const std::vector<GoldenCase>& cases, std::size_t threads);

struct CorpusReport {
  std::size_t passed = 0;
  std::vector<std::string> failures;
};

/// Byte-wise comparison with the `.expected.txt` / `.expected.json` files;
/// the first divergence of each failing case is shown as a unified diff.
CorpusReport check_corpus(const std::vector<GoldenCase>& cases, const std::vector<CaseOutput>& outputs);

/// Writes the expected files.
void bless_corpus(const std::vector<GoldenCase>& cases, const std::vector<CaseOutput>& outputs);

/// `topic: tag/case [tag/case ...]` lines; reports topics without an existing
/// case and cases named but missing.
std::vector<std::string> check_manifest(const std::filesystem::path& root,
                                        const std::vector<GoldenCase>& cases);

std::vector<std::string> split_args(const std::string& line);

}  // namespace bog
