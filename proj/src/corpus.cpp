#include "bog/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "bog/cli.hpp"
#include "bog/errors.hpp"
#include "bog/parallel.hpp"

namespace bog {

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + p.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write(const fs::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + p.string() + "'");
  out << s;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  if (from.empty()) return s;
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// first differing line with three lines of context on each side
std::string first_divergence(const std::string& name, const std::string& expected, const std::string& actual) {
  auto a = lines_of(expected), b = lines_of(actual);
  std::size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  std::size_t from = i >= 3 ? i - 3 : 0;
  std::size_t to_a = std::min(a.size(), i + 4), to_b = std::min(b.size(), i + 4);
  std::ostringstream os;
  os << "--- " << name << " (expected)\n+++ " << name << " (actual)\n";
  os << "@@ -" << from + 1 << "," << to_a - from << " +" << from + 1 << "," << to_b - from << " @@\n";
  for (std::size_t k = from; k < i; ++k) os << " " << a[k] << "\n";
  for (std::size_t k = i; k < to_a; ++k) os << "-" << a[k] << "\n";
  for (std::size_t k = i; k < to_b; ++k) os << "+" << b[k] << "\n";
  return os.str();
}

fs::path expected_path(const GoldenCase& c, const char* ext) {
  fs::path p = c.spec;
  p.replace_extension(ext);
  return p;
}

}  // namespace

std::vector<std::string> split_args(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, any = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
      any = true;
    } else if (!quoted && (ch == ' ' || ch == '\t')) {
      if (any) out.push_back(cur);
      cur.clear();
      any = false;
    } else {
      cur += ch;
      any = true;
    }
  }
  if (any) out.push_back(cur);
  return out;
}

std::vector<GoldenCase> load_corpus(const fs::path& root) {
  std::vector<GoldenCase> cases;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".bog") continue;
    GoldenCase c;
    c.spec = entry.path();
    fs::path rel = fs::relative(entry.path(), root);
    rel.replace_extension();
    c.id = rel.generic_string();
    for (const auto& line : lines_of(slurp(c.spec))) {
      const std::string tag = "# invoke:";
      if (line.rfind(tag, 0) == 0) c.invocations.push_back(line.substr(tag.size() + 1));
    }
    cases.push_back(std::move(c));
  }
  std::sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return cases;
}

CaseOutput run_case(const GoldenCase& c) {
  const std::string path = c.spec.string();
  const std::string shown = c.spec.filename().string();
  CaseOutput result;
  Json docs = Json::array();
  for (const auto& invocation : c.invocations) {
    std::vector<std::string> args = split_args(invocation);
    for (auto& a : args) a = replace_all(a, "{}", path);

    std::ostringstream out, err;
    int code = run(args, out, err);
    result.text += "$ fbcp " + replace_all(invocation, "{}", shown) + "\n";
    result.text += replace_all(out.str(), path, shown);
    for (const auto& line : lines_of(replace_all(err.str(), path, shown))) {
      result.text += "! " + line + "\n";
    }
    result.text += "[exit " + std::to_string(code) + "]\n\n";

    args.push_back("--json");
    std::ostringstream jout, jerr;
    int jcode = run(args, jout, jerr);
    Json entry{{"invoke", replace_all(invocation, "{}", shown)}, {"exit", jcode}};
    std::string body = replace_all(jout.str(), path, shown);
    entry["output"] = body.empty() ? Json(nullptr) : Json::parse(body);
    docs.push_back(entry);
  }
  result.json = docs.dump(2) + "\n";
  return result;
}

std::vector<CaseOutput> run_all(const std::vector<GoldenCase>& cases, std::size_t threads) {
  std::vector<CaseOutput> outputs(cases.size());
  parallel_for(cases.size(), threads, [&](std::size_t i) { outputs[i] = run_case(cases[i]); });
  return outputs;
}

CorpusReport check_corpus(const std::vector<GoldenCase>& cases, const std::vector<CaseOutput>& outputs) {
  CorpusReport report;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    std::string failure;
    for (const auto& [ext, actual] : {std::pair{".expected.txt", &outputs[i].text},
                                      std::pair{".expected.json", &outputs[i].json}}) {
      fs::path p = expected_path(cases[i], ext);
      if (!fs::exists(p)) {
        failure += cases[i].id + ": missing " + p.filename().string() + "\n";
        continue;
      }
      std::string expected = slurp(p);
      if (expected != *actual) failure += first_divergence(cases[i].id + ext, expected, *actual);
    }
    if (cases[i].invocations.empty()) failure += cases[i].id + ": no invocations\n";
    if (failure.empty()) {
      ++report.passed;
    } else {
      report.failures.push_back(failure);
    }
  }
  return report;
}

void bless_corpus(const std::vector<GoldenCase>& cases, const std::vector<CaseOutput>& outputs) {
  for (std::size_t i = 0; i < cases.size(); ++i) {
    write(expected_path(cases[i], ".expected.txt"), outputs[i].text);
    write(expected_path(cases[i], ".expected.json"), outputs[i].json);
  }
}

std::vector<std::string> check_manifest(const fs::path& root, const std::vector<GoldenCase>& cases) {
  std::set<std::string> ids;
  for (const auto& c : cases) ids.insert(c.id);
  std::vector<std::string> problems;
  std::size_t topics = 0;
  for (const auto& line : lines_of(slurp(root / "MANIFEST"))) {
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      problems.push_back("malformed manifest line: " + line);
      continue;
    }
    ++topics;
    std::string topic = line.substr(0, colon);
    auto named = split_args(line.substr(colon + 1));
    if (named.empty()) problems.push_back(topic + ": no case listed");
    for (const auto& id : named) {
      if (!ids.count(id)) problems.push_back(topic + ": case " + id + " does not exist");
    }
  }
  if (topics == 0) problems.push_back("manifest lists no topics");
  return problems;
}

}  // namespace bog
