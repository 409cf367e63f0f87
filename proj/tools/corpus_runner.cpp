#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "bog/corpus.hpp"
#include "bog/errors.hpp"

int main(int argc, char** argv) {
  std::string root = "corpus";
  bool bless = false, determinism = false;
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  CLI::App app{"runs the golden corpus", "corpus_runner"};
  app.add_option("ROOT", root);
  app.add_flag("--bless", bless, "rewrite the expected files");
  app.add_flag("--determinism", determinism, "also compare runs across thread counts");
  app.add_option("--threads", threads)->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  try {
    auto cases = bog::load_corpus(root);
    auto outputs = bog::run_all(cases, threads);
    if (bless) {
      bog::bless_corpus(cases, outputs);
      std::cout << "blessed " << cases.size() << " cases\n";
      return 0;
    }
    int status = 0;
    for (const auto& p : bog::check_manifest(root, cases)) {
      std::cout << "manifest: " << p << "\n";
      status = 1;
    }
    auto report = bog::check_corpus(cases, outputs);
    for (const auto& f : report.failures) std::cout << f;
    std::cout << report.passed << "/" << cases.size() << " cases match\n";
    if (!report.failures.empty()) status = 1;
    if (determinism) {
      auto serial = bog::run_all(cases, 1);
      auto again = bog::run_all(cases, threads);
      std::size_t same = 0;
      for (std::size_t i = 0; i < cases.size(); ++i) {
        bool ok = serial[i].text == outputs[i].text && serial[i].json == outputs[i].json &&
                  again[i].text == outputs[i].text && again[i].json == outputs[i].json;
        if (!ok) std::cout << "nondeterministic: " << cases[i].id << "\n";
        same += ok;
      }
      std::cout << same << "/" << cases.size() << " cases identical across runs and thread counts\n";
      if (same != cases.size()) status = 1;
    }
    return status;
  } catch (const bog::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
