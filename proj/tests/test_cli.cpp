#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bog/cli.hpp"

using namespace bog;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result fbcp(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string spec_path() {
  static const std::string path = [] {
    std::string p = "test_cli_reps.bog";
    std::ofstream f(p);
    f << "symbol t\nsymbol u\n"
         "rep pi1 { atom sym:t mult 1 }\n"
         "rep pi2 { atom sym:u mult 1 }\n"
         "rep z5 { atom 1/5 mult 1 ; atom 1 mult 1 }\n"
         "rep z52 { atom 2/5 mult 1 ; atom 1 mult 1 }\n"
         "rep z3 { atom 1/3 mult 1 }\n";
    return p;
  }();
  return path;
}

}  // namespace

TEST_CASE("compare emits one JSON verdict") {
  auto r = fbcp({"compare", spec_path(), "pi1", "pi2", "--json"});
  CHECK(r.code == 0);
  auto doc = Json::parse(r.out);
  CHECK(doc["kind"] == "Isomorphic");
  CHECK(doc["rule"] == rule::kSingleIrrationalPair);
  CHECK(doc["rechecked"] == true);
  CHECK(doc.contains("certificate"));
  CHECK(doc.contains("human_summary"));
}

TEST_CASE("freedim prints the exact value") {
  auto r = fbcp({"freedim", "mat(1)@1/3 + mat(1)@1/3 + mat(1)@1/3"});
  CHECK(r.code == 0);
  CHECK(r.out == "2/3\n");
  CHECK(fbcp({"freedim", "mat(3)@1"}).out == "8/9\n");
  CHECK(fbcp({"freedim", "lfr(x)@1"}).code == 2);
}

TEST_CASE("exit codes") {
  auto missing = fbcp({"classify", spec_path(), "missing"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("unknown representation") != std::string::npos);

  auto usage = fbcp({"classify"});
  CHECK(usage.code == 2);
  CHECK(usage.err.find("spec grammar") != std::string::npos);

  std::ofstream("test_cli_bad.bog") << "rep c { atom 5/3 mult 1 }\n";
  auto parse = fbcp({"classify", "test_cli_bad.bog", "c"});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("test_cli_bad.bog:1:") != std::string::npos);

  CHECK(fbcp({"classify", "no_such_file.bog", "x"}).code == 1);
  CHECK(fbcp({"cumulants", "--order", "0"}).code == 2);
}

TEST_CASE("json error documents") {
  auto r = fbcp({"--json", "classify", spec_path(), "missing"});
  CHECK(r.code == 1);
  auto doc = Json::parse(r.out);
  CHECK(doc["error"]["code"] == "UnknownRepresentation");
}

TEST_CASE("basis change replays") {
  auto r = fbcp({"basis-change", spec_path(), "z5", "z52", "--json"});
  CHECK(r.code == 0);
  auto doc = Json::parse(r.out);
  CHECK(doc["verified"] == true);
  CHECK(doc["target"]["weights"] == Json({"2/5", "0", "0"}));
  CHECK(fbcp({"basis-change", spec_path(), "z5", "z3"}).code == 1);
}

TEST_CASE("cumulants and nc") {
  auto doc = Json::parse(fbcp({"cumulants", "--order", "12", "--json"}).out);
  CHECK(doc["moments"][12] == "132");
  CHECK(doc["round_trip"] == true);
  doc = Json::parse(fbcp({"cumulants", "--order", "6", "--ov", "2", "--reduction", "2", "--json"}).out);
  CHECK(doc["round_trip"] == true);
  CHECK(doc["reduction"]["holds"] == true);
  doc = Json::parse(fbcp({"nc", "--n", "6", "--json"}).out);
  CHECK(doc["count"] == 132);
  CHECK(doc["catalan"] == "132");
}

TEST_CASE("text output is deterministic") {
  auto a = fbcp({"classify", spec_path(), "z3"});
  auto b = fbcp({"classify", spec_path(), "z3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("r: 4/3") != std::string::npos);
}
