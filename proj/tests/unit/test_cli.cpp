#include <sstream>
#include <string>
#include <vector>

#include "avgindep/cli.hpp"
#include "doctest.h"
#include "json.hpp"

#ifndef AVGINDEP_DATA_DIR
#error "AVGINDEP_DATA_DIR must point at the bundled data directory"
#endif

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "avgindep");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = avgindep::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kSixVertexTree = std::string("file:") + AVGINDEP_DATA_DIR + "/six_vertex_tree.txt";

}  // namespace

TEST_CASE("avg") {
  auto r = invoke({"avg", "--graph", "star:4"});
  CHECK(r.code == 0);
  CHECK(r.out == "13/9\n");
  r = invoke({"avg", "--graph", "empty:6", "--alpha", "1/1"});
  CHECK(r.code == 0);
  CHECK(r.out == "3/1\n");
  r = invoke({"avg", "--graph", kSixVertexTree});
  CHECK(r.out == "55/26\n");
  r = invoke({"avg", "--graph", "star:3", "--alpha", "2", "--json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["I"] == "11/1");
  CHECK(doc["T"] == "14/1");
  CHECK(doc["avg"] == "14/11");
}

TEST_CASE("poly") {
  auto r = invoke({"poly", "--graph", "path:4"});
  CHECK(r.code == 0);
  CHECK(r.out == "[1, 4, 3]\n");
  r = invoke({"--json", "poly", "--graph", "star:4"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["coefficients"] == nlohmann::json::parse(R"(["1","4","3","1"])"));
  CHECK(doc["I"] == "9");
  CHECK(doc["T"] == "13");
}

TEST_CASE("scans") {
  auto r = invoke({"edge-scan", "--graph", kSixVertexTree, "--json"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["avi"] == "55/26");
  bool saw_e1 = false, saw_e2 = false;
  for (const auto& row : doc["rows"]) {
    if (row["edge"] == nlohmann::json::parse("[1,2]")) saw_e1 = row["after"] == "19/9";
    if (row["edge"] == nlohmann::json::parse("[2,3]")) saw_e2 = row["after"] == "83/34";
  }
  CHECK(saw_e1);
  CHECK(saw_e2);

  r = invoke({"vertex-scan", "--graph", "star:4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("increase") != std::string::npos);
  CHECK(r.out.find("decrease") != std::string::npos);

  r = invoke({"edge-scan", "--graph", "empty:3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("edge") != std::string::npos);
}

TEST_CASE("verify") {
  auto r = invoke({"verify", "cases", "--json"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["status"] == "verified");
  CHECK(doc["table"]["rows"].size() == 105);
  CHECK(doc["facts"]["zero_margin_cases"] == "1");

  r = invoke({"verify", "star-max", "--max-n", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verified") != std::string::npos);

  r = invoke({"--jobs", "2", "verify", "bounds", "--max-n", "5", "--json"});
  CHECK(r.code == 0);
  doc = nlohmann::json::parse(r.out);
  CHECK(doc["checked"] == 1 + 2 + 8 + 64 + 1024);

  CHECK(invoke({"verify", "path-min", "--max-n", "10"}).code == 0);
  CHECK(invoke({"verify", "quotient", "--max-n", "8"}).code == 0);
  CHECK(invoke({"verify", "vertex-removal", "--max-n", "4"}).code == 0);
  CHECK(invoke({"verify", "aux"}).code == 0);
  CHECK(invoke({"verify", "path-formula", "--max-n", "50"}).code == 0);
}

TEST_CASE("counterexample exit code") {
  const auto r = invoke({"weighted-scan", "--n", "7", "--alpha", "10", "--json"});
  CHECK(r.code == 1);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["status"] == "counterexample");
  CHECK(doc["witness"]["edges"].size() == 6);
  CHECK(invoke({"weighted-scan", "--n", "8", "--alpha", "1"}).code == 0);
}

TEST_CASE("trees and ctable") {
  auto r = invoke({"trees", "--n", "10", "--count-only"});
  CHECK(r.out == "106\n");
  r = invoke({"trees", "--n", "4"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
  r = invoke({"ctable", "--max-n", "5", "--json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["table"]["rows"].size() == 5);
}

TEST_CASE("usage and input errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"avg"}).code == 2);
  CHECK(invoke({"avg", "--graph", "star:4", "--bogus"}).code == 2);
  CHECK(invoke({"avg", "--graph", "cycle:4"}).code == 2);
  CHECK(invoke({"avg", "--graph", "star:4", "--alpha", "0"}).code == 2);
  CHECK(invoke({"avg", "--graph", "star:4", "--alpha", "-1/2"}).code == 2);
  CHECK(invoke({"avg", "--graph", "file:/no/such/file"}).code == 2);
  CHECK(invoke({"trees", "--n", "19"}).code == 2);
  CHECK(invoke({"verify", "bounds", "--max-n", "9"}).code == 2);
  CHECK(invoke({"verify", "path-formula", "--max-n", "3"}).code == 2);
  CHECK(invoke({"weighted-scan", "--n", "13", "--alpha", "2"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const auto a = invoke({"--jobs", "1", "verify", "path-min", "--max-n", "9", "--json"});
  const auto b = invoke({"--jobs", "4", "verify", "path-min", "--max-n", "9", "--json"});
  CHECK(a.out == b.out);
}
