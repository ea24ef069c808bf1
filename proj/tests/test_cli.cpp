#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "imbalance/cli.hpp"

using imbalance::run_cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("shape command emits parseable json") {
  CliRun r = run({"shape", "4,2,1"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "shape");
  CHECK(doc["weight"] == 7);
  CHECK(doc["imbalance"] == -1);
  CHECK(doc["inv"].is_array());
  CHECK(doc["inv"][0] == 1);
}

TEST_CASE("poset-stats reads inline posets") {
  CliRun r = run({"poset-stats", "--poset", "n 3;0 1;0 2"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["n"] == 3);
  CHECK(doc["extensions"] == 2);
  CHECK(doc["consistent"] == true);
}

TEST_CASE("promotion and evacuation commands invert each other") {
  std::vector<std::string> base = {"--poset", "n 4;0 1;0 2;1 3", "--order", "0,2,1,3"};
  CliRun once = run([&] {
    std::vector<std::string> a = {"evacuate"};
    a.insert(a.end(), base.begin(), base.end());
    return a;
  }());
  CHECK(once.code == 0);
  auto doc = nlohmann::json::parse(once.out);
  std::string back_order;
  for (const auto& e : doc["output"]) {
    if (!back_order.empty()) back_order += ",";
    back_order += std::to_string(e.get<int>());
  }
  CliRun twice =
      run({"evacuate", "--poset", "n 4;0 1;0 2;1 3", "--order", back_order});
  CHECK(twice.code == 0);
  auto doc2 = nlohmann::json::parse(twice.out);
  CHECK(doc2["output"] == nlohmann::json::array({0, 2, 1, 3}));
}

TEST_CASE("verify command reports suite records") {
  CliRun r = run({"verify", "doubled-sum", "--max-m", "3"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["seed"] == 12345);
  REQUIRE(doc["suites"].size() == 1);
  CHECK(doc["suites"][0]["suite"] == "doubled-sum");
  CHECK(doc["suites"][0]["checks"] == 3);
  CHECK(doc["suites"][0]["records"][0]["identity"] == "doubled-sum");
  CHECK(doc["suites"][0]["records"][0]["pass"] == true);
}

TEST_CASE("identical invocations give identical bytes") {
  std::vector<std::string> args = {"verify", "chain-balance", "--samples", "40",
                                   "--seed", "99"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("error paths use distinct exit codes") {
  CHECK(run({"no-such-verb"}).code == 2);
  CHECK(run({"shape", "1,2,3"}).code == 2);            // increasing parts
  CHECK(run({"verify", "no-such-suite"}).code == 2);   // unknown suite
  CliRun capped = run({"--cap", "5", "poset-stats", "--poset", "n 5"});
  CHECK(capped.code == 3);  // the antichain has 120 extensions
  CHECK(run({"promote", "--poset", "n 2;0 1", "--order", "1,0"}).code == 2);
}

TEST_CASE("plain mode emits readable lines") {
  CliRun r = run({"shape", "2,2", "--plain"});
  CHECK(r.code == 0);
  CHECK(r.out.find("weight: 4") != std::string::npos);
  CHECK(r.out.find("inv poly:") != std::string::npos);
}
