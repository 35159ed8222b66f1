#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "osp/cli.hpp"

using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = osp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = call(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return json::parse(r.out);
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = "osp_cli_test_" + name + ".json";
  std::ofstream(path) << body;
  return path;
}

const std::vector<std::vector<std::string>> kCommands = {
    {"weyl", "--family", "odd", "--n", "2", "--list"},
    {"bruhat", "--family", "even", "--n", "2", "--w", "1b,2", "--v", "2b,1b"},
    {"cells", "--space", "grass", "--N", "9", "--k", "3", "--label", "4,6,8"},
    {"cells", "--space", "flag", "--N", "5"},
    {"poincare", "--space", "flag", "--N", "5"},
    {"poincare", "--space", "grass", "--N", "7", "--k", "2"},
    {"orbits", "--space", "grass", "--n", "2", "--k", "2"},
    {"orbits", "--space", "flag", "--n", "2"},
    {"dim-odd", "--lambda", "1,1", "--n", "1"},
    {"dim-sp", "--lambda", "1,1", "--n", "2"},
    {"branch", "--lambda", "2,1", "--n", "1"},
    {"shtepin", "--lambda", "1,1", "--n", "1"},
    {"h0", "--lambda", "1,1", "--N", "5"},
    {"oracle", "--lambda", "2,1", "--N", "5"},
    {"bott", "--eta", "0,0,0,0,5", "--k", "1"},
    {"koszul", "--k", "3", "--n", "3"},
    {"fano", "--k", "3", "--n", "3"},
    {"lie", "--n", "2"},
    {"plucker", "--k", "3", "--n", "4"},
    {"pleth", "--j", "3", "--rank", "4"},
    {"divisor", "--k", "2", "--N", "9"},
    {"verify", "--level", "quick"},
};

}  // namespace

TEST_CASE("documented examples") {
  auto p = call_json({"poincare", "--space", "flag", "--N", "5"});
  CHECK(p["result"]["coeffs"] == json({1, 3, 5, 6, 5, 3, 1}));
  CHECK(p["provenance"]["mode"] == "enumeration");

  auto d = call_json({"dim-odd", "--lambda", "1,1", "--n", "1"});
  CHECK(d["result"]["dimension"] == 2);
  CHECK(call({"dim-odd", "--lambda", "1,1", "--n", "1"}).out == "dimension: 2\n");

  auto f = call_json({"fano", "--k", "3", "--n", "3"});
  CHECK(f["result"]["dim_first"] == 9);
  CHECK(f["result"]["dim_second"] == 9);
  CHECK(f["result"]["rank_h_first"] == 36);
  CHECK(f["result"]["rank_h_second"] == 32);
  CHECK(f["result"]["extrapolated"] == false);

  auto c = call_json({"cells", "--space", "grass", "--N", "9", "--k", "3", "--label", "4,3b,1b"});
  CHECK(c["result"]["dimension"] == 12);
  CHECK(c["result"]["determined_entries"] == 3);

  auto o = call_json({"oracle", "--lambda", "2,1", "--N", "5"});
  CHECK(o["result"]["agree"] == true);
  CHECK(o["provenance"]["mode"] == "oracle");

  auto b = call_json({"bott", "--eta", "0,0,0,0,1,0,0", "--k", "3"});
  CHECK(b["result"]["vanishes"] == true);
}

TEST_CASE("every command emits the documented JSON shape, round-trips and is deterministic") {
  for (const auto& command : kCommands) {
    auto args = command;
    args.push_back("--json");
    const auto first = call(args);
    INFO(command.front());
    REQUIRE(first.code == 0);
    const auto doc = json::parse(first.out);
    CHECK(doc.size() == 3);
    CHECK(doc["input"].is_object());
    CHECK(doc["result"].is_object());
    CHECK(doc["provenance"]["paper_anchor"].is_string());
    const auto mode = doc["provenance"]["mode"].get<std::string>();
    CHECK((mode == "closed-form" || mode == "enumeration" || mode == "oracle"));
    CHECK(doc.dump(2) + "\n" == first.out);
    CHECK(call(args).out == first.out);
    const auto text = call(command);
    CHECK(text.code == 0);
    CHECK_FALSE(text.out.empty());
  }
}

TEST_CASE("validation errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"dim-odd", "--lambda", "1,2", "--n", "1"}).code == 2);
  CHECK(call({"dim-odd", "--lambda", "1,1"}).code == 2);
  CHECK(call({"dim-odd", "--lambda", "1,1", "--n", "1", "--bogus", "3"}).code == 2);
  CHECK(call({"bruhat", "--family", "even", "--n", "2", "--w", "1,1", "--v", "1,2"}).code == 2);
  CHECK(call({"cells", "--space", "flag", "--N", "5", "--label", "0b,1,2"}).code == 2);
  CHECK(call({"poincare", "--space", "grass", "--N", "4", "--k", "3"}).code == 2);
  CHECK(call({"oracle", "--lambda", "1,1,1,1,1", "--N", "3"}).code == 2);
  CHECK(call({"koszul", "--k", "4", "--n", "3"}).code == 2);
  CHECK(call({"orbits", "--space", "cone", "--n", "2"}).code == 2);
  CHECK(call({"verify", "--level", "medium"}).code == 2);
  const auto r = call({"fano", "--k", "1", "--n", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") == 0);
}

TEST_CASE("help exits with 0") {
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"poincare", "--help"}).code == 0);
}

TEST_CASE("verify level from the environment and the config file") {
  setenv("OSP_VERIFY_LEVEL", "full", 1);
  auto full = call_json({"verify", "--level", "quick"});
  unsetenv("OSP_VERIFY_LEVEL");
  CHECK(full["input"]["level"] == "full");
  CHECK(full["result"]["all_passed"] == true);
  CHECK(full["result"]["checks"].size() == 14);

  const auto good = write_temp("good", R"({"lie_max_n": 1, "oracle_max_weight": 2})");
  auto configured = call_json({"verify", "--config", good});
  CHECK(configured["result"]["all_passed"] == true);

  const auto unknown = write_temp("unknown", R"({"lie_max": 1})");
  CHECK(call({"verify", "--config", unknown}).code == 2);
  const auto capped = write_temp("capped", R"({"lie_max_n": 9})");
  CHECK(call({"verify", "--config", capped}).code == 2);
  const auto broken = write_temp("broken", "{");
  CHECK(call({"verify", "--config", broken}).code == 2);
  CHECK(call({"verify", "--config", "does-not-exist.json"}).code == 2);
  for (const auto& path : {good, unknown, capped, broken}) std::remove(path.c_str());
}
