#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "arrowlab/scenario.hpp"

using namespace arrowlab;
using nlohmann::json;

namespace {

json load(const std::string& name) {
  std::ifstream in(std::string(ARROWLAB_SCENARIO_DIR) + "/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

}  // namespace

TEST_CASE("scenarios run, revalidate and reproduce") {
  for (const char* name : {"fsi_r33_holds.json", "fsi_r33_fails.json", "fss_dual_n4.json",
                           "fsi_pigeonhole_search.json", "product_fsi.json", "tree_transport.json",
                           "laws_stone.json", "fraisse_hp_ov.json", "fraisse_reasonable.json",
                           "fraisse_ap_fsi.json", "ordering_ofba.json"}) {
    CAPTURE(name);
    const auto s = load(name);
    const auto first = run_scenario(s);
    const auto second = run_scenario(s);
    CHECK(reproducible_payload(first.envelope) == reproducible_payload(second.envelope));
    const auto check = revalidate(first.envelope);
    CHECK_MESSAGE(check.valid, check.reason);
  }
}

TEST_CASE("exit codes follow verdicts") {
  CHECK(run_scenario(load("fsi_r33_holds.json")).exit_code == 0);
  CHECK(run_scenario(load("fsi_r33_fails.json")).exit_code == 1);
  auto s = load("fsi_r33_holds.json");
  RunOverrides ov;
  ov.budget = 3;
  CHECK(run_scenario(s, ov).exit_code == 2);
}

TEST_CASE("schema violations name their location") {
  auto s = load("fsi_r33_holds.json");
  s["colour"] = 1;
  CHECK_THROWS_WITH_AS(run_scenario(s), doctest::Contains("scenario.colour"), ScenarioError);
  CHECK_THROWS_WITH_AS(run_scenario(load("fsi_k1_malformed.json")), doctest::Contains("scenario.k"),
                       ScenarioError);
  s = load("fsi_r33_holds.json");
  s["category"] = {{"category", "FSI"}, {"p", 3}};
  CHECK_THROWS_WITH_AS(run_scenario(s), doctest::Contains("scenario.category"), ScenarioError);
  s = load("fsi_r33_holds.json");
  s["c"] = "six";
  CHECK_THROWS_WITH_AS(run_scenario(s), doctest::Contains("scenario.c"), ScenarioError);
}

TEST_CASE("revalidation catches tampering") {
  const auto bad = run_scenario(load("fsi_r33_fails.json")).envelope;
  auto flipped = bad;
  auto& color = flipped["certificate"]["coloring"][0][1];
  color = 3 - color.get<int>();
  CHECK_FALSE(revalidate(flipped).valid);

  const auto good = run_scenario(load("fsi_pigeonhole_search.json")).envelope;
  auto wrong = good;
  auto& entry = wrong["certificate"]["found"]["entries"][5];
  entry[1] = entry[1].get<int>() % 3 + 1;
  CHECK_FALSE(revalidate(wrong).valid);

  auto rehashed = bad;
  rehashed["scenario"]["c"] = 4;
  CHECK_FALSE(revalidate(rehashed).valid);

  auto truncated = bad;
  truncated["certificate"]["coloring"].erase(0);
  CHECK_FALSE(revalidate(truncated).valid);
}

TEST_CASE("reports are deterministic text") {
  const auto env = run_scenario(load("fsi_r33_fails.json")).envelope;
  const auto text = report(env);
  CHECK(text == report(env));
  CHECK(text.find("FSI[5] -> (FSI[3])^FSI[2]_2") != std::string::npos);
  CHECK(text.find("verdict      fails") != std::string::npos);
}

TEST_CASE("the sampling seed changes sampled colorings only") {
  const auto s = load("product_fsi.json");
  setenv("ARROWLAB_SEED", "0", 1);
  const auto a = run_scenario(s).envelope;
  setenv("ARROWLAB_SEED", "99", 1);
  const auto b = run_scenario(s).envelope;
  unsetenv("ARROWLAB_SEED");
  CHECK(a["certificate"]["entries"] != b["certificate"]["entries"]);
  CHECK(revalidate(b).valid);
  CHECK(a["verdict"] == b["verdict"]);
}

TEST_CASE("scenario hash ignores nothing but is stable") {
  const auto s = load("fsi_r33_holds.json");
  CHECK(scenario_hash(s) == scenario_hash(load("fsi_r33_holds.json")));
  auto t = s;
  t["k"] = 3;
  CHECK(scenario_hash(s) != scenario_hash(t));
}

TEST_CASE("scenario schema matches the accepted fields") {
  std::ifstream in(std::string(ARROWLAB_SCHEMA_DIR) + "/scenario.schema.json");
  REQUIRE(in.good());
  const auto schema = json::parse(in);
  int kinds = 0;
  for (const auto& branch : schema.at("oneOf")) {
    const auto kind = branch.at("properties").at("kind").at("const").get<std::string>();
    CAPTURE(kind);
    ++kinds;
    for (const auto& [key, unused] : branch.at("properties").items()) {
      if (key == "kind") continue;
      CAPTURE(key);
      try {
        run_scenario({{"kind", kind}, {key, nullptr}});
        FAIL("a scenario with only a null field ran");
      } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("unknown field") == std::string::npos);
      }
    }
    try {
      run_scenario({{"kind", kind}, {"not_a_field", 1}});
      FAIL("unknown field accepted");
    } catch (const ScenarioError& e) {
      CHECK(std::string(e.what()).rfind("scenario.not_a_field", 0) == 0);
    }
  }
  CHECK(kinds == 8);
}
