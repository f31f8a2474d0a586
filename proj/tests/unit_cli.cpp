// End-to-end analysis driver, corpus plumbing, and both report formats.

#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "reesd/analyze.hpp"
#include "reesd/report.hpp"

using namespace reesd;

namespace {

RunConfig ex61_cfg(long pmax) {
  RunConfig cfg;
  cfg.ideal_text = {"x^5", "x^2*y^3", "y^5"};
  cfg.pmax = pmax;
  return cfg;
}

}  // namespace

TEST_CASE("configuration validation surfaces as an invalid analysis") {
  RunConfig bad = ex61_cfg(1);
  auto r1 = run_analyze(bad);
  CHECK(!r1.valid);
  CHECK(!r1.error.empty());

  RunConfig none;
  auto r2 = run_analyze(none);
  CHECK(!r2.valid);
  CHECK(r2.error == "no ideal source given");

  RunConfig two;
  two.ideal_text = {"x^2", "y^2"};
  auto r3 = run_analyze(two);
  CHECK(!r3.valid);
  CHECK(r3.error == "exactly three polynomials are required");

  RunConfig junk;
  junk.ideal_text = {"x^2", "x*y", "x +"};
  auto r4 = run_analyze(junk);
  CHECK(!r4.valid);
  CHECK(r4.error.find("parse error") != std::string::npos);

  RunConfig invalid;
  invalid.ideal_text = {"x^4", "x^2*y^2", "x*y^3"};
  auto r5 = run_analyze(invalid);
  CHECK(!r5.valid);
  CHECK(r5.error == "height < 2: common factor x1");
}

TEST_CASE("full analysis of the running example at pmax 2") {
  RunConfig cfg = ex61_cfg(2);
  cfg.thC = true;
  auto r = run_analyze(cfg);
  REQUIRE(r.valid);
  CHECK(r.d == 5);
  CHECK(r.mu == 2);
  CHECK(r.routes_match);
  CHECK(r.cor26_ok);
  CHECK(r.all_passed);
  CHECK(r.global_failures.empty());
  REQUIRE(r.per_p.size() == 1);

  const PReport& rep = r.per_p[0];
  CHECK(rep.p == 2);
  CHECK(rep.ok());
  CHECK(rep.holonomic);
  CHECK(rep.thA_ok);
  CHECK(rep.thB_ok);
  CHECK(rep.thC_ok);
  CHECK(rep.thD_ok);
  CHECK(rep.duality_ok);
  REQUIRE(rep.bf.has_value());
  CHECK(rep.bf->factored == "(s)(s + 1)(s + 2)");
  CHECK(rep.bf->coeffs == std::vector<std::string>{"0", "2", "3", "1"});
  CHECK(rep.bf->support_match);
  CHECK(rep.bf->product_match);
  REQUIRE(rep.derham.has_value());
  CHECK(rep.derham->stabilized);
  CHECK(rep.derham->dim == 4);

  CHECK(r.table.k(2, 2) == 2);
  CHECK(!r.f_str.empty());
  CHECK(r.g_str.size() == 2);
  CHECK(r.L_str.size() == 2);
  CHECK(r.phi_str.size() == 3);
  CHECK(!r.timings_sec.empty());
}

TEST_CASE("analysis accepts the seeded random source") {
  RunConfig cfg;
  cfg.random_seed = 1;
  cfg.random_mu = 1;
  cfg.random_d = 3;
  cfg.pmax = 2;
  auto r = run_analyze(cfg);
  REQUIRE(r.valid);
  CHECK(r.d == 3);
  CHECK(r.mu == 1);
  CHECK(r.all_passed);
}

TEST_CASE("json report carries the full schema") {
  RunConfig cfg = ex61_cfg(2);
  cfg.thC = true;
  auto r = run_analyze(cfg);
  auto doc = nlohmann::json::parse(emit_report(r, "json"));

  CHECK(doc["input"]["f"].size() == 3);
  CHECK(doc["input"]["d"] == 5);
  CHECK(doc["input"]["mu"] == 2);
  CHECK(doc["phi"].size() == 3);
  CHECK(doc["phi"][0].size() == 2);
  CHECK(doc["g"].size() == 2);
  CHECK(doc["L"].size() == 2);
  CHECK(doc["table"]["2,2"] == 2);
  CHECK(doc["table"].contains("2,0"));
  CHECK(doc["min_gens"].size() == 3);  // generators with p <= pmax = 2
  CHECK(doc["bfunctions"]["2"]["factored"] == "(s)(s + 1)(s + 2)");
  CHECK(doc["bfunctions"]["2"]["coeffs"] ==
        nlohmann::json({"0", "2", "3", "1"}));
  CHECK(doc["bfunctions"]["2"]["components"].is_array());
  CHECK(doc["oracles"]["thA"] == true);
  CHECK(doc["oracles"]["thB"] == true);
  CHECK(doc["oracles"]["thD"] == true);
  CHECK(doc["oracles"]["duality"] == true);
  CHECK(doc["oracles"]["thC"]["ok"] == true);
  CHECK(doc["oracles"]["thC"]["2"]["dim"] == 4);
  CHECK(doc["oracles"]["thC"]["2"]["stabilized"] == true);
  CHECK(doc["oracles"]["thC"]["2"].contains("N"));
  CHECK(doc["routes_match"] == true);
  CHECK(doc["all_passed"] == true);
  CHECK(doc["timings"].is_object());
  CHECK(doc["version"]["name"] == "rees-dmod");
  CHECK(doc["version"]["prng"] == "splitmix64-v1");

  // Disabled oracle keys stay out of the report.
  RunConfig lean = ex61_cfg(2);
  lean.thA = lean.thC = lean.duality = false;
  auto doc2 = nlohmann::json::parse(emit_report(run_analyze(lean), "json"));
  CHECK(!doc2["oracles"].contains("thA"));
  CHECK(!doc2["oracles"].contains("thC"));
  CHECK(!doc2["oracles"].contains("duality"));
  CHECK(doc2["oracles"].contains("thB"));
  CHECK(doc2["oracles"].contains("thD"));
}

TEST_CASE("invalid runs emit an error document") {
  RunConfig bad;
  bad.ideal_text = {"x^4", "x^2*y^2", "x*y^3"};
  auto r = run_analyze(bad);
  auto doc = nlohmann::json::parse(emit_report(r, "json"));
  CHECK(doc.contains("error"));
  CHECK(doc.contains("version"));
  CHECK(!doc.contains("table"));

  std::string text = emit_report(r, "text");
  CHECK(text.find("height < 2") != std::string::npos);
}

TEST_CASE("text report prints the session lines") {
  auto r = run_analyze(ex61_cfg(2));
  std::string text = emit_report(r, "text");
  CHECK(text.find("d = 5") != std::string::npos);
  CHECK(text.find("(s)(s + 1)(s + 2)") != std::string::npos);
  CHECK(text.find("dim K_{p,q}") != std::string::npos);
  CHECK(text.find("minimal generators (p,q): (1,2) (1,3) (2,1)") !=
        std::string::npos);
  CHECK(text.find("result: PASS") != std::string::npos);
  CHECK_THROWS(emit_report(r, "yaml"));
}

TEST_CASE("corpus spec parsing") {
  const std::string spec = R"({"runs": [
    {"ideal": ["x^5", "x^2*y^3", "y^5"], "pmax": 3,
     "oracles": ["thA", "thB", "thC", "thD", "duality"],
     "bcap": 40, "derham_budget": 32, "jobs": 2},
    {"random": {"mu": 1, "d": 4, "seed": 9, "bound": 3}}
  ]})";
  auto cfgs = parse_corpus_spec(spec);
  REQUIRE(cfgs.size() == 2);
  CHECK(cfgs[0].ideal_text.size() == 3);
  CHECK(cfgs[0].pmax == 3);
  CHECK(cfgs[0].thA);
  CHECK(cfgs[0].thC);
  CHECK(cfgs[0].bcap == 40);
  CHECK(cfgs[0].derham_budget == 32);
  CHECK(cfgs[0].jobs == 2);
  CHECK(cfgs[1].random_seed.has_value());
  CHECK(cfgs[1].random_mu == 1);
  CHECK(cfgs[1].random_d == 4);
  CHECK(cfgs[1].random_bound == 3);
  // Oracle selection replaces the default set.
  const std::string only_b = R"({"runs": [
    {"ideal": ["x^2", "x*y", "y^2"], "oracles": ["thB"]}
  ]})";
  auto lean = parse_corpus_spec(only_b);
  REQUIRE(lean.size() == 1);
  CHECK(lean[0].thB);
  CHECK(!lean[0].thA);
  CHECK(!lean[0].thD);
  CHECK(!lean[0].duality);

  CHECK_THROWS_AS((void)parse_corpus_spec("{"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_corpus_spec(R"({"no_runs": []})"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)parse_corpus_spec(R"({"runs": []})"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)parse_corpus_spec(R"({"runs": [{"pmax": 3}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)parse_corpus_spec(
          R"({"runs": [{"ideal": ["x","y","x*y"], "oracles": ["thX"]}]})"),
      std::invalid_argument);
}

TEST_CASE("corpus runner reports one line per run and keeps going") {
  std::vector<RunConfig> specs;
  RunConfig good;
  good.ideal_text = {"x^2", "x*y", "y^2"};
  good.pmax = 2;
  specs.push_back(good);
  RunConfig invalid;
  invalid.ideal_text = {"x^4", "x^2*y^2", "x*y^3"};
  specs.push_back(invalid);

  auto sum = corpus_runner(specs);
  CHECK(sum.total == 2);
  CHECK(sum.passed == 1);
  CHECK(!sum.all_passed());
  REQUIRE(sum.lines.size() == 2);
  CHECK(sum.lines[0] == "run 1: PASS (d=2, mu=1, pmax=2)");
  CHECK(sum.lines[1] == "run 2: INVALID (height < 2: common factor x1)");

  CHECK_THROWS_AS((void)corpus_runner({}), std::invalid_argument);
}
