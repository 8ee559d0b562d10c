#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"
#include "terwb/pipeline.hpp"

using namespace terwb;

namespace {

AnalysisReport run(const std::string& name, const std::string& field, bool all_basepoints = false) {
  AnalysisOptions opt;
  opt.field = FieldSpec::parse(field);
  opt.all_basepoints = all_basepoints;
  return analyze(find_catalog(name)->scheme, name, opt);
}

}  // namespace

TEST_SUITE_BEGIN("pipeline");

TEST_CASE("cycle(4) over GF(2)") {
  auto r = run("cycle-4", "p=2");
  CHECK_FALSE(r.counterexample());
  CHECK(r.dim_t == 10);
  CHECK(r.r == 1u);
  CHECK(r.radical_dim == 5u);
  CHECK(r.nilpotency_index == 3u);
  CHECK(r.basic_dim == 5u);
  CHECK(r.gldim == 2u);
  CHECK(r.domdim == "2");
  CHECK(r.cartan == std::vector<std::vector<std::size_t>>{{1, 1}, {1, 2}});
  CHECK(r.cell_chain == std::vector<std::size_t>{0, 9, 10});
  CHECK(r.semisimple_verdict == "not-semisimple-certified");
  CHECK(r.psi_verified == true);
}

TEST_CASE("cycle(4) over the rationals") {
  auto r = run("cycle-4", "q");
  CHECK_FALSE(r.counterexample());
  CHECK(r.semisimple_verdict == "semisimple-certified");
  CHECK(r.cellular_verified == true);
  CHECK(r.heredity_verified == true);
  CHECK(r.cell_chain.size() == 3);  // chain length 2
  CHECK(r.gldim == 0u);
  CHECK(r.domdim == "infinite");
}

TEST_CASE("thin(S3) over GF(2) is semisimple") {
  auto r = run("thin-S3", "p=2");
  CHECK_FALSE(r.counterexample());
  CHECK(r.semisimple_verdict == "semisimple-certified");
  CHECK(r.dim_t == 36);
}

TEST_CASE("wreath-2-3 over GF(2) has two classes and dominant dimension 0") {
  auto r = run("wreath-2-3", "p=2", true);
  CHECK_FALSE(r.counterexample());
  CHECK(r.r == 2u);
  CHECK(r.basic_dim == 11u);
  CHECK(r.domdim == "0");
  CHECK(r.basepoint_dims == std::vector<std::size_t>(6, 18));
}

TEST_CASE("non-quasi-thin schemes stop after the closure") {
  auto k4 = make_scheme({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
  AnalysisOptions opt;
  auto r = analyze(k4, "K4", opt);
  REQUIRE(r.notice);
  CHECK_FALSE(r.counterexample());
  auto gens = support::terwilliger_generators(support::relation_matrix(k4), 1, 0);
  CHECK(r.dim_t == support::closure_dim_mod(gens, 4, 2));
  CHECK_FALSE(r.r);
  CHECK(r.to_json()["basis-verified"].is_null());
}

TEST_CASE("bad base point") {
  AnalysisOptions opt;
  opt.basepoint = 9;
  CHECK_THROWS_AS(analyze(cycle_scheme(4), "c4", opt), std::out_of_range);
}

TEST_CASE("JSON report is schema-stable and deterministic") {
  auto a = run("cycle-5", "p=3").to_json();
  auto b = run("cycle-5", "p=3").to_json();
  CHECK(a.dump() == b.dump());
  for (const auto* key : {"scheme-id", "n", "d", "valencies", "classification", "field", "base-point", "dim-T",
                          "R-size", "S-size", "r", "class-sizes", "basis-verified", "mult-table-verified",
                          "cellular-verified", "heredity-verified", "radical-dim", "nilpotency-index",
                          "semisimple-verdict", "basic-dim", "psi-verified", "cartan", "gldim", "domdim", "timings",
                          "checks"})
    CHECK_MESSAGE(a.contains(key), key);
  CHECK(a["timings"].is_null());
  CHECK(a["dim-T"] == 13);
  CHECK(a["domdim"] == "infinite");
  CHECK(run("cycle-5", "p=2").to_json()["domdim"] == 2);
  for (const auto& c : a["checks"]) CHECK_FALSE(c.contains("witness"));
}

TEST_CASE("timings are recorded only on request") {
  AnalysisOptions opt;
  opt.timings = true;
  auto r = analyze(cycle_scheme(4), "c4", opt);
  CHECK_FALSE(r.timings.empty());
  CHECK(r.to_json()["timings"].is_object());
}

TEST_CASE("text report") {
  auto text = run("cycle-4", "p=2").to_text();
  CHECK(text.find("dim T = 10") != std::string::npos);
  CHECK(text.find("all checks passed") != std::string::npos);
}

TEST_SUITE_END();
