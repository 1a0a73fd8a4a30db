#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "stag/generators.hpp"
#include "stag/params.hpp"

using namespace stag;
using namespace stag::testing;

namespace {

const ParamVerdict& verdict(const ParamReport& r, const std::string& name) {
  for (const auto& v : r.verdicts)
    if (v.name == name) return v;
  FAIL("missing verdict " << name);
  return r.verdicts.front();
}

}  // namespace

TEST_SUITE("params") {
  TEST_CASE("C5") {
    const auto r = param_report(fixture("C5"));
    CHECK(r.max_degree_aux == 4);
    CHECK(r.min_degree_aux == 4);
    CHECK(verdict(r, "max_degree").rhs == 4);
    CHECK(verdict(r, "max_degree").slack == 0);
    CHECK(verdict(r, "min_degree").rhs == 2);
    CHECK(r.diameter_aux == 1);
    CHECK(r.clique_number_aux == 5);
    CHECK(r.circumference == 5);
    CHECK(r.max_minimal_cut == 2);
    CHECK(r.all_hold());
  }

  TEST_CASE("trees skip the clique relation") {
    const auto r = param_report(fixture("P3"));
    CHECK(r.aux_vertices == 1);
    CHECK(r.max_degree_aux == 0);
    CHECK(r.min_degree_aux == 0);
    CHECK(r.diameter_aux == 0);
    CHECK_FALSE(r.circumference.has_value());
    CHECK_FALSE(verdict(r, "clique_number").applicable);
    CHECK(r.all_hold());
  }

  TEST_CASE("diamond") {
    const auto r = param_report(fixture("diamond"));
    CHECK(r.aux_vertices == 8);
    CHECK(verdict(r, "max_degree").rhs == 6);
    CHECK(verdict(r, "min_degree").rhs == 4);
    CHECK(r.max_degree_aux == 5);
    CHECK(r.min_degree_aux == 4);
    CHECK(r.all_hold());
  }

  TEST_CASE("fixtures match the frozen values") {
    for (const auto& [name, want] : expected_values()) {
      CAPTURE(name);
      const auto r = param_report(fixture(name));
      CHECK(r.aux_vertices == want.trees);
      CHECK(r.diameter_aux == want.diameter);
      CHECK(r.exchange_diameter == want.diameter);
      CHECK(r.clique_number_aux == want.clique_number);
      CHECK(r.all_hold());
    }
  }

  TEST_CASE("relations hold on random connected graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const int n = 2 + static_cast<int>(seed % 6);
      const Graph g = random_connected_graph(n, std::min(n - 1 + static_cast<int>(seed % 5), n * (n - 1) / 2), seed);
      const auto r = param_report(g);
      CHECK(r.all_hold());
      CHECK(r.diameter_aux == r.exchange_diameter);
    }
  }

  TEST_CASE("reports render") {
    const auto r = param_report(fixture("K4"));
    const auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j["clique_number_aux"] == 4);
    CHECK(j["verdicts"].size() == r.verdicts.size());
    CHECK(j["verdicts"][0]["status"] == "holds");
    CHECK(report_to_text(r).find("holds") != std::string::npos);
    CHECK(nlohmann::json::parse(report_to_json(param_report(fixture("P3"))))["circumference"].is_null());
  }
}
