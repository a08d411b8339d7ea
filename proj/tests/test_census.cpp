#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pebble/pebble.hpp"
#include "oracles.hpp"

#include <sstream>
#include <string>

using namespace pebble;

namespace {

std::string census_text(int n, bool oriented_only, const CensusFilters& filters) {
  std::ostringstream out;
  run_census(n, oriented_only, filters, out);
  return out.str();
}

}  // namespace

TEST_CASE("record json round trip preserves every field") {
  Digraph g = build_mixed2(1).graph;
  CensusRecord rec = make_census_record(g);
  CensusRecord back = record_from_json(record_to_json(rec));
  CHECK(back.canonical_form == rec.canonical_form);
  CHECK(back.n == rec.n);
  CHECK(back.arc_count == rec.arc_count);
  CHECK(back.oriented == rec.oriented);
  CHECK(back.strong_diameter == rec.strong_diameter);
  CHECK(back.strong_connectivity == rec.strong_connectivity);
  CHECK(back.pi == rec.pi);
  CHECK(back.per_root_pi == rec.per_root_pi);
  CHECK(back.graph_class == rec.graph_class);
  REQUIRE(back.witness_config.has_value());
  CHECK(back.witness_config->counts == rec.witness_config->counts);
  CHECK(back.arcs == rec.arcs);
}

TEST_CASE("record field order matches the interchange format") {
  CensusRecord rec = make_census_record(Digraph::from_arcs(2, {{0, 1}, {1, 0}}));
  std::string line = record_to_json(rec).dump();
  const char* keys[] = {"canonical_form", "n",   "arc_count",    "oriented",
                        "strong_diameter", "strong_connectivity", "pi",
                        "per_root_pi",     "class", "witness_config", "graph"};
  size_t pos = 0;
  for (const char* k : keys) {
    size_t at = line.find(std::string("\"") + k + "\":", pos);
    REQUIRE(at != std::string::npos);
    pos = at;
  }
}

TEST_CASE("records for graphs that are not strongly connected carry null pi") {
  CensusRecord rec = make_census_record(Digraph::from_arcs(2, {{0, 1}}));
  CHECK_FALSE(rec.strong_diameter.has_value());
  CHECK_FALSE(rec.pi.has_value());
  CHECK_FALSE(rec.graph_class.has_value());
  CHECK_FALSE(rec.witness_config.has_value());
  CHECK(rec.per_root_pi.empty());
  std::string line = record_to_json(rec).dump();
  CHECK(line.find("\"pi\":null") != std::string::npos);
}

TEST_CASE("census of all two-vertex digraphs") {
  std::istringstream in(census_text(2, false, {}));
  auto records = read_census(in);
  REQUIRE(records.size() == 3);  // empty, single arc, bidirected pair
  int with_pi = 0;
  for (const auto& rec : records) {
    CHECK(rec.n == 2);
    if (rec.pi) {
      ++with_pi;
      CHECK(rec.arc_count == 2);
      CHECK_FALSE(rec.oriented);
      CHECK(*rec.pi == 2);
      CHECK(*rec.graph_class == "Class0");
    }
  }
  CHECK(with_pi == 1);
}

TEST_CASE("three-vertex oriented strongly connected diameter-2 census is the directed triangle") {
  CensusFilters filters;
  filters.strongly_connected = true;
  filters.diameter = 2;
  std::istringstream in(census_text(3, true, filters));
  auto records = read_census(in);
  REQUIRE(records.size() == 1);
  const CensusRecord& rec = records[0];
  CHECK(rec.arc_count == 3);
  CHECK(rec.oriented);
  CHECK(rec.strong_connectivity == 1);
  CHECK(rec.pi == 4);
  CHECK(rec.per_root_pi == std::vector<int>{4, 4, 4});
  CHECK(rec.graph_class == "Class1");
  REQUIRE(rec.witness_config.has_value());
  CHECK(rec.witness_config->size() == 3);
}

TEST_CASE("census output is deterministic") {
  CensusFilters filters;
  filters.strongly_connected = true;
  CHECK(census_text(4, true, filters) == census_text(4, true, filters));
  CHECK(census_text(3, false, {}) == census_text(3, false, {}));
}

TEST_CASE("witness configurations replay as unsolvable at a pi-attaining root") {
  CensusFilters filters;
  filters.strongly_connected = true;
  std::istringstream in(census_text(4, true, filters));
  for (const auto& rec : read_census(in)) {
    REQUIRE(rec.pi.has_value());
    REQUIRE(rec.witness_config.has_value());
    CHECK(rec.witness_config->size() == static_cast<uint64_t>(*rec.pi) - 1);
    Digraph g = rec.graph();
    for (int r = 0; r < rec.n; ++r)
      if (rec.per_root_pi[static_cast<size_t>(r)] == *rec.pi) {
        CHECK_FALSE(oracle::solvable_brute(g, *rec.witness_config, r));
        break;
      }
  }
}

TEST_CASE("connectivity and diameter filters narrow the yield") {
  CensusFilters diam2;
  diam2.strongly_connected = true;
  diam2.diameter = 2;
  CensusFilters conn2 = diam2;
  conn2.min_connectivity = 2;
  std::ostringstream a, b;
  size_t wide = run_census(4, false, diam2, a);
  size_t narrow = run_census(4, false, conn2, b);
  CHECK(wide > narrow);
  std::istringstream in(b.str());
  for (const auto& rec : read_census(in)) {
    CHECK(rec.strong_diameter == 2);
    CHECK(rec.strong_connectivity >= 2);
  }
}

TEST_CASE("read_census rejects malformed lines") {
  std::istringstream in("{\"canonical_form\":\"zz\"\n");
  CHECK_THROWS_AS(read_census(in), InputError);
}

TEST_CASE("theorem verification over the four-vertex census") {
  CensusFilters filters;
  filters.strongly_connected = true;
  std::istringstream oriented_in(census_text(4, true, filters));
  auto oriented_records = read_census(oriented_in);
  std::istringstream general_in(census_text(4, false, filters));
  auto general_records = read_census(general_in);

  for (const char* id : {"prop_3orless", "thm_noBiN+1", "thm_mixed2_bound",
                         "thm_two3no2", "family_f_soundness",
                         "family_f_completeness", "thm_dboundupper"}) {
    auto rep = verify_theorem(oriented_records, id);
    CHECK(rep.pass);
    CHECK(rep.theorem_id == id);
  }
  auto diam2 = verify_theorem(general_records, "prop_3orless");
  CHECK(diam2.pass);
  CHECK(diam2.checked_count > 0);
  auto upper = verify_theorem(general_records, "thm_dboundupper");
  CHECK(upper.pass);
  CHECK(upper.checked_count == general_records.size());
}

TEST_CASE("theorem violations carry a reproduction command") {
  // fabricate a record claiming pi above the diameter-based ceiling
  CensusRecord rec = make_census_record(Digraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}));
  rec.pi = 1000;
  auto rep = verify_theorem({rec}, "thm_dboundupper");
  REQUIRE_FALSE(rep.pass);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].canonical_form == rec.canonical_form);
  CHECK(rep.violations[0].repro.find("pebble number") == 0);
  CHECK(rep.violations[0].repro.find("\"arcs\"") != std::string::npos);
}

TEST_CASE("unknown theorem ids are rejected") {
  CHECK_THROWS_AS(verify_theorem({}, "thm_unknown"), InputError);
}
