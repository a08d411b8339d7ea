#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pebble/canonical.hpp"
#include "pebble/constructions.hpp"
#include "pebble/digraph.hpp"
#include "pebble/enumerate.hpp"
#include "pebble/family_f.hpp"
#include "pebble/pebbling.hpp"

namespace pebble {

/// One enumerated graph's invariant profile. Graphs that are not strongly
/// connected keep their row with null pi so downstream filters see the full
/// universe.
struct CensusRecord {
  std::string canonical_form;
  int n = 0;
  int arc_count = 0;
  bool oriented = false;
  std::optional<int> strong_diameter;
  int strong_connectivity = 0;
  std::optional<int> pi;
  std::vector<int> per_root_pi;
  std::optional<std::string> graph_class;
  std::optional<Configuration> witness_config;
  std::vector<std::pair<int, int>> arcs;

  Digraph graph() const { return Digraph::from_arcs(n, arcs); }
};

inline nlohmann::ordered_json record_to_json(const CensusRecord& rec) {
  nlohmann::ordered_json j;
  j["canonical_form"] = rec.canonical_form;
  j["n"] = rec.n;
  j["arc_count"] = rec.arc_count;
  j["oriented"] = rec.oriented;
  j["strong_diameter"] = rec.strong_diameter ? nlohmann::ordered_json(*rec.strong_diameter) : nlohmann::ordered_json(nullptr);
  j["strong_connectivity"] = rec.strong_connectivity;
  j["pi"] = rec.pi ? nlohmann::ordered_json(*rec.pi) : nlohmann::ordered_json(nullptr);
  j["per_root_pi"] = rec.per_root_pi;
  j["class"] = rec.graph_class ? nlohmann::ordered_json(*rec.graph_class) : nlohmann::ordered_json(nullptr);
  if (rec.witness_config)
    j["witness_config"] = rec.witness_config->counts;
  else
    j["witness_config"] = nullptr;
  auto arcs = nlohmann::ordered_json::array();
  for (auto [u, v] : rec.arcs) arcs.push_back({u, v});
  j["graph"] = std::move(arcs);
  return j;
}

inline CensusRecord record_from_json(const nlohmann::json& j) {
  CensusRecord rec;
  rec.canonical_form = j.at("canonical_form").get<std::string>();
  rec.n = j.at("n").get<int>();
  rec.arc_count = j.at("arc_count").get<int>();
  rec.oriented = j.at("oriented").get<bool>();
  if (!j.at("strong_diameter").is_null()) rec.strong_diameter = j["strong_diameter"].get<int>();
  rec.strong_connectivity = j.at("strong_connectivity").get<int>();
  if (!j.at("pi").is_null()) rec.pi = j["pi"].get<int>();
  rec.per_root_pi = j.at("per_root_pi").get<std::vector<int>>();
  if (!j.at("class").is_null()) rec.graph_class = j["class"].get<std::string>();
  if (!j.at("witness_config").is_null())
    rec.witness_config = Configuration(j["witness_config"].get<std::vector<uint32_t>>());
  for (const auto& arc : j.at("graph")) rec.arcs.emplace_back(arc[0].get<int>(), arc[1].get<int>());
  return rec;
}

struct CensusFilters {
  bool strongly_connected = false;
  std::optional<int> diameter;
  std::optional<int> min_connectivity;
};

inline CensusRecord make_census_record(const Digraph& g, uint64_t budget = default_node_budget()) {
  CensusRecord rec;
  rec.canonical_form = canonical_form(g).hex();
  rec.n = g.order();
  rec.arc_count = g.arc_count();
  rec.oriented = is_oriented(g);
  rec.strong_diameter = strong_diameter(g);
  rec.strong_connectivity = g.order() >= 2 ? strong_connectivity(g) : 0;
  rec.arcs = g.arcs();
  if (rec.strong_diameter) {
    PebblingNumberResult pn = pebbling_number(g, budget);
    rec.pi = pn.pi;
    for (const auto& rr : pn.per_root) rec.per_root_pi.push_back(rr.rooted_pi);
    rec.graph_class = classify_pi(pn.pi, g.order()).to_string();
    for (const auto& rr : pn.per_root)
      if (rr.rooted_pi == pn.pi) {
        rec.witness_config = rr.max_unsolvable_witness;
        break;
      }
  }
  return rec;
}

/// Streams the enumerated census as line-delimited records in canonical
/// order; returns the record count. Deterministic, so re-runs are
/// byte-identical.
inline size_t run_census(int n, bool oriented_only, const CensusFilters& filters,
                         std::ostream& out, bool allow_slow = false,
                         uint64_t budget = default_node_budget()) {
  DigraphPredicate pred = [&](const Digraph& g) {
    auto diam = strong_diameter(g);
    if (filters.strongly_connected && !diam) return false;
    if (filters.diameter && (!diam || *diam != *filters.diameter)) return false;
    if (filters.min_connectivity &&
        (g.order() < 2 || strong_connectivity(g) < *filters.min_connectivity))
      return false;
    return true;
  };
  size_t count = 0;
  for (const Digraph& g : enumerate_digraphs(n, oriented_only, pred, allow_slow)) {
    out << record_to_json(make_census_record(g, budget)).dump() << "\n";
    ++count;
  }
  return count;
}

struct TheoremViolation {
  std::string canonical_form;
  std::string detail;
  std::string repro;
};

struct TheoremReport {
  std::string theorem_id;
  std::string scope;
  size_t checked_count = 0;
  std::vector<TheoremViolation> violations;
  bool pass = true;
};

inline std::vector<CensusRecord> read_census(std::istream& in) {
  std::vector<CensusRecord> records;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      records.push_back(record_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw InputError("malformed census record at line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

namespace detail {

inline std::string repro_command(const CensusRecord& rec, const std::string& subcommand) {
  return "pebble " + subcommand + " --graph <(printf '%s' '" +
         serialize_digraph(rec.graph()).substr(0, serialize_digraph(rec.graph()).size() - 1) + "')";
}

}  // namespace detail

/// Applies a theorem's hypothesis as a scope filter over census records and
/// asserts its conclusion per record, re-invoking the solver where a record
/// does not carry enough data.
inline TheoremReport verify_theorem(const std::vector<CensusRecord>& records,
                                    const std::string& theorem_id,
                                    uint64_t budget = default_node_budget()) {
  TheoremReport report;
  report.theorem_id = theorem_id;
  auto violate = [&](const CensusRecord& rec, const std::string& detail, const std::string& subcommand) {
    report.violations.push_back({rec.canonical_form, detail, detail::repro_command(rec, subcommand)});
  };

  if (theorem_id == "prop_3orless") {
    report.scope = "strongly connected, strong diameter 2";
    for (const auto& rec : records) {
      if (!rec.strong_diameter || *rec.strong_diameter != 2 || !rec.witness_config) continue;
      ++report.checked_count;
      for (uint32_t count : rec.witness_config->counts)
        if (count > 3) {
          violate(rec, "witness configuration has a vertex with " + std::to_string(count) + " pebbles", "number");
          break;
        }
    }
  } else if (theorem_id == "thm_noBiN+1") {
    report.scope = "oriented, strongly connected, strong diameter 2";
    for (const auto& rec : records) {
      if (!rec.oriented || !rec.strong_diameter || *rec.strong_diameter != 2 || !rec.pi) continue;
      ++report.checked_count;
      if (*rec.pi > rec.n + 1)
        violate(rec, "pi = " + std::to_string(*rec.pi) + " > n+1 = " + std::to_string(rec.n + 1), "number");
    }
  } else if (theorem_id == "thm_mixed2_bound") {
    report.scope = "strongly connected, strong diameter 2";
    for (const auto& rec : records) {
      if (!rec.strong_diameter || *rec.strong_diameter != 2 || !rec.pi) continue;
      ++report.checked_count;
      if (!(Rational(*rec.pi) < Rational(3 * rec.n, 2)))
        violate(rec, "pi = " + std::to_string(*rec.pi) + " >= 3n/2", "number");
    }
  } else if (theorem_id == "thm_two3no2") {
    report.scope = "oriented, strong diameter 2, connectivity >= 2, Class-1";
    for (const auto& rec : records) {
      if (!rec.oriented || !rec.strong_diameter || *rec.strong_diameter != 2) continue;
      if (rec.strong_connectivity < 2 || !rec.graph_class || *rec.graph_class != "Class1") continue;
      ++report.checked_count;
      try {
        Two3No2Report sweep = verify_two3no2(rec.graph(), budget);
        for (const auto& v : sweep.violations) {
          std::string cfg = "[";
          for (size_t i = 0; i < v.configuration.counts.size(); ++i)
            cfg += (i ? "," : "") + std::to_string(v.configuration.counts[i]);
          cfg += "]";
          violate(rec, "root " + std::to_string(v.root) + " config " + cfg + ": " + v.detail, "classify");
        }
      } catch (const BudgetExceeded& e) {
        violate(rec, std::string("budget-exceeded: ") + e.what(), "classify");
      }
    }
  } else if (theorem_id == "family_f_soundness") {
    report.scope = "oriented, strongly connected, strong diameter 2, connectivity >= 2, family member";
    for (const auto& rec : records) {
      if (!rec.oriented || !rec.strong_diameter || *rec.strong_diameter != 2) continue;
      if (rec.strong_connectivity < 2 || !rec.pi) continue;
      Digraph g = rec.graph();
      auto labeling = find_family_f_labeling(g);
      if (!labeling) continue;
      ++report.checked_count;
      if (*rec.pi != rec.n + 1)
        violate(rec, "family member with pi = " + std::to_string(*rec.pi) + " != n+1", "classify");
      else if (!verify_f_propositions(g, *labeling).all_pass)
        violate(rec, "family member failing a structural proposition", "family-f check");
    }
  } else if (theorem_id == "family_f_completeness") {
    report.scope = "oriented, strongly connected, strong diameter 2, connectivity >= 2, Class-1";
    for (const auto& rec : records) {
      if (!rec.oriented || !rec.strong_diameter || *rec.strong_diameter != 2) continue;
      if (rec.strong_connectivity < 2 || !rec.graph_class || *rec.graph_class != "Class1") continue;
      ++report.checked_count;
      if (!find_family_f_labeling(rec.graph()))
        violate(rec, "Class-1 graph admits no family labeling", "family-f check");
    }
  } else if (theorem_id == "thm_dboundupper") {
    report.scope = "strongly connected";
    for (const auto& rec : records) {
      if (!rec.strong_diameter || !rec.pi) continue;
      ++report.checked_count;
      long long bound = bound_dboundupper(rec.n, *rec.strong_diameter).ceil_value;
      if (*rec.pi > bound)
        violate(rec, "pi = " + std::to_string(*rec.pi) + " > " + std::to_string(bound), "number");
    }
  } else {
    throw InputError("unknown theorem id: " + theorem_id);
  }

  report.pass = report.violations.empty();
  return report;
}

}  // namespace pebble
