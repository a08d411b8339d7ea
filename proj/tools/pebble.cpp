// Command-line front end: solvability queries, pebbling numbers, extremal
// constructions, family-F search, censuses and theorem verification.
//
// Exit codes: 0 success/pass, 1 theorem violation or non-member/unsolvable
// verdict where membership was being asserted, 2 input error, 3 budget
// exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pebble/pebble.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pebble::InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pebble::InputError("cannot write file: " + path);
  out << content;
}

pebble::Digraph load_graph(const std::string& path) {
  return pebble::parse_digraph(read_file(path));
}

// "[0,3,0]" or shorthand "1:3,4:2" (unmentioned vertices hold 0)
pebble::Configuration parse_config_spec(const std::string& spec, int n) {
  pebble::Configuration c(n);
  std::string trimmed = spec;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.erase(0, 1);
  if (!trimmed.empty() && trimmed.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(trimmed);
    } catch (const nlohmann::json::exception& e) {
      throw pebble::InputError(std::string("malformed configuration: ") + e.what());
    }
    if (!j.is_array() || static_cast<int>(j.size()) != n)
      throw pebble::InputError("configuration must list exactly " + std::to_string(n) + " counts");
    for (int v = 0; v < n; ++v) {
      if (!j[static_cast<size_t>(v)].is_number_integer() || j[static_cast<size_t>(v)].get<long long>() < 0)
        throw pebble::InputError("configuration counts must be non-negative integers");
      c.counts[static_cast<size_t>(v)] = j[static_cast<size_t>(v)].get<uint32_t>();
    }
    return c;
  }
  if (trimmed.empty()) return c;
  std::stringstream ss(trimmed);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw pebble::InputError("bad configuration item (want vertex:count): " + item);
    int v = std::stoi(item.substr(0, colon));
    long long count = std::stoll(item.substr(colon + 1));
    if (v < 0 || v >= n) throw pebble::InputError("configuration vertex out of range: " + item);
    if (count < 0) throw pebble::InputError("negative pebble count: " + item);
    c.counts[static_cast<size_t>(v)] = static_cast<uint32_t>(count);
  }
  return c;
}

std::string config_to_string(const pebble::Configuration& c) {
  std::string out = "[";
  for (size_t i = 0; i < c.counts.size(); ++i) out += (i ? "," : "") + std::to_string(c.counts[i]);
  return out + "]";
}

pebble::CensusFilters parse_filters(const std::string& text) {
  pebble::CensusFilters filters;
  if (text.empty()) return filters;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "strongly-connected") {
      filters.strongly_connected = true;
    } else if (item.rfind("diameter=", 0) == 0) {
      filters.diameter = std::stoi(item.substr(9));
    } else if (item.rfind("connectivity>=", 0) == 0) {
      filters.min_connectivity = std::stoi(item.substr(14));
    } else {
      throw pebble::InputError("unknown census filter: " + item);
    }
  }
  return filters;
}

void print_construction(const pebble::ConstructionOutput& built, const std::string& out_path) {
  write_file(out_path, pebble::serialize_digraph(built.graph));
  nlohmann::ordered_json meta;
  meta["root"] = built.root;
  meta["extremal_config"] = built.extremal_config.counts;
  meta["parameters"] = built.parameters;
  write_file(out_path + ".meta", meta.dump() + "\n");
  std::cout << "wrote " << out_path << " (n=" << built.graph.order() << ", root=" << built.root
            << ", extremal config size " << built.extremal_config.size() << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact pebbling toolkit for directed graphs"};
  app.require_subcommand(1);

  std::string graph_path, config_spec, out_path, labels_spec, filter_spec, records_path, theorem_id;
  int root = -1, n = 0, param_k = 1, param_d = 2;
  bool oriented = false, allow_slow = false;
  std::optional<size_t> limit;

  auto* solve = app.add_subcommand("solve", "decide r-solvability and print a witness");
  solve->add_option("--graph", graph_path)->required();
  solve->add_option("--root", root)->required();
  solve->add_option("--config", config_spec)->required();

  auto* number = app.add_subcommand("number", "pebbling number with per-root table");
  number->add_option("--graph", graph_path)->required();
  number->add_option("--root", root);

  auto* classify_cmd = app.add_subcommand("classify", "Class0 / Class1 / Above(k)");
  classify_cmd->add_option("--graph", graph_path)->required();

  auto* construct = app.add_subcommand("construct", "generate an extremal graph");
  auto* mixed2 = construct->add_subcommand("mixed2", "diameter-2 sharpness construction");
  mixed2->add_option("--k", param_k)->required();
  mixed2->add_option("--out", out_path)->required();
  auto* layered = construct->add_subcommand("layered", "diameter-d layered construction");
  layered->add_option("--d", param_d)->required();
  layered->add_option("--k", param_k)->required();
  layered->add_option("--out", out_path)->required();
  construct->require_subcommand(1);

  auto* family = app.add_subcommand("family-f", "Class-1 family membership tools");
  auto* fcheck = family->add_subcommand("check", "check one labeled graph");
  fcheck->add_option("--graph", graph_path)->required();
  fcheck->add_option("--labels", labels_spec, "p,q,a,b,c,r")->required();
  auto* fsearch = family->add_subcommand("search", "exhaustive member search at order n");
  fsearch->add_option("--n", n)->required();
  size_t limit_value = 0;
  auto* limit_opt = fsearch->add_option("--limit", limit_value);
  fsearch->add_option("--out", out_path)->required();
  family->require_subcommand(1);

  auto* census = app.add_subcommand("census", "enumerate a census to a records file");
  census->add_option("--n", n)->required();
  census->add_flag("--oriented", oriented);
  census->add_option("--filter", filter_spec, "comma list: strongly-connected, diameter=K, connectivity>=K");
  census->add_option("--out", out_path)->required();
  census->add_flag("--allow-slow", allow_slow, "permit the long-running oriented n=7 census");

  auto* verify = app.add_subcommand("verify", "check a theorem over a records file");
  verify->add_option("--records", records_path)->required();
  verify->add_option("--theorem", theorem_id)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      pebble::Digraph g = load_graph(graph_path);
      pebble::Configuration c = parse_config_spec(config_spec, g.order());
      pebble::SolveResult result = pebble::is_solvable(g, c, root);
      if (result.solvable) {
        std::cout << "solvable\n";
        for (const auto& m : result.witness) std::cout << "  move " << m.from << " -> " << m.to << "\n";
      } else {
        std::cout << "unsolvable\n";
      }
      return 0;
    }
    if (*number) {
      pebble::Digraph g = load_graph(graph_path);
      if (number->count("--root")) {
        std::cout << "pi(D, " << root << ") = " << pebble::pebbling_number_rooted(g, root) << "\n";
      } else {
        pebble::PebblingNumberResult result = pebble::pebbling_number(g);
        std::cout << "pi(D) = " << result.pi << "\n";
        for (const auto& rr : result.per_root)
          std::cout << "  root " << rr.root << ": pi = " << rr.rooted_pi
                    << ", max unsolvable " << config_to_string(rr.max_unsolvable_witness) << "\n";
      }
      return 0;
    }
    if (*classify_cmd) {
      pebble::Digraph g = load_graph(graph_path);
      std::cout << pebble::classify(g).to_string() << "\n";
      return 0;
    }
    if (*mixed2) {
      print_construction(pebble::build_mixed2(param_k), out_path);
      return 0;
    }
    if (*layered) {
      print_construction(pebble::build_layered(param_d, param_k), out_path);
      return 0;
    }
    if (*fcheck) {
      pebble::Digraph g = load_graph(graph_path);
      std::stringstream ss(labels_spec);
      std::string item;
      std::vector<int> ids;
      while (std::getline(ss, item, ',')) ids.push_back(std::stoi(item));
      if (ids.size() != 6) throw pebble::InputError("--labels wants six ids p,q,a,b,c,r");
      pebble::FamilyFLabeling L{ids[0], ids[1], ids[2], ids[3], ids[4], ids[5]};
      pebble::FamilyFReport rep = pebble::check_family_f(g, L);
      std::cout << "oriented:      " << (rep.oriented ? "yes" : "no") << "\n"
                << "2-connected:   " << (rep.two_connected ? "yes" : "no") << "\n"
                << "diameter 2:    " << (rep.diameter2 ? "yes" : "no") << "\n"
                << "cycle arcs:    " << (rep.cycle_arcs ? "yes" : "no") << "\n"
                << "p condition:   " << (rep.p_condition ? "yes" : "no") << "\n"
                << "q condition:   " << (rep.q_condition ? "yes" : "no") << "\n"
                << "c condition:   " << (rep.c_condition ? "yes" : "no") << "\n"
                << "member:        " << (rep.member ? "yes" : "no") << "\n";
      if (rep.member) {
        pebble::PropositionReport props = pebble::verify_f_propositions(g, L);
        for (const auto& it : props.items)
          std::cout << "  " << it.name << ": " << (it.pass ? "pass" : "FAIL " + it.detail) << "\n";
      }
      return rep.member ? 0 : 1;
    }
    if (*fsearch) {
      if (limit_opt->count()) limit = limit_value;
      auto members = pebble::search_family_f(n, limit);
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw pebble::InputError("cannot write file: " + out_path);
      for (const auto& [g, L] : members) {
        nlohmann::ordered_json j;
        j["graph"] = nlohmann::json::parse(pebble::serialize_digraph(g));
        j["labeling"] = {{"p", L.p}, {"q", L.q}, {"a", L.a}, {"b", L.b}, {"c", L.c}, {"r", L.r}};
        j["pi"] = pebble::pebbling_number(g).pi;
        j["propositions"] = pebble::verify_f_propositions(g, L).all_pass ? "all-pass" : "FAIL";
        out << j.dump() << "\n";
      }
      std::cout << members.size() << " member(s) at n = " << n
                << (limit ? "" : " (exhaustive)") << ", written to " << out_path << "\n";
      return 0;
    }
    if (*census) {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw pebble::InputError("cannot write file: " + out_path);
      size_t count = pebble::run_census(n, oriented, parse_filters(filter_spec), out, allow_slow);
      std::cout << count << " record(s) written to " << out_path << "\n";
      return 0;
    }
    if (*verify) {
      std::ifstream in(records_path, std::ios::binary);
      if (!in) throw pebble::InputError("cannot open file: " + records_path);
      auto records = pebble::read_census(in);
      pebble::TheoremReport report = pebble::verify_theorem(records, theorem_id);
      std::cout << report.theorem_id << ": " << (report.pass ? "PASS" : "FAIL")
                << " (scope: " << report.scope << "; checked " << report.checked_count << ")\n";
      bool budget_hit = false;
      for (const auto& v : report.violations) {
        std::cout << "  violation " << v.canonical_form << ": " << v.detail << "\n    repro: " << v.repro << "\n";
        if (v.detail.rfind("budget-exceeded", 0) == 0) budget_hit = true;
      }
      if (budget_hit) return 3;
      return report.pass ? 0 : 1;
    }
  } catch (const pebble::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const pebble::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
