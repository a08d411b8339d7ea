#pragma once

#include <cstdint>
#include <cstdlib>
#include <deque>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "pebble/digraph.hpp"

namespace pebble {

/// Pebble counts per vertex; the game state.
struct Configuration {
  std::vector<uint32_t> counts;

  Configuration() = default;
  explicit Configuration(int n) : counts(static_cast<size_t>(n), 0) {}
  explicit Configuration(std::vector<uint32_t> c) : counts(std::move(c)) {}

  uint64_t size() const {
    uint64_t total = 0;
    for (uint32_t c : counts) total += c;
    return total;
  }

  bool operator==(const Configuration&) const = default;
};

struct Move {
  int from;
  int to;
  bool operator==(const Move&) const = default;
};

struct SolveResult {
  bool solvable = false;
  std::vector<Move> witness;  // empty when unsolvable or trivially solved
};

inline uint64_t default_node_budget() {
  if (const char* env = std::getenv("PEBBLE_NODE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 100000000ull;  // 1e8 visited states
}

namespace detail {

/// dist(v, r) for every v, via BFS over in-arcs from r; kUnreachable if none.
inline std::vector<int> distances_to_root(const Digraph& g, int root) {
  std::vector<int> dist(static_cast<size_t>(g.order()), DistanceMatrix::kUnreachable);
  dist[static_cast<size_t>(root)] = 0;
  uint64_t seen = uint64_t{1} << root;
  uint64_t frontier = seen;
  int depth = 0;
  while (frontier) {
    ++depth;
    uint64_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.in_neighbors(v);
    }
    next &= ~seen;
    seen |= next;
    frontier = next;
    uint64_t bits = next;
    while (bits) {
      int v = std::countr_zero(bits);
      bits &= bits - 1;
      dist[static_cast<size_t>(v)] = depth;
    }
  }
  return dist;
}

struct CountVectorHash {
  size_t operator()(const std::vector<uint32_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

/// Depth-first r-solvability search with exact-state memoization, early
/// accept on C(r) >= 1 or C(v) >= 2^dist(v,r), weight-bound rejection, and
/// dominance against recently failed states.
class SolveSearch {
 public:
  SolveSearch(const Digraph& g, int root, uint64_t budget)
      : g_(g), root_(root), budget_(budget), dist_(distances_to_root(g, root)) {
    max_dist_ = 0;
    for (int d : dist_)
      if (d != DistanceMatrix::kUnreachable && d > max_dist_) max_dist_ = d;
  }

  SolveResult run(const Configuration& c) {
    state_ = c.counts;
    SolveResult result;
    result.solvable = dfs();
    if (result.solvable) result.witness = std::move(moves_);
    return result;
  }

 private:
  static constexpr size_t kDominanceWindow = 64;

  bool dfs() {
    if (++nodes_ > budget_)
      throw BudgetExceeded("solver node budget exhausted (" + std::to_string(budget_) + " states)");

    if (state_[static_cast<size_t>(root_)] >= 1) return true;

    // early accept: enough pebbles on one vertex to walk a shortest path
    for (int v = 0; v < g_.order(); ++v) {
      int d = dist_[static_cast<size_t>(v)];
      if (d != DistanceMatrix::kUnreachable && state_[static_cast<size_t>(v)] >= (uint64_t{1} << d)) {
        emit_path_moves(v, d);
        return true;
      }
    }

    // weight certificate: sum C(v) 2^-dist(v,r) < 1 means unsolvable
    unsigned __int128 weight = 0;
    for (int v = 0; v < g_.order(); ++v) {
      int d = dist_[static_cast<size_t>(v)];
      if (d != DistanceMatrix::kUnreachable)
        weight += static_cast<unsigned __int128>(state_[static_cast<size_t>(v)]) << (max_dist_ - d);
    }
    if (weight < (static_cast<unsigned __int128>(1) << max_dist_)) return false;

    if (failed_.contains(state_)) return false;
    for (const auto& dead : dominance_)
      if (pointwise_leq(state_, dead)) return false;

    for (int u = 0; u < g_.order(); ++u) {
      if (state_[static_cast<size_t>(u)] < 2) continue;
      uint64_t outs = g_.out_neighbors(u);
      while (outs) {
        int v = std::countr_zero(outs);
        outs &= outs - 1;
        state_[static_cast<size_t>(u)] -= 2;
        ++state_[static_cast<size_t>(v)];
        moves_.push_back({u, v});
        if (dfs()) return true;
        moves_.pop_back();
        state_[static_cast<size_t>(u)] += 2;
        --state_[static_cast<size_t>(v)];
      }
    }

    failed_.insert(state_);
    if (dominance_.size() == kDominanceWindow) dominance_.pop_front();
    dominance_.push_back(state_);
    return false;
  }

  static bool pointwise_leq(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  }

  // moves 2^(d-1) pebbles half-distance at a time along a shortest path
  void emit_path_moves(int v, int d) {
    int cur = v;
    for (int step = d; step >= 1; --step) {
      int next = -1;
      uint64_t outs = g_.out_neighbors(cur);
      while (outs) {
        int w = std::countr_zero(outs);
        outs &= outs - 1;
        if (dist_[static_cast<size_t>(w)] == step - 1) {
          next = w;
          break;
        }
      }
      uint64_t repeats = uint64_t{1} << (step - 1);
      for (uint64_t i = 0; i < repeats; ++i) moves_.push_back({cur, next});
      cur = next;
    }
  }

  const Digraph& g_;
  int root_;
  uint64_t budget_;
  uint64_t nodes_ = 0;
  std::vector<int> dist_;
  int max_dist_ = 0;
  std::vector<uint32_t> state_;
  std::vector<Move> moves_;
  std::unordered_set<std::vector<uint32_t>, CountVectorHash> failed_;
  std::deque<std::vector<uint32_t>> dominance_;
};

}  // namespace detail

inline SolveResult is_solvable(const Digraph& g, const Configuration& c, int root,
                               uint64_t budget = default_node_budget()) {
  if (static_cast<int>(c.counts.size()) != g.order())
    throw InputError("configuration length " + std::to_string(c.counts.size()) +
                     " does not match graph order " + std::to_string(g.order()));
  if (root < 0 || root >= g.order())
    throw InputError("root out of range: " + std::to_string(root));
  detail::SolveSearch search(g, root, budget);
  return search.run(c);
}

/// Lexicographically smallest maximum-size r-unsolvable configuration.
/// Iterative deepening on size from n-1 (all-ones-minus-root is unsolvable);
/// per-vertex cap 2^dist(v,r) - 1 since anything more is solvable outright.
inline Configuration max_unsolvable(const Digraph& g, int root,
                                    uint64_t budget = default_node_budget()) {
  if (root < 0 || root >= g.order())
    throw InputError("root out of range: " + std::to_string(root));
  if (!strong_diameter(g))
    throw InputError("max_unsolvable requires a strongly connected graph");

  const int n = g.order();
  auto dist = detail::distances_to_root(g, root);
  std::vector<uint64_t> cap(static_cast<size_t>(n));
  uint64_t cap_total = 0;
  for (int v = 0; v < n; ++v) {
    cap[static_cast<size_t>(v)] = (uint64_t{1} << dist[static_cast<size_t>(v)]) - 1;
    cap_total += cap[static_cast<size_t>(v)];
  }

  // first unsolvable configuration of size k in lexicographic order
  Configuration scratch(n);
  std::function<bool(int, uint64_t)> find = [&](int v, uint64_t remaining) -> bool {
    if (remaining == 0) {
      for (int w = v; w < n; ++w) scratch.counts[static_cast<size_t>(w)] = 0;
      return !is_solvable(g, scratch, root, budget).solvable;
    }
    if (v == n) return false;
    uint64_t tail_cap = 0;
    for (int w = v + 1; w < n; ++w) tail_cap += cap[static_cast<size_t>(w)];
    uint64_t top = std::min(cap[static_cast<size_t>(v)], remaining);
    uint64_t low = remaining > tail_cap ? remaining - tail_cap : 0;
    for (uint64_t take = low; take <= top; ++take) {
      scratch.counts[static_cast<size_t>(v)] = static_cast<uint32_t>(take);
      if (find(v + 1, remaining - take)) return true;
      // a solvable prefix stays solvable with more pebbles; no prune needed
      // beyond the leaf check because caps keep this space tiny
    }
    scratch.counts[static_cast<size_t>(v)] = 0;
    return false;
  };

  Configuration best(n);
  for (int v = 0; v < n; ++v)
    best.counts[static_cast<size_t>(v)] = (v == root) ? 0 : 1;
  for (uint64_t k = static_cast<uint64_t>(n); k <= cap_total; ++k) {
    if (!find(0, k)) break;
    best = scratch;
  }
  return best;
}

inline int pebbling_number_rooted(const Digraph& g, int root,
                                  uint64_t budget = default_node_budget()) {
  return static_cast<int>(max_unsolvable(g, root, budget).size()) + 1;
}

struct RootedPebblingResult {
  int root;
  int rooted_pi;
  Configuration max_unsolvable_witness;
};

struct PebblingNumberResult {
  int pi = 0;
  std::vector<RootedPebblingResult> per_root;
};

inline PebblingNumberResult pebbling_number(const Digraph& g, uint64_t budget = default_node_budget()) {
  PebblingNumberResult result;
  for (int r = 0; r < g.order(); ++r) {
    Configuration witness = max_unsolvable(g, r, budget);
    int rooted = static_cast<int>(witness.size()) + 1;
    result.per_root.push_back({r, rooted, std::move(witness)});
    result.pi = std::max(result.pi, rooted);
  }
  return result;
}

struct Classification {
  enum class Kind { Class0, Class1, Above };
  Kind kind;
  int delta = 0;  // pi - n, set for Above

  bool operator==(const Classification&) const = default;

  std::string to_string() const {
    switch (kind) {
      case Kind::Class0: return "Class0";
      case Kind::Class1: return "Class1";
      case Kind::Above: return "Above(" + std::to_string(delta) + ")";
    }
    return "";
  }
};

inline Classification classify_pi(int pi, int n) {
  if (pi == n) return {Classification::Kind::Class0, 0};
  if (pi == n + 1) return {Classification::Kind::Class1, 0};
  return {Classification::Kind::Above, pi - n};
}

inline Classification classify(const Digraph& g, uint64_t budget = default_node_budget()) {
  return classify_pi(pebbling_number(g, budget).pi, g.order());
}

/// Vertex partition by pebble count 0 / 1 / 2 / >= 3.
struct ConfigurationProfile {
  std::vector<int> a0_vertices;
  std::vector<int> a1_vertices;
  std::vector<int> a2_vertices;
  std::vector<int> a3plus_vertices;
  int zero_count = 0;
};

inline ConfigurationProfile profile(const Configuration& c) {
  ConfigurationProfile p;
  for (size_t v = 0; v < c.counts.size(); ++v) {
    int vi = static_cast<int>(v);
    switch (c.counts[v]) {
      case 0: p.a0_vertices.push_back(vi); break;
      case 1: p.a1_vertices.push_back(vi); break;
      case 2: p.a2_vertices.push_back(vi); break;
      default: p.a3plus_vertices.push_back(vi); break;
    }
  }
  p.zero_count = static_cast<int>(p.a0_vertices.size());
  return p;
}

/// Calls fn for every count vector of the given total size with entries
/// bounded by caps (empty caps = no bound beyond the total).
inline void for_each_configuration(int n, uint64_t size, const std::vector<uint64_t>& caps,
                                   const std::function<void(const Configuration&)>& fn) {
  Configuration scratch(n);
  std::function<void(int, uint64_t)> rec = [&](int v, uint64_t remaining) {
    if (v == n - 1) {
      if (!caps.empty() && remaining > caps[static_cast<size_t>(v)]) return;
      scratch.counts[static_cast<size_t>(v)] = static_cast<uint32_t>(remaining);
      fn(scratch);
      return;
    }
    uint64_t top = caps.empty() ? remaining : std::min(remaining, caps[static_cast<size_t>(v)]);
    for (uint64_t take = 0; take <= top; ++take) {
      scratch.counts[static_cast<size_t>(v)] = static_cast<uint32_t>(take);
      rec(v + 1, remaining - take);
    }
  };
  if (n >= 1) rec(0, size);
}

struct Two3No2Violation {
  int root;
  Configuration configuration;
  std::string detail;
};

struct Two3No2Report {
  bool applicable = false;
  bool pass = true;
  std::vector<Two3No2Violation> violations;
};

/// Applicability: oriented, strong diameter 2, strong connectivity >= 2,
/// Class-1. When applicable, every unsolvable configuration of size n (over
/// all roots) must have |A2| = 0, |A3| = 2, no count >= 4, and exactly four
/// vertices with 0 pebbles.
inline Two3No2Report verify_two3no2(const Digraph& g, uint64_t budget = default_node_budget()) {
  Two3No2Report report;
  const int n = g.order();
  if (n < 2 || !is_oriented(g)) return report;
  auto diam = strong_diameter(g);
  if (!diam || *diam != 2) return report;
  if (strong_connectivity(g) < 2) return report;
  if (classify(g, budget).kind != Classification::Kind::Class1) return report;

  report.applicable = true;
  for (int root = 0; root < n; ++root) {
    for_each_configuration(n, static_cast<uint64_t>(n), {}, [&](const Configuration& c) {
      if (is_solvable(g, c, root, budget).solvable) return;
      ConfigurationProfile p = profile(c);
      std::string why;
      if (!p.a2_vertices.empty()) why += "|A2| = " + std::to_string(p.a2_vertices.size()) + "; ";
      if (p.a3plus_vertices.size() != 2) why += "|A3| = " + std::to_string(p.a3plus_vertices.size()) + "; ";
      for (uint32_t count : c.counts)
        if (count >= 4) {
          why += "vertex with " + std::to_string(count) + " pebbles; ";
          break;
        }
      if (p.zero_count != 4) why += "zero count " + std::to_string(p.zero_count) + "; ";
      if (!why.empty()) report.violations.push_back({root, c, why});
    });
  }
  report.pass = report.violations.empty();
  return report;
}

}  // namespace pebble
