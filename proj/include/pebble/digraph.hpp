#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace pebble {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxVertices = 64;

/// Loopless directed graph on vertices 0..n-1, bidirected pairs allowed.
/// Adjacency kept as one out-row and one in-row bitmask per vertex.
class Digraph {
 public:
  explicit Digraph(int n) : n_(n), out_(static_cast<size_t>(n), 0), in_(static_cast<size_t>(n), 0) {
    if (n < 1 || n > kMaxVertices)
      throw InputError("vertex count out of range: " + std::to_string(n));
  }

  static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    Digraph g(n);
    for (auto [u, v] : arcs) g.add_arc(u, v);
    return g;
  }

  int order() const { return n_; }

  bool has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (out_[static_cast<size_t>(u)] >> v) & 1u;
  }

  void add_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw InputError("loop arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    out_[static_cast<size_t>(u)] |= uint64_t{1} << v;
    in_[static_cast<size_t>(v)] |= uint64_t{1} << u;
  }

  uint64_t out_neighbors(int v) const {
    check_vertex(v);
    return out_[static_cast<size_t>(v)];
  }

  uint64_t in_neighbors(int v) const {
    check_vertex(v);
    return in_[static_cast<size_t>(v)];
  }

  int out_degree(int v) const { return std::popcount(out_neighbors(v)); }
  int in_degree(int v) const { return std::popcount(in_neighbors(v)); }

  int arc_count() const {
    int total = 0;
    for (uint64_t row : out_) total += std::popcount(row);
    return total;
  }

  /// Arcs sorted lexicographically by (u, v).
  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(arc_count()));
    for (int u = 0; u < n_; ++u) {
      uint64_t row = out_[static_cast<size_t>(u)];
      while (row) {
        int v = std::countr_zero(row);
        row &= row - 1;
        out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && out_ == other.out_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw InputError("vertex id out of range: " + std::to_string(v));
  }

  int n_;
  std::vector<uint64_t> out_;
  std::vector<uint64_t> in_;
};

/// Vertices reachable from src along arcs, never entering `forbidden`.
/// Includes src itself unless src is forbidden.
inline uint64_t reachable_set(const Digraph& g, int src, uint64_t forbidden = 0) {
  uint64_t start = uint64_t{1} << src;
  if (start & forbidden) return 0;
  uint64_t seen = start;
  uint64_t frontier = start;
  while (frontier) {
    uint64_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.out_neighbors(v);
    }
    next &= ~(seen | forbidden);
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool is_oriented(const Digraph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.out_neighbors(v) & g.in_neighbors(v)) return false;
  return true;
}

/// All-pairs shortest directed path lengths; kUnreachable marks no path.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  explicit DistanceMatrix(const Digraph& g)
      : n_(g.order()), d_(static_cast<size_t>(n_) * static_cast<size_t>(n_), kUnreachable) {
    for (int s = 0; s < n_; ++s) bfs(g, s);
  }

  int order() const { return n_; }

  int at(int u, int v) const { return d_[static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v)]; }

  bool connected(int u, int v) const { return at(u, v) != kUnreachable; }

 private:
  void bfs(const Digraph& g, int s) {
    auto& dist = d_;
    auto idx = [&](int v) { return static_cast<size_t>(s) * static_cast<size_t>(n_) + static_cast<size_t>(v); };
    dist[idx(s)] = 0;
    uint64_t seen = uint64_t{1} << s;
    uint64_t frontier = seen;
    int depth = 0;
    while (frontier) {
      ++depth;
      uint64_t next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= g.out_neighbors(v);
      }
      next &= ~seen;
      seen |= next;
      frontier = next;
      uint64_t bits = next;
      while (bits) {
        int v = std::countr_zero(bits);
        bits &= bits - 1;
        dist[idx(v)] = depth;
      }
    }
  }

  int n_;
  std::vector<int> d_;
};

/// Max over ordered pairs of dist(i,j); empty if some pair is unreachable.
inline std::optional<int> strong_diameter(const Digraph& g) {
  int n = g.order();
  if (n == 1) return 0;
  DistanceMatrix dm(g);
  int best = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      int d = dm.at(u, v);
      if (d == DistanceMatrix::kUnreachable) return std::nullopt;
      best = std::max(best, d);
    }
  return best;
}

namespace detail {

/// Max internally-vertex-disjoint directed s->t paths via unit-capacity
/// vertex-split flow. skip_direct drops the arc s->t from the network.
inline int vertex_disjoint_paths(const Digraph& g, int s, int t, bool skip_direct) {
  const int n = g.order();
  const int nodes = 2 * n;
  const int big = n + 1;
  auto node_in = [](int v) { return 2 * v; };
  auto node_out = [](int v) { return 2 * v + 1; };

  std::vector<std::vector<int>> cap(static_cast<size_t>(nodes), std::vector<int>(static_cast<size_t>(nodes), 0));
  for (int v = 0; v < n; ++v)
    cap[static_cast<size_t>(node_in(v))][static_cast<size_t>(node_out(v))] = (v == s || v == t) ? big : 1;
  for (auto [u, v] : g.arcs()) {
    if (skip_direct && u == s && v == t) continue;
    cap[static_cast<size_t>(node_out(u))][static_cast<size_t>(node_in(v))] = big;
  }

  const int source = node_out(s);
  const int sink = node_in(t);
  int flow = 0;
  for (;;) {
    std::vector<int> prev(static_cast<size_t>(nodes), -1);
    prev[static_cast<size_t>(source)] = source;
    std::vector<int> queue{source};
    for (size_t qi = 0; qi < queue.size() && prev[static_cast<size_t>(sink)] < 0; ++qi) {
      int u = queue[qi];
      for (int v = 0; v < nodes; ++v)
        if (prev[static_cast<size_t>(v)] < 0 && cap[static_cast<size_t>(u)][static_cast<size_t>(v)] > 0) {
          prev[static_cast<size_t>(v)] = u;
          queue.push_back(v);
        }
    }
    if (prev[static_cast<size_t>(sink)] < 0) break;
    for (int v = sink; v != source; v = prev[static_cast<size_t>(v)]) {
      int u = prev[static_cast<size_t>(v)];
      --cap[static_cast<size_t>(u)][static_cast<size_t>(v)];
      ++cap[static_cast<size_t>(v)][static_cast<size_t>(u)];
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

/// Strong vertex connectivity; 0 when not strongly connected. Adjacent pairs
/// contribute 1 + disjoint paths avoiding the direct arc; result capped at n-1.
inline int strong_connectivity(const Digraph& g) {
  const int n = g.order();
  if (n < 2) throw InputError("strong_connectivity requires n >= 2");
  int k = n - 1;
  for (int u = 0; u < n && k > 0; ++u)
    for (int v = 0; v < n && k > 0; ++v) {
      if (u == v) continue;
      int f;
      if (g.has_arc(u, v))
        f = 1 + detail::vertex_disjoint_paths(g, u, v, /*skip_direct=*/true);
      else
        f = detail::vertex_disjoint_paths(g, u, v, /*skip_direct=*/false);
      k = std::min(k, f);
    }
  return k;
}

/// Graph file format: {"n": <int>, "arcs": [[u,v], ...]}, arcs sorted on
/// write, UTF-8, LF. Parsing rejects loops, out-of-range ids and duplicates.
inline Digraph parse_digraph(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed graph file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
    throw InputError("malformed graph file: expected {\"n\":..., \"arcs\":[...]}");
  if (!j["n"].is_number_integer())
    throw InputError("malformed graph file: n must be an integer");
  int n = j["n"].get<int>();
  if (n < 1 || n > kMaxVertices)
    throw InputError("vertex count out of range: " + std::to_string(n));
  if (!j["arcs"].is_array())
    throw InputError("malformed graph file: arcs must be an array");
  Digraph g(n);
  for (const auto& item : j["arcs"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer())
      throw InputError("malformed graph file: arc entries must be [u,v] pairs");
    int u = item[0].get<int>();
    int v = item[1].get<int>();
    std::string arc = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    if (u < 0 || u >= n || v < 0 || v >= n) throw InputError("arc endpoint out of range: " + arc);
    if (u == v) throw InputError("loop arc " + arc);
    if (g.has_arc(u, v)) throw InputError("duplicate arc " + arc);
    g.add_arc(u, v);
  }
  return g;
}

inline std::string serialize_digraph(const Digraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.order();
  auto arcs = nlohmann::ordered_json::array();
  for (auto [u, v] : g.arcs()) arcs.push_back({u, v});
  j["arcs"] = std::move(arcs);
  return j.dump() + "\n";
}

}  // namespace pebble
