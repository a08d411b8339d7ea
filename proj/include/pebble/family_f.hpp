#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pebble/canonical.hpp"
#include "pebble/digraph.hpp"

namespace pebble {

/// Role assignment for the oriented 6-cycle p->c<-q->b->r<-a<-p.
struct FamilyFLabeling {
  int p, q, a, b, c, r;

  std::array<int, 6> all() const { return {p, q, a, b, c, r}; }

  uint64_t mask() const {
    uint64_t m = 0;
    for (int v : all()) m |= uint64_t{1} << v;
    return m;
  }

  void validate(const Digraph& g) const {
    for (int v : all())
      if (v < 0 || v >= g.order())
        throw InputError("labeling vertex out of range: " + std::to_string(v));
    if (std::popcount(mask()) != 6) throw InputError("labeling vertices must be distinct");
  }
};

struct HSets {
  std::vector<int> h_a;
  std::vector<int> h_b;
  std::vector<int> h_c;
  std::vector<int> h_ab;
};

struct FamilyFReport {
  bool oriented = false;
  bool two_connected = false;
  bool diameter2 = false;
  bool cycle_arcs = false;
  bool p_condition = false;
  bool q_condition = false;
  bool c_condition = false;
  bool member = false;
};

namespace detail {

inline bool reaches_avoiding(const Digraph& g, int from, int to, uint64_t forbidden) {
  return (reachable_set(g, from, forbidden) >> to) & 1;
}

/// Union of internal vertices over all simple from->to paths avoiding
/// `forbidden`. Exhaustive path search; exact at the small orders used here.
inline uint64_t internal_path_vertices(const Digraph& g, int from, int to, uint64_t forbidden) {
  uint64_t result = 0;
  std::function<void(int, uint64_t)> dfs = [&](int v, uint64_t on_path) {
    if (v == to) {
      result |= on_path & ~((uint64_t{1} << from) | (uint64_t{1} << to));
      return;
    }
    uint64_t outs = g.out_neighbors(v) & ~on_path & ~forbidden;
    while (outs) {
      int w = std::countr_zero(outs);
      outs &= outs - 1;
      dfs(w, on_path | (uint64_t{1} << w));
    }
  };
  if (!((forbidden >> from) & 1) && !((forbidden >> to) & 1))
    dfs(from, uint64_t{1} << from);
  return result;
}

inline std::vector<int> bits_to_vertices(uint64_t bits) {
  std::vector<int> out;
  while (bits) {
    out.push_back(std::countr_zero(bits));
    bits &= bits - 1;
  }
  return out;
}

}  // namespace detail

/// Membership check for the Class-1 family: base predicates, the forced
/// 6-cycle arcs, and the three path-blocking conditions expressed through
/// vertex-deletion reachability.
inline FamilyFReport check_family_f(const Digraph& g, const FamilyFLabeling& L) {
  L.validate(g);
  FamilyFReport rep;
  rep.oriented = is_oriented(g);
  rep.two_connected = g.order() >= 2 && strong_connectivity(g) >= 2;
  auto diam = strong_diameter(g);
  rep.diameter2 = diam && *diam == 2;
  rep.cycle_arcs = g.has_arc(L.p, L.c) && g.has_arc(L.q, L.c) && g.has_arc(L.q, L.b) &&
                   g.has_arc(L.b, L.r) && g.has_arc(L.a, L.r) && g.has_arc(L.p, L.a);

  auto bit = [](int v) { return uint64_t{1} << v; };
  rep.p_condition = !detail::reaches_avoiding(g, L.p, L.r, bit(L.a) | bit(L.c)) &&
                    !detail::reaches_avoiding(g, L.p, L.r, bit(L.a) | bit(L.b));
  rep.q_condition = !detail::reaches_avoiding(g, L.q, L.r, bit(L.b) | bit(L.c)) &&
                    !detail::reaches_avoiding(g, L.q, L.r, bit(L.b) | bit(L.a));
  rep.c_condition = !detail::reaches_avoiding(g, L.c, L.r, bit(L.a) | bit(L.b));

  rep.member = rep.oriented && rep.two_connected && rep.diameter2 && rep.cycle_arcs &&
               rep.p_condition && rep.q_condition && rep.c_condition;
  return rep;
}

/// Intermediary-vertex sets of a member; simple-path membership decided by
/// exhaustive path enumeration, never by the reaches/reachable relaxation.
inline HSets compute_h_sets(const Digraph& g, const FamilyFLabeling& L) {
  if (!check_family_f(g, L).member) throw InputError("compute_h_sets requires a family member");
  auto bit = [](int v) { return uint64_t{1} << v; };
  const uint64_t labeled = L.mask();

  uint64_t ha = detail::internal_path_vertices(g, L.p, L.a, bit(L.c)) & ~labeled;
  uint64_t hb = detail::internal_path_vertices(g, L.q, L.b, bit(L.c)) & ~labeled;
  uint64_t hc = (detail::internal_path_vertices(g, L.c, L.a, 0) |
                 detail::internal_path_vertices(g, L.c, L.b, 0)) &
                ~labeled & ~ha & ~hb;
  uint64_t hab = (detail::internal_path_vertices(g, L.a, L.r, bit(L.b)) |
                  detail::internal_path_vertices(g, L.b, L.r, bit(L.a))) &
                 ~labeled;

  return {detail::bits_to_vertices(ha), detail::bits_to_vertices(hb),
          detail::bits_to_vertices(hc), detail::bits_to_vertices(hab)};
}

struct PropositionResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct PropositionReport {
  std::vector<PropositionResult> items;
  bool all_pass = true;
};

/// Structural consequences of membership; each item quantifies over the
/// relevant H-set (vacuously true when the set is empty).
inline PropositionReport verify_f_propositions(const Digraph& g, const FamilyFLabeling& L) {
  HSets h = compute_h_sets(g, L);
  PropositionReport rep;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    if (!pass) rep.all_pass = false;
    rep.items.push_back({std::move(name), pass, std::move(detail)});
  };

  bool ok = true;
  std::string why;
  for (int v : h.h_a)
    if (!g.has_arc(v, L.a)) { ok = false; why = "missing " + std::to_string(v) + "->a"; }
  for (int v : h.h_b)
    if (!g.has_arc(v, L.b)) { ok = false; why = "missing " + std::to_string(v) + "->b"; }
  add("h_vertices_arc_into_their_target", ok, why);

  ok = true;
  why.clear();
  for (int v : h.h_a)
    if (g.has_arc(v, L.b)) { ok = false; why = "arc " + std::to_string(v) + "->b present"; }
  for (int v : h.h_b)
    if (g.has_arc(v, L.a)) { ok = false; why = "arc " + std::to_string(v) + "->a present"; }
  add("no_h_vertex_arc_to_opposite_target", ok, why);

  ok = true;
  why.clear();
  for (int v : h.h_ab)
    if (!g.has_arc(L.a, v) || !g.has_arc(L.b, v)) {
      ok = false;
      why = "vertex " + std::to_string(v) + " not fed by both a and b";
    }
  add("h_ab_receives_from_a_and_b", ok, why);

  ok = true;
  why.clear();
  for (int v : h.h_c)
    if (!g.has_arc(v, L.a) && !g.has_arc(v, L.b)) {
      ok = false;
      why = "vertex " + std::to_string(v) + " has no arc to a or b";
    }
  add("h_c_arc_to_a_or_b", ok, why);

  ok = true;
  why.clear();
  for (int va : h.h_a)
    for (int vc : h.h_c)
      if (g.has_arc(va, vc)) { ok = false; why = "arc " + std::to_string(va) + "->" + std::to_string(vc); }
  for (int vb : h.h_b)
    for (int vc : h.h_c)
      if (g.has_arc(vb, vc)) { ok = false; why = "arc " + std::to_string(vb) + "->" + std::to_string(vc); }
  add("no_arc_from_h_a_or_h_b_into_h_c", ok, why);

  add("c_arc_to_a_or_b", g.has_arc(L.c, L.a) || g.has_arc(L.c, L.b));

  bool cross = (g.has_arc(L.c, L.a) || g.has_arc(L.b, L.a)) &&
               (g.has_arc(L.c, L.b) || g.has_arc(L.a, L.b));
  add("missing_c_arc_forces_cross_arc", cross);

  // induced subgraph on H_ab + r
  std::vector<int> verts = h.h_ab;
  verts.push_back(L.r);
  std::map<int, int> remap;
  for (size_t i = 0; i < verts.size(); ++i) remap[verts[i]] = static_cast<int>(i);
  Digraph induced(static_cast<int>(verts.size()));
  for (int u : verts)
    for (int v : verts)
      if (u != v && g.has_arc(u, v)) induced.add_arc(remap[u], remap[v]);
  auto idiam = strong_diameter(induced);
  add("h_ab_plus_root_strong_diameter_2", idiam.has_value() && *idiam <= 2,
      idiam ? "diameter " + std::to_string(*idiam) : "not strongly connected");

  return rep;
}

/// Exhaustive search for members on n vertices with the six roles fixed on
/// vertices 0..5 (p,q,a,b,c,r). Forced 6-cycle arcs are pinned, arcs that
/// violate a path condition outright are pruned, survivors are post-verified
/// by check_family_f and deduplicated by canonical form. Without a limit the
/// result is exhaustive, so an empty yield certifies emptiness at that n.
inline std::vector<std::pair<Digraph, FamilyFLabeling>> search_family_f(
    int n, std::optional<size_t> limit = std::nullopt) {
  if (n > 8) throw InputError("search_family_f supports n <= 8");
  if (n < 6) return {};

  const FamilyFLabeling L{0, 1, 2, 3, 4, 5};
  const std::vector<std::pair<int, int>> forced = {{0, 4}, {1, 4}, {1, 3}, {3, 5}, {2, 5}, {0, 2}};
  // arcs whose presence defeats a path condition by themselves
  const std::vector<std::pair<int, int>> banned = {{0, 5}, {0, 3}, {1, 5}, {1, 2}, {4, 5}};

  auto arc_in = [](const std::vector<std::pair<int, int>>& list, int u, int v) {
    for (auto [x, y] : list)
      if (x == u && y == v) return true;
    return false;
  };

  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> allowed;  // per pair: 0 none, 1 u->v, 2 v->u
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      pairs.emplace_back(u, v);
      std::vector<int> states;
      if (arc_in(forced, u, v))
        states = {1};
      else if (arc_in(forced, v, u))
        states = {2};
      else {
        states.push_back(0);
        if (!arc_in(banned, u, v)) states.push_back(1);
        if (!arc_in(banned, v, u)) states.push_back(2);
      }
      allowed.push_back(std::move(states));
    }

  std::array<uint64_t, 8> rows{};
  std::map<CanonicalForm, std::pair<Digraph, FamilyFLabeling>> found;

  // diameter <= 2 with every ordered pair reachable, straight off the rows
  auto diameter2_fast = [&] {
    for (int u = 0; u < n; ++u) {
      uint64_t reach2 = rows[static_cast<size_t>(u)];
      uint64_t direct = rows[static_cast<size_t>(u)];
      while (direct) {
        int w = std::countr_zero(direct);
        direct &= direct - 1;
        reach2 |= rows[static_cast<size_t>(w)];
      }
      uint64_t need = (n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1) & ~(uint64_t{1} << u);
      if ((reach2 & need) != need) return false;
    }
    return true;
  };

  std::function<void(size_t)> dfs = [&](size_t i) {
    if (limit && found.size() >= *limit) return;
    if (i == pairs.size()) {
      if (!diameter2_fast()) return;
      Digraph g(n);
      for (size_t j = 0; j < pairs.size(); ++j) {
        auto [u, v] = pairs[j];
        if (rows[static_cast<size_t>(u)] & (uint64_t{1} << v)) g.add_arc(u, v);
        if (rows[static_cast<size_t>(v)] & (uint64_t{1} << u)) g.add_arc(v, u);
      }
      FamilyFReport rep = check_family_f(g, L);
      if (!rep.member) return;
      CanonicalForm cf = canonical_form(g);
      found.try_emplace(std::move(cf), std::move(g), L);
      return;
    }
    auto [u, v] = pairs[i];
    for (int state : allowed[i]) {
      if (state & 1) rows[static_cast<size_t>(u)] |= uint64_t{1} << v;
      if (state & 2) rows[static_cast<size_t>(v)] |= uint64_t{1} << u;
      dfs(i + 1);
      rows[static_cast<size_t>(u)] &= ~(uint64_t{1} << v);
      rows[static_cast<size_t>(v)] &= ~(uint64_t{1} << u);
    }
  };
  dfs(0);

  std::vector<std::pair<Digraph, FamilyFLabeling>> out;
  out.reserve(found.size());
  for (auto& [cf, gl] : found) out.push_back(std::move(gl));
  return out;
}

/// Unlabeled membership: exists some labeling under which D is a member.
inline std::optional<FamilyFLabeling> find_family_f_labeling(const Digraph& g) {
  const int n = g.order();
  if (n < 6) return std::nullopt;
  std::vector<int> pick(6);
  std::function<std::optional<FamilyFLabeling>(int, uint64_t)> rec =
      [&](int depth, uint64_t used) -> std::optional<FamilyFLabeling> {
    if (depth == 6) {
      FamilyFLabeling L{pick[0], pick[1], pick[2], pick[3], pick[4], pick[5]};
      // cheap arc screen before the full check
      if (!g.has_arc(L.p, L.c) || !g.has_arc(L.q, L.c) || !g.has_arc(L.q, L.b) ||
          !g.has_arc(L.b, L.r) || !g.has_arc(L.a, L.r) || !g.has_arc(L.p, L.a))
        return std::nullopt;
      if (check_family_f(g, L).member) return L;
      return std::nullopt;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1) continue;
      pick[static_cast<size_t>(depth)] = v;
      if (auto hit = rec(depth + 1, used | (uint64_t{1} << v))) return hit;
    }
    return std::nullopt;
  };
  return rec(0, 0);
}

}  // namespace pebble
