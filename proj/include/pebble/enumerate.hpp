#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "pebble/canonical.hpp"
#include "pebble/digraph.hpp"

namespace pebble {

using DigraphPredicate = std::function<bool(const Digraph&)>;

/// One representative per isomorphism class passing the predicate, in
/// ascending canonical-form order. Arc-pair states (none / u->v / v->u /
/// both, "both" dropped when oriented_only) are generated lexicographically;
/// the predicate runs before canonicalization. n=7 oriented sits behind
/// allow_slow; anything larger is refused.
inline std::vector<Digraph> enumerate_digraphs(int n, bool oriented_only,
                                               const DigraphPredicate& predicate = {},
                                               bool allow_slow = false) {
  if (n < 1) throw InputError("enumerate_digraphs requires n >= 1");
  const int limit = (oriented_only && allow_slow) ? 7 : 6;
  if (n > limit)
    throw InputError("enumerate_digraphs: n = " + std::to_string(n) +
                     " beyond supported range" + (allow_slow ? "" : " (pass the long-running flag for oriented n = 7)"));

  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

  std::map<CanonicalForm, Digraph> classes;
  std::vector<int> state(pairs.size(), 0);  // 0 none, 1 u->v, 2 v->u, 3 both
  const int states_per_pair = oriented_only ? 3 : 4;

  auto emit = [&] {
    Digraph g(n);
    for (size_t i = 0; i < pairs.size(); ++i) {
      auto [u, v] = pairs[i];
      if (state[i] & 1) g.add_arc(u, v);
      if (state[i] & 2) g.add_arc(v, u);
    }
    if (predicate && !predicate(g)) return;
    CanonicalForm cf = canonical_form(g);
    classes.try_emplace(std::move(cf), std::move(g));
  };

  // odometer over pair states
  for (;;) {
    emit();
    size_t i = 0;
    while (i < pairs.size() && state[i] == states_per_pair - 1) state[i++] = 0;
    if (i == pairs.size()) break;
    ++state[i];
  }

  std::vector<Digraph> out;
  out.reserve(classes.size());
  for (auto& [cf, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace pebble
