#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "pebble/digraph.hpp"

namespace pebble {

inline constexpr int kMaxCanonicalVertices = 8;

/// Total-order key identifying an isomorphism class: the lexicographically
/// smallest row-packed adjacency matrix over all vertex relabelings.
struct CanonicalForm {
  std::vector<uint8_t> key;  // [n, row 0, ..., row n-1]

  bool operator==(const CanonicalForm&) const = default;
  bool operator<(const CanonicalForm& other) const { return key < other.key; }

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(key.size() * 2);
    for (uint8_t b : key) {
      out.push_back(digits[b >> 4]);
      out.push_back(digits[b & 0xf]);
    }
    return out;
  }
};

/// Relabels: arc (u,v) becomes (sigma[u], sigma[v]).
inline Digraph permuted(const Digraph& g, const std::vector<int>& sigma) {
  Digraph out(g.order());
  for (auto [u, v] : g.arcs()) out.add_arc(sigma[static_cast<size_t>(u)], sigma[static_cast<size_t>(v)]);
  return out;
}

/// Exact at n <= 8 by minimizing over all n! relabelings.
inline CanonicalForm canonical_form(const Digraph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalVertices)
    throw InputError("canonical_form supports at most " + std::to_string(kMaxCanonicalVertices) + " vertices");

  std::array<uint8_t, kMaxCanonicalVertices> adj{};
  for (int u = 0; u < n; ++u) adj[static_cast<size_t>(u)] = static_cast<uint8_t>(g.out_neighbors(u));

  std::array<int, kMaxCanonicalVertices> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  std::array<uint8_t, kMaxCanonicalVertices> best{};
  best.fill(0xff);
  do {
    std::array<uint8_t, kMaxCanonicalVertices> cand{};
    bool worse = false;
    for (int i = 0; i < n; ++i) {
      uint8_t row = 0;
      uint8_t src = adj[static_cast<size_t>(perm[static_cast<size_t>(i)])];
      for (int j2 = 0; j2 < n; ++j2)
        if ((src >> perm[static_cast<size_t>(j2)]) & 1) row |= static_cast<uint8_t>(1u << j2);
      cand[static_cast<size_t>(i)] = row;
      if (row > best[static_cast<size_t>(i)]) {
        worse = true;
        break;
      }
      if (row < best[static_cast<size_t>(i)]) {
        for (int rest = i + 1; rest < n; ++rest) {
          uint8_t r = 0;
          uint8_t s = adj[static_cast<size_t>(perm[static_cast<size_t>(rest)])];
          for (int j2 = 0; j2 < n; ++j2)
            if ((s >> perm[static_cast<size_t>(j2)]) & 1) r |= static_cast<uint8_t>(1u << j2);
          cand[static_cast<size_t>(rest)] = r;
        }
        best = cand;
        worse = true;  // already copied; stop row-by-row comparison
        break;
      }
    }
    if (!worse) best = cand;
  } while (std::next_permutation(perm.begin(), perm.begin() + n));

  CanonicalForm out;
  out.key.reserve(static_cast<size_t>(n) + 1);
  out.key.push_back(static_cast<uint8_t>(n));
  for (int i = 0; i < n; ++i) out.key.push_back(best[static_cast<size_t>(i)]);
  return out;
}

}  // namespace pebble
