#pragma once

#include <map>
#include <numeric>
#include <string>

#include "pebble/digraph.hpp"
#include "pebble/pebbling.hpp"

namespace pebble {

/// Exact rational on int64; all bound arithmetic stays in this type.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) {
    if (den == 0) throw InputError("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
  Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
  Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }

  bool operator==(const Rational&) const = default;
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
  bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }

  long long floor() const { return num >= 0 ? num / den : -((-num + den - 1) / den); }
  long long ceil() const { return num >= 0 ? (num + den - 1) / den : -((-num) / den); }

  std::string to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

struct BoundValue {
  Rational value;
  long long floor_value = 0;
  long long ceil_value = 0;
  std::string formula_id;
};

inline BoundValue make_bound(Rational v, std::string id) {
  return {v, v.floor(), v.ceil(), std::move(id)};
}

struct ConstructionOutput {
  Digraph graph;
  int root;
  Configuration extremal_config;
  bool claimed_unsolvable;
  std::map<std::string, long long> parameters;
};

/// Extremal diameter-2 graph on n = 2k+1: parts A (independent) and B
/// (complete bidirected), matching a_i -> b_i, all non-matching arcs
/// reversed b_j -> a_i, every b -> root, root -> every a. Three pebbles per
/// A-vertex is unsolvable, so pi >= 3k + 1.
inline ConstructionOutput build_mixed2(int k) {
  if (k < 1) throw InputError("build_mixed2 requires k >= 1");
  const int n = 2 * k + 1;
  const int root = 2 * k;
  Digraph g(n);
  for (int i = 0; i < k; ++i) {
    g.add_arc(i, k + i);  // matching a_i -> b_i
    for (int j = 0; j < k; ++j)
      if (j != i) g.add_arc(k + j, i);  // non-matching pairs reversed
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) g.add_arc(k + i, k + j);  // complete bidirected on B
  for (int j = 0; j < k; ++j) g.add_arc(k + j, root);
  for (int i = 0; i < k; ++i) g.add_arc(root, i);

  Configuration c(n);
  for (int i = 0; i < k; ++i) c.counts[static_cast<size_t>(i)] = 3;
  return {std::move(g), root, std::move(c), true, {{"k", k}}};
}

/// Layered diameter-d graph on n = dk+1 (uniform layers of size k): layers
/// 1..d-1 independent, layer d complete bidirected, directed matchings
/// toward the root, layer-d back-arcs to every earlier vertex except the
/// matching predecessor. 2^d - 1 pebbles per layer-1 vertex is unsolvable,
/// certifying pi >= k(2^d - 1) + 1.
inline ConstructionOutput build_layered(int d, int k) {
  if (d < 2) throw InputError("build_layered requires d >= 2");
  if (k < 1) throw InputError("build_layered requires k >= 1");
  const int n = d * k + 1;
  if (n > kMaxVertices) throw InputError("build_layered: graph too large");
  const int root = d * k;
  auto layer_vertex = [k](int layer, int j) { return (layer - 1) * k + j; };

  Digraph g(n);
  for (int layer = 1; layer < d; ++layer)
    for (int j = 0; j < k; ++j) g.add_arc(layer_vertex(layer, j), layer_vertex(layer + 1, j));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) g.add_arc(layer_vertex(d, i), layer_vertex(d, j));
  for (int j = 0; j < k; ++j) g.add_arc(layer_vertex(d, j), root);
  for (int j = 0; j < k; ++j) g.add_arc(root, layer_vertex(1, j));
  for (int j = 0; j < k; ++j)
    for (int layer = 1; layer < d; ++layer)
      for (int i = 0; i < k; ++i)
        if (!(layer == d - 1 && i == j)) g.add_arc(layer_vertex(d, j), layer_vertex(layer, i));

  Configuration c(n);
  const uint32_t per_vertex = (uint32_t{1} << d) - 1;
  for (int j = 0; j < k; ++j) c.counts[static_cast<size_t>(layer_vertex(1, j))] = per_vertex;
  return {std::move(g), root, std::move(c), true, {{"d", d}, {"k", k}}};
}

/// (2^(d-1) - 1) floor((n-1)/2) + 2^((n-2) mod d) - 1, as stated.
inline BoundValue bound_dboundsharp_statement(long long n, long long d) {
  if (n < 2 || d < 1) throw InputError("bound_dboundsharp_statement requires n >= 2, d >= 1");
  long long value = ((1ll << (d - 1)) - 1) * ((n - 1) / 2) + (1ll << ((n - 2) % d)) - 1;
  return make_bound(Rational(value), "statement");
}

/// k(2^d - 1) + 1 with k = (n-1)/d: the lower bound the layered generator
/// actually certifies. Defined only when d divides n-1.
inline BoundValue bound_construction_certified(long long n, long long d) {
  if (d < 2) throw InputError("bound_construction_certified requires d >= 2");
  if ((n - 1) % d != 0)
    throw InputError("bound_construction_certified requires d | (n-1)");
  long long k = (n - 1) / d;
  return make_bound(Rational(k * ((1ll << d) - 1) + 1), "construction_certified");
}

/// n(2^d/d - 1) + 2^(4d+1)(1 - 1/d), exact rational.
inline BoundValue bound_dboundupper(long long n, long long d) {
  if (n < 1 || d < 1) throw InputError("bound_dboundupper requires n >= 1, d >= 1");
  if (d > 14) throw InputError("bound_dboundupper: d too large for exact int64 arithmetic");
  Rational value = Rational(n) * (Rational(1ll << d, d) - Rational(1)) +
                   Rational(1ll << (4 * d + 1)) * (Rational(1) - Rational(1, d));
  return make_bound(value, "dboundupper");
}

struct BoundCheck {
  std::string name;
  bool applicable = false;
  bool pass = true;
  std::string detail;
};

struct BoundsReport {
  std::vector<BoundCheck> checks;
  bool all_pass = true;
};

/// Checks each applicable inequality of the diameter bounds against a
/// computed pebbling number.
inline BoundsReport verify_bounds(const Digraph& g, const PebblingNumberResult& result) {
  auto diam = strong_diameter(g);
  if (!diam) throw InputError("verify_bounds requires a strongly connected graph");
  const int n = g.order();
  const int d = *diam;
  const int pi = result.pi;
  BoundsReport report;

  BoundCheck no_bi{"noBiN+1 (oriented, diameter 2): pi <= n+1"};
  if (is_oriented(g) && d == 2) {
    no_bi.applicable = true;
    no_bi.pass = pi <= n + 1;
    no_bi.detail = std::to_string(pi) + " <= " + std::to_string(n + 1);
  }
  report.checks.push_back(no_bi);

  BoundCheck mixed{"mixed2 (diameter 2): pi < 3n/2"};
  if (d == 2) {
    mixed.applicable = true;
    mixed.pass = Rational(pi) < Rational(3 * n, 2);
    mixed.detail = std::to_string(pi) + " < " + Rational(3 * n, 2).to_string();
  }
  report.checks.push_back(mixed);

  BoundCheck upper{"dboundupper: pi <= ceil(n(2^d/d - 1) + 2^(4d+1)(1 - 1/d))"};
  upper.applicable = true;
  long long bound = bound_dboundupper(n, d).ceil_value;
  upper.pass = pi <= bound;
  upper.detail = std::to_string(pi) + " <= " + std::to_string(bound);
  report.checks.push_back(upper);

  for (const auto& check : report.checks)
    if (check.applicable && !check.pass) report.all_pass = false;
  return report;
}

}  // namespace pebble
