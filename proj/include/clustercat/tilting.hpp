#pragma once

// Tilting sets of the cluster category: maximal Ext^1-free sets of
// indecomposables, their two-completions and the exchange graph.

#include <algorithm>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "clustercat/cluster.hpp"

namespace clustercat {

using TiltingSet = std::vector<std::size_t>;  // sorted object ids

inline constexpr std::size_t default_rank_cap = 8;

/// Adjacency of the Ext^1-compatibility graph (self-compatible objects only).
struct CompatibilityGraph {
  std::vector<bool> vertex;               // Ext^1_C(X, X) = 0
  std::vector<std::vector<bool>> adjacent;  // Ext^1_C(X, Y) = 0, X != Y
};

inline CompatibilityGraph compatibility_graph(const ClusterCategory& c) {
  const std::size_t n = c.size();
  CompatibilityGraph g;
  g.vertex.assign(n, false);
  g.adjacent.assign(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) g.vertex[x] = c.ext1(x, x) == 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (g.vertex[x] && g.vertex[y] && c.ext1(x, y) == 0) g.adjacent[x][y] = g.adjacent[y][x] = true;
  return g;
}

inline bool is_exceptional(const ClusterCategory& c, const std::vector<std::size_t>& set) {
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a; b < set.size(); ++b)
      if (c.ext1(set[a], set[b]) != 0) return false;
  return true;
}

/// Exceptional and not extendable by any further indecomposable.
inline bool is_tilting(const ClusterCategory& c, const std::vector<std::size_t>& set) {
  if (!is_exceptional(c, set)) return false;
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (std::find(set.begin(), set.end(), x) != set.end()) continue;
    auto bigger = set;
    bigger.push_back(x);
    if (is_exceptional(c, bigger)) return false;
  }
  return true;
}

namespace detail {

// Bron-Kerbosch with pivoting; R, P, X as sorted vectors.
inline void bron_kerbosch(const CompatibilityGraph& g, std::vector<std::size_t>& r, std::vector<std::size_t> p,
                          std::vector<std::size_t> x, std::vector<TiltingSet>& out) {
  if (p.empty() && x.empty()) {
    TiltingSet s = r;
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
    return;
  }
  // Pivot maximizing |P n N(u)|.
  std::size_t pivot = 0, best = 0;
  bool have = false;
  for (const auto* set : {&p, &x})
    for (std::size_t u : *set) {
      std::size_t cnt = 0;
      for (std::size_t v : p) cnt += g.adjacent[u][v];
      if (!have || cnt > best) {
        pivot = u;
        best = cnt;
        have = true;
      }
    }
  std::vector<std::size_t> candidates;
  for (std::size_t v : p)
    if (!g.adjacent[pivot][v]) candidates.push_back(v);
  for (std::size_t v : candidates) {
    std::vector<std::size_t> p2, x2;
    for (std::size_t w : p)
      if (g.adjacent[v][w]) p2.push_back(w);
    for (std::size_t w : x)
      if (g.adjacent[v][w]) x2.push_back(w);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace detail

/// All maximal Ext^1-free sets, sorted. The size of each set is not assumed.
inline std::vector<TiltingSet> maximal_exceptional_sets(const ClusterCategory& c, std::size_t rank_cap = default_rank_cap) {
  if (c.rank() > rank_cap)
    throw InputError("rank " + std::to_string(c.rank()) + " exceeds the enumeration cap " + std::to_string(rank_cap));
  CompatibilityGraph g = compatibility_graph(c);
  std::vector<std::size_t> p;
  for (std::size_t x = 0; x < c.size(); ++x)
    if (g.vertex[x]) p.push_back(x);
  std::vector<TiltingSet> out;
  std::vector<std::size_t> r;
  detail::bron_kerbosch(g, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Tilting sets; throws if a maximal Ext-free set does not have n elements.
inline std::vector<TiltingSet> enumerate_tilting_sets(const ClusterCategory& c, std::size_t rank_cap = default_rank_cap) {
  auto sets = maximal_exceptional_sets(c, rank_cap);
  for (const auto& s : sets)
    if (s.size() != c.rank())
      throw InvariantViolation("maximal Ext-free set with " + std::to_string(s.size()) + " elements in rank " +
                               std::to_string(c.rank()));
  return sets;
}

/// Every X with B u {X} tilting, for an exceptional B of size n - 1.
inline std::vector<std::size_t> complements(const ClusterCategory& c, const std::vector<std::size_t>& b) {
  if (b.size() + 1 != c.rank()) throw InputError("almost complete tilting set must have n - 1 elements");
  if (!is_exceptional(c, b)) throw InputError("set is not exceptional");
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (std::find(b.begin(), b.end(), x) != b.end()) continue;
    auto t = b;
    t.push_back(x);
    if (is_tilting(c, t)) out.push_back(x);
  }
  return out;
}

/// The completions of B; exactly two are required.
inline std::vector<std::size_t> complete_almost_tilting(const ClusterCategory& c, const std::vector<std::size_t>& b) {
  auto out = complements(c, b);
  if (out.size() != 2)
    throw InvariantViolation("almost complete tilting set has " + std::to_string(out.size()) + " completions");
  return out;
}

/// Pairs (i, j), i < j, of tilting sets sharing all but one element.
inline std::vector<std::pair<std::size_t, std::size_t>> exchange_graph(const std::vector<TiltingSet>& sets) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (sets[i].size() != sets[j].size()) continue;
      std::vector<std::size_t> common;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(), std::back_inserter(common));
      if (common.size() + 1 == sets[i].size()) edges.emplace_back(i, j);
    }
  return edges;
}

/// True when every member is a module (degree 0).
inline bool all_modules(const ClusterCategory& c, const TiltingSet& t) {
  return std::all_of(t.begin(), t.end(), [&](std::size_t x) { return !c.object(x).shifted; });
}

}  // namespace clustercat
