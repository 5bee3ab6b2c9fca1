#pragma once

// Cluster-tilted algebras of tilting sets, APR-tilting sets T(k), and the
// Gabriel-quiver comparison between A and Lambda.

#include <string>
#include <utility>
#include <vector>

#include "clustercat/algebra.hpp"
#include "clustercat/orbit_functors.hpp"

namespace clustercat {

/// Ext^1_H(T, T) = 0 and n pairwise non-isomorphic summands.
inline bool is_tilting_module(const QuiverPtr& q, const std::vector<Representation>& t) {
  if (t.size() != q->rank()) return false;
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b)
      if (ext_space(t[a], t[b]).dim() != 0) return false;
    for (std::size_t b = a + 1; b < t.size(); ++b)
      if (t[a].dims == t[b].dims) return false;
  }
  return true;
}

/// A = End_H(T), Lambda = A x D Hom_H(T, tau^2 T) for a tilting module T.
inline ClusterTiltedAlgebra cluster_tilted_algebra(const QuiverPtr& q, const std::vector<Representation>& t) {
  detail::check_modules(q, t);
  if (!is_tilting_module(q, t)) throw InputError("not a tilting module");
  return trivial_extension(q, t);
}

/// Arrows of `big` not present (with multiplicity) in `small`.
inline std::vector<std::pair<std::size_t, std::size_t>> extra_arrows(const GabrielQuiver& small, const GabrielQuiver& big) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [k, v] : big.arrows)
    for (std::size_t i = small.count(k.first, k.second); i < v; ++i) out.push_back(k);
  return out;
}

/// Everything computed for one tilting set.
struct CtaResult {
  NormalizedTilting normalized;
  std::vector<Representation> modules;
  ClusterTiltedAlgebra algebra;
  GabrielQuiver quiver_A;
  GabrielQuiver quiver_Lambda;
  std::vector<std::pair<std::size_t, std::size_t>> extra;
};

/// Reflects the set into modules if needed, then builds A and Lambda.
inline CtaResult cluster_tilted_algebra(const ValuedQuiver& q, const std::vector<Label>& labels) {
  CtaResult r;
  r.normalized = normalize_to_modules(q, labels);
  auto qp = make_quiver(r.normalized.quiver);
  Catalog cat(qp);
  for (const auto& l : r.normalized.labels) r.modules.push_back(cat[cat.at(l.dims)].rep);
  r.algebra = cluster_tilted_algebra(qp, r.modules);
  r.quiver_A = r.algebra.A.gabriel_quiver();
  r.quiver_Lambda = r.algebra.Lambda.gabriel_quiver();
  r.extra = extra_arrows(r.quiver_A, r.quiver_Lambda);
  return r;
}

inline CtaResult cluster_tilted_algebra(const ClusterCategory& c, const std::vector<std::size_t>& t) {
  std::vector<Label> labels;
  for (std::size_t x : t) labels.push_back(label_of(c, x));
  return cluster_tilted_algebra(*c.quiver(), labels);
}

/// T(k) = {P_i : i != k} u {tau^-1 E_k}, with T(k)_i at position i.
inline std::vector<std::size_t> apr_tilting(const ClusterCategory& c, int k) {
  c.quiver()->check_vertex(k);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.rank(); ++i)
    out.push_back(static_cast<int>(i) == k ? c.tau_inverse(c.simple_module(k)) : c.projective_module(static_cast<int>(i)));
  return out;
}

}  // namespace clustercat
