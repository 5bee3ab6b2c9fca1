#pragma once

// Reflection functors induced on the cluster and root categories, the
// bijection gamma onto almost positive roots, and their verification.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clustercat/cluster.hpp"
#include "clustercat/tilting.hpp"

namespace clustercat {

/// Indecomposable named by its dimension vector: a module, a shifted
/// projective P_i[1] (cluster category) or a shifted module M[1] (root category).
struct Label {
  enum class Kind { module, shifted_projective, shifted_module };
  Kind kind = Kind::module;
  RootVec dims;
  int vertex = -1;

  static Label module(RootVec d) { return {Kind::module, std::move(d), -1}; }
  static Label shifted_projective(std::size_t n, int i) { return {Kind::shifted_projective, RootVec::zero(n), i}; }
  static Label shifted_module(RootVec d) { return {Kind::shifted_module, std::move(d), -1}; }

  bool is_module() const { return kind == Kind::module; }
  auto operator<=>(const Label&) const = default;
  std::string str() const {
    switch (kind) {
      case Kind::module: return dims.str();
      case Kind::shifted_projective: return "P" + std::to_string(vertex + 1) + "[1]";
      case Kind::shifted_module: return dims.str() + "[1]";
    }
    return {};
  }
};

/// Positive roots plus P_i[1].
inline std::vector<Label> cluster_domain(const ValuedQuiver& q) {
  std::vector<Label> out;
  for (auto& r : enumerate_positive_roots(q.cartan())) out.push_back(Label::module(r));
  for (std::size_t i = 0; i < q.rank(); ++i) out.push_back(Label::shifted_projective(q.rank(), static_cast<int>(i)));
  return out;
}

/// Positive roots and their shifts.
inline std::vector<Label> root_domain(const ValuedQuiver& q) {
  std::vector<Label> out;
  auto roots = enumerate_positive_roots(q.cartan());
  for (auto& r : roots) out.push_back(Label::module(r));
  for (auto& r : roots) out.push_back(Label::shifted_module(r));
  return out;
}

namespace detail {

inline void require_label_in_cluster_domain(const ValuedQuiver& q, const Label& x) {
  if (x.kind == Label::Kind::shifted_module) throw InputError("label " + x.str() + " is not in the cluster domain");
  if (x.kind == Label::Kind::shifted_projective) {
    if (x.vertex < 0 || static_cast<std::size_t>(x.vertex) >= q.rank()) throw InputError("vertex out of range");
    return;
  }
  auto roots = enumerate_positive_roots(q.cartan());
  if (!std::binary_search(roots.begin(), roots.end(), x.dims, [](const RootVec& a, const RootVec& b) {
        return a.height() != b.height() ? a.height() < b.height() : a < b;
      }))
    throw InputError(x.dims.str() + " is not a positive root");
}

inline void require_sink_or_source(const ValuedQuiver& q, int k) {
  q.check_vertex(k);
  if (!q.is_sink(k) && !q.is_source(k))
    throw InputError("vertex " + std::to_string(k + 1) + " is neither a sink nor a source");
}

}  // namespace detail

/// gamma(M) = dim M, gamma(P_i[1]) = -alpha_i.
inline AlmostPositiveRoot gamma(const ValuedQuiver& q, const Label& x) {
  detail::require_label_in_cluster_domain(q, x);
  if (x.kind == Label::Kind::shifted_projective) return AlmostPositiveRoot::negative_simple(q.rank(), x.vertex);
  return AlmostPositiveRoot::positive(x.dims);
}

/// Induced functor on the cluster category for a sink or source k:
/// E_k -> P'_k[1], P_k[1] -> E'_k, P_j[1] -> P'_j[1], other modules X -> S_k(X).
/// The source version is the inverse of the sink version over s_k Q.
inline Label cluster_reflect(const ValuedQuiver& q, int k, const Label& x) {
  detail::require_sink_or_source(q, k);
  detail::require_label_in_cluster_domain(q, x);
  const std::size_t n = q.rank();
  const RootVec ek = RootVec::simple(n, k);
  if (x.kind == Label::Kind::shifted_projective)
    return x.vertex == k ? Label::module(ek) : x;
  if (x.dims == ek) return Label::shifted_projective(n, k);
  return Label::module(simple_reflection(k, x.dims, q.cartan()));
}

/// Induced functor on the root category: E_k -> E'_k[1], E_k[1] -> E'_k,
/// X -> S_k(X) and X[1] -> S_k(X)[1] otherwise.
inline Label root_reflect(const ValuedQuiver& q, int k, const Label& x) {
  detail::require_sink_or_source(q, k);
  if (x.kind == Label::Kind::shifted_projective) throw InputError("label " + x.str() + " is not in the root domain");
  const RootVec ek = RootVec::simple(q.rank(), k);
  if (x.dims == ek) return x.is_module() ? Label::shifted_module(ek) : Label::module(ek);
  RootVec r = simple_reflection(k, x.dims, q.cartan());
  return x.is_module() ? Label::module(r) : Label::shifted_module(r);
}

/// Signed dimension vector of a root-category label.
inline RootVec root_dim(const Label& x) { return x.kind == Label::Kind::shifted_module ? -x.dims : x.dims; }

/// Label of an object of a catalog-backed cluster category.
inline Label label_of(const ClusterCategory& c, std::size_t x) {
  const auto& o = c.object(x);
  return o.shifted ? Label::shifted_projective(c.rank(), o.vertex) : Label::module(o.dims);
}

inline std::size_t index_of(const ClusterCategory& c, const Label& x) {
  if (x.kind == Label::Kind::shifted_projective) return c.shifted_projective(x.vertex);
  if (x.kind != Label::Kind::module) throw InputError("label " + x.str() + " is not in the cluster domain");
  return c.module(x.dims);
}

struct Counterexample {
  std::string object;
  std::string expected;
  std::string actual;
};

/// Outcome of a verification sweep: what was checked and every failure.
struct VerificationReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<Counterexample> failures;

  bool ok() const { return failures.empty(); }
  void check(bool pass, std::string object, std::string expected, std::string actual) {
    ++checked;
    if (!pass) failures.push_back({std::move(object), std::move(expected), std::move(actual)});
  }
  void merge(const VerificationReport& other) {
    checked += other.checked;
    for (const auto& f : other.failures) failures.push_back({other.name + ": " + f.object, f.expected, f.actual});
  }
};

/// gamma_{s_k Q} o cluster_reflect = sigma_k o gamma_Q on the cluster domain,
/// plus bijectivity, the round trip through the dual functor, projectives
/// P_j -> P'_j at a sink, and for simply-laced quivers the matrix-level
/// reflection functor on every module other than E_k.
inline VerificationReport verify_cluster_square(const ValuedQuiver& q, int k) {
  detail::require_sink_or_source(q, k);
  VerificationReport rep;
  rep.name = "gamma commutes with truncated reflection at vertex " + std::to_string(k + 1);
  const ValuedQuiver q2 = q.reflect_orientation(k);
  const RootVec ek = RootVec::simple(q.rank(), k);
  std::set<Label> images;
  auto domain = cluster_domain(q);
  for (const auto& x : domain) {
    Label y = cluster_reflect(q, k, x);
    images.insert(y);
    AlmostPositiveRoot lhs = gamma(q2, y);
    AlmostPositiveRoot rhs = truncated_reflection(k, gamma(q, x), q.cartan());
    rep.check(lhs == rhs, x.str(), rhs.str(), lhs.str());
    Label back = cluster_reflect(q2, k, y);
    rep.check(back == x, x.str() + " round trip", x.str(), back.str());
  }
  rep.check(images.size() == domain.size(), "bijection", std::to_string(domain.size()), std::to_string(images.size()));
  if (q.is_sink(k)) {
    for (std::size_t j = 0; j < q.rank(); ++j) {
      if (static_cast<int>(j) == k) continue;
      RootVec pj = projective_dimension(q, static_cast<int>(j));
      RootVec pj2 = projective_dimension(q2, static_cast<int>(j));
      rep.check(cluster_reflect(q, k, Label::module(pj)).dims == pj2, "P" + std::to_string(j + 1), pj2.str(),
                cluster_reflect(q, k, Label::module(pj)).dims.str());
    }
  }
  if (q.simply_laced()) {
    auto src = make_quiver(q);
    auto dst = make_quiver(q2);
    Catalog cat(src);
    const ReflectionSign sign = q.is_sink(k) ? ReflectionSign::plus : ReflectionSign::minus;
    for (const auto& e : cat.entries()) {
      if (e.key == ek) continue;
      Representation r = reflect_with_data(e.rep, k, sign, dst).rep;
      Label expected = cluster_reflect(q, k, Label::module(e.key));
      rep.check(r.dims == expected.dims, e.key.str() + " matrix level", expected.dims.str(), r.dims.str());
      rep.check(hom_space(r, r).dim() == 1, e.key.str() + " indecomposable", "1", std::to_string(hom_space(r, r).dim()));
    }
  }
  return rep;
}

/// dim o root_reflect = s_k o dim on the root domain, with the matrix-level
/// functor checked on modules for simply-laced quivers.
inline VerificationReport verify_root_square(const ValuedQuiver& q, int k) {
  detail::require_sink_or_source(q, k);
  VerificationReport rep;
  rep.name = "dim commutes with reflection at vertex " + std::to_string(k + 1);
  const ValuedQuiver q2 = q.reflect_orientation(k);
  std::set<Label> images;
  auto domain = root_domain(q);
  for (const auto& x : domain) {
    Label y = root_reflect(q, k, x);
    images.insert(y);
    RootVec lhs = root_dim(y);
    RootVec rhs = simple_reflection(k, root_dim(x), q.cartan());
    rep.check(lhs == rhs, x.str(), rhs.str(), lhs.str());
    Label back = root_reflect(q2, k, y);
    rep.check(back == x, x.str() + " round trip", x.str(), back.str());
    // [1]-equivariance
    Label shifted = x.is_module() ? Label::shifted_module(x.dims) : Label::module(x.dims);
    rep.check(root_dim(root_reflect(q, k, shifted)) == -lhs, x.str() + " shift", (-lhs).str(),
              root_dim(root_reflect(q, k, shifted)).str());
  }
  rep.check(images.size() == domain.size(), "bijection", std::to_string(domain.size()), std::to_string(images.size()));
  if (q.simply_laced()) {
    auto src = make_quiver(q);
    auto dst = make_quiver(q2);
    Catalog cat(src);
    const ReflectionSign sign = q.is_sink(k) ? ReflectionSign::plus : ReflectionSign::minus;
    const RootVec ek = RootVec::simple(q.rank(), k);
    for (const auto& e : cat.entries()) {
      if (e.key == ek) continue;
      Representation r = reflect_with_data(e.rep, k, sign, dst).rep;
      RootVec expected = simple_reflection(k, e.key, q.cartan());
      rep.check(r.dims == expected, e.key.str() + " matrix level", expected.str(), r.dims.str());
    }
  }
  return rep;
}

/// Cluster-category reflection as a map of object ids between catalog
/// categories over Q and s_k Q.
inline std::vector<std::size_t> cluster_reflect_objects(const ClusterCategory& src, const ClusterCategory& dst, int k) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < src.size(); ++x) out.push_back(index_of(dst, cluster_reflect(*src.quiver(), k, label_of(src, x))));
  return out;
}

/// The reflection is a bijection of indecomposables preserving Ext^1_C, and
/// it maps tilting sets onto tilting sets.
inline VerificationReport equivalence_invariants(const ValuedQuiver& q, int k, std::size_t rank_cap = default_rank_cap) {
  detail::require_sink_or_source(q, k);
  VerificationReport rep;
  rep.name = "reflection at vertex " + std::to_string(k + 1) + " preserves Ext and tilting sets";
  if (!q.simply_laced()) return rep;
  ClusterCategory src(make_quiver(q));
  ClusterCategory dst(make_quiver(q.reflect_orientation(k)));
  auto phi = cluster_reflect_objects(src, dst, k);
  std::set<std::size_t> image(phi.begin(), phi.end());
  rep.check(image.size() == src.size() && src.size() == dst.size(), "bijection", std::to_string(src.size()),
            std::to_string(image.size()));
  for (std::size_t x = 0; x < src.size(); ++x)
    for (std::size_t y = 0; y < src.size(); ++y) {
      std::size_t a = src.ext1(x, y), b = dst.ext1(phi[x], phi[y]);
      rep.check(a == b, "Ext(" + src.object(x).label() + ", " + src.object(y).label() + ")", std::to_string(a),
                std::to_string(b));
    }
  auto ts = enumerate_tilting_sets(src, rank_cap);
  auto td = enumerate_tilting_sets(dst, rank_cap);
  rep.check(ts.size() == td.size(), "tilting count", std::to_string(ts.size()), std::to_string(td.size()));
  std::set<TiltingSet> target(td.begin(), td.end());
  for (const auto& t : ts) {
    TiltingSet m;
    for (std::size_t x : t) m.push_back(phi[x]);
    std::sort(m.begin(), m.end());
    std::string name;
    for (std::size_t x : t) name += src.object(x).label() + " ";
    rep.check(target.count(m) == 1, "tilting set " + name, "tilting", "not tilting");
  }
  return rep;
}

/// A tilting set carried by reflections to a quiver where every member is a module.
struct NormalizedTilting {
  ValuedQuiver quiver;
  std::vector<Label> labels;
  std::vector<int> reflections;  // vertices reflected at, in order
};

/// Breadth-first search over sequences of sink/source reflections; member
/// order is preserved.
inline NormalizedTilting normalize_to_modules(const ValuedQuiver& q, const std::vector<Label>& labels) {
  auto done = [](const std::vector<Label>& ls) {
    return std::all_of(ls.begin(), ls.end(), [](const Label& l) { return l.is_module(); });
  };
  auto key = [](const ValuedQuiver& v, const std::vector<Label>& ls) {
    std::string s;
    for (const auto& a : v.arrows()) s += std::to_string(a.source) + ">" + std::to_string(a.target) + ";";
    for (const auto& l : ls) s += l.str() + ";";
    return s;
  };
  std::deque<NormalizedTilting> queue{{q, labels, {}}};
  std::set<std::string> seen{key(q, labels)};
  while (!queue.empty()) {
    NormalizedTilting cur = std::move(queue.front());
    queue.pop_front();
    if (done(cur.labels)) return cur;
    for (std::size_t k = 0; k < cur.quiver.rank(); ++k) {
      const int v = static_cast<int>(k);
      if (!cur.quiver.is_sink(v) && !cur.quiver.is_source(v)) continue;
      NormalizedTilting next{cur.quiver.reflect_orientation(v), {}, cur.reflections};
      for (const auto& l : cur.labels) next.labels.push_back(cluster_reflect(cur.quiver, v, l));
      next.reflections.push_back(v);
      if (seen.insert(key(next.quiver, next.labels)).second) queue.push_back(std::move(next));
    }
  }
  throw InvariantViolation("no reflection sequence turns the tilting set into modules");
}

}  // namespace clustercat
