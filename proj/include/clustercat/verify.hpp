#pragma once

// Every invariant suite for one quiver, as a list of reports.

#include <string>
#include <vector>

#include "clustercat/cta.hpp"
#include "clustercat/k0.hpp"
#include "clustercat/orbit_functors.hpp"

namespace clustercat {

struct VerifyOptions {
  std::size_t rank_cap = default_rank_cap;
  std::size_t associativity_rank = 4;  // full associativity checks up to this rank
};

inline VerificationReport verify_roots(const ValuedQuiver& q) {
  VerificationReport r;
  r.name = "roots";
  const CartanData& c = q.cartan();
  auto pos = enumerate_positive_roots(c);
  auto almost = almost_positive_roots(c);
  std::set<AlmostPositiveRoot> all(almost.begin(), almost.end());
  for (std::size_t k = 0; k < q.rank(); ++k) {
    const int kk = static_cast<int>(k);
    for (const auto& a : almost) {
      auto b = truncated_reflection(kk, a, c);
      r.check(all.count(b) == 1, "sigma" + std::to_string(k + 1) + " " + a.str(), "almost positive", b.str());
      auto back = truncated_reflection(kk, b, c);
      r.check(back == a, "sigma" + std::to_string(k + 1) + " twice " + a.str(), a.str(), back.str());
    }
    for (const auto& p : pos) {
      if (p == RootVec::simple(q.rank(), kk)) continue;
      RootVec s = simple_reflection(kk, p, c);
      r.check(std::binary_search(pos.begin(), pos.end(), s,
                                 [](const RootVec& x, const RootVec& y) {
                                   return x.height() != y.height() ? x.height() < y.height() : x < y;
                                 }),
              "s" + std::to_string(k + 1) + " " + p.str(), "positive root", s.str());
    }
  }
  return r;
}

inline VerificationReport verify_modules(const QuiverPtr& q) {
  VerificationReport r;
  r.name = "modules";
  Catalog cat(q);
  auto d = projective_data(*q);
  r.check(cat.size() == enumerate_positive_roots(q->cartan()).size(), "catalog size",
          std::to_string(enumerate_positive_roots(q->cartan()).size()), std::to_string(cat.size()));
  for (const auto& x : cat.entries()) {
    r.check(hom_space(x.rep, x.rep).dim() == 1, "End " + x.key.str(), "1", std::to_string(hom_space(x.rep, x.rep).dim()));
    for (const auto& y : cat.entries()) {
      auto he = hom_ext(x.rep, y.rep);
      long lhs = static_cast<long>(he.hom.dim()) - static_cast<long>(he.ext.dim());
      long rhs = euler_form(d, x.key, y.key);
      r.check(lhs == rhs, "Euler " + x.key.str() + " " + y.key.str(), std::to_string(rhs), std::to_string(lhs));
      std::size_t ar = x.projective_vertex ? 0 : hom_space(y.rep, cat[*x.tau].rep).dim();
      r.check(he.ext.dim() == ar, "AR " + x.key.str() + " " + y.key.str(), std::to_string(ar), std::to_string(he.ext.dim()));
    }
    for (std::size_t k = 0; k < q->rank(); ++k) {
      const int kk = static_cast<int>(k);
      if (!q->is_sink(kk) || x.key == RootVec::simple(q->rank(), kk)) continue;
      auto s = reflect(kk, ReflectionSign::plus, x.rep);
      auto expected = simple_reflection(kk, x.key, q->cartan());
      r.check(s.dims == expected, "S" + std::to_string(k + 1) + "+ " + x.key.str(), expected.str(), s.dims.str());
    }
  }
  return r;
}

inline VerificationReport verify_cluster(const ClusterCategory& c) {
  VerificationReport r;
  r.name = "cluster category";
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y) {
      const std::string pair = c.object(x).label() + " " + c.object(y).label();
      std::size_t e = c.ext1(x, y), f = c.ext1(y, x);
      r.check(e == f, "Ext symmetry " + pair, std::to_string(e), std::to_string(f));
      std::size_t serre = c.hom(y, c.tau(x)).dim();
      r.check(e == serre, "Serre " + pair, std::to_string(serre), std::to_string(e));
      auto [w0, w1] = c.hom_window(x, y);
      r.check(c.hom(x, y).dim() == w0 + w1, "Hom window " + pair, std::to_string(w0 + w1), std::to_string(c.hom(x, y).dim()));
    }
  return r;
}

inline VerificationReport verify_tilting(const ClusterCategory& c, const std::vector<TiltingSet>& sets) {
  VerificationReport r;
  r.name = "tilting sets";
  for (const auto& t : sets) {
    const std::string name = "{" + [&] {
      std::string s;
      for (std::size_t x : t) s += (s.empty() ? "" : " ") + c.object(x).label();
      return s;
    }() + "}";
    r.check(t.size() == c.rank(), name + " size", std::to_string(c.rank()), std::to_string(t.size()));
    for (std::size_t drop = 0; drop < t.size(); ++drop) {
      auto b = t;
      b.erase(b.begin() + static_cast<long>(drop));
      auto comp = complements(c, b);
      r.check(comp.size() == 2, name + " without " + c.object(t[drop]).label(), "2", std::to_string(comp.size()));
    }
  }
  return r;
}

inline VerificationReport verify_algebras(const ClusterCategory& c, const std::vector<TiltingSet>& sets,
                                          const VerifyOptions& opt) {
  VerificationReport r;
  r.name = "cluster-tilted algebras";
  for (const auto& t : sets) {
    std::string name;
    for (std::size_t x : t) name += (name.empty() ? "" : " ") + c.object(x).label();
    auto res = cluster_tilted_algebra(c, t);
    const auto& lam = res.algebra.Lambda;
    r.check(lam.dim() == res.algebra.A.dim() + res.algebra.bimodule_dim, name + " dimension",
            std::to_string(res.algebra.A.dim() + res.algebra.bimodule_dim), std::to_string(lam.dim()));
    r.check(lam.degree_one_squares_to_zero(), name + " degree-1 squares", "0", "nonzero");
    BasicAlgebra direct = cluster_endomorphism_algebra(c, t);
    r.check(direct.dim() == lam.dim(), name + " End_C(T)", std::to_string(lam.dim()), std::to_string(direct.dim()));
    r.check(direct.gabriel_quiver() == res.quiver_Lambda, name + " Gabriel quiver of End_C(T)", "equal", "different");
    if (c.rank() <= opt.associativity_rank) {
      r.check(lam.is_associative(), name + " associativity", "associative", "not associative");
      r.check(lam.unit_acts_trivially(), name + " unit", "unit", "not a unit");
    }
  }
  return r;
}

inline VerificationReport verify_k0(const ValuedQuiver& q) {
  VerificationReport r;
  r.name = "Grothendieck group";
  auto g = k0_quotient(q, K0Auto::shift2);
  r.check(g.free_rank() == q.rank() && g.torsion().empty(), "[2]", "Z^" + std::to_string(q.rank()), g.description());
  auto f = k0_quotient(q, K0Auto::F);
  for (std::size_t i = 1; i < f.invariant_factors.size(); ++i) {
    const auto& a = f.invariant_factors[i - 1];
    const auto& b = f.invariant_factors[i];
    r.check(a != 0 ? b % a == 0 : b == 0, "F invariant factors", "divisibility chain", a.get_str() + ", " + b.get_str());
  }
  return r;
}

/// All suites that apply to the quiver: root combinatorics and reflection
/// diagrams for every Dynkin quiver, module and cluster suites when simply-laced.
inline std::vector<VerificationReport> verify_all(const ValuedQuiver& q, const VerifyOptions& opt = {}) {
  if (!q.is_dynkin()) throw InputError("verification requires a Dynkin quiver");
  std::vector<VerificationReport> out;
  out.push_back(verify_roots(q));
  for (std::size_t k = 0; k < q.rank(); ++k) {
    const int kk = static_cast<int>(k);
    if (!q.is_sink(kk) && !q.is_source(kk)) continue;
    out.push_back(verify_cluster_square(q, kk));
    out.push_back(verify_root_square(q, kk));
  }
  out.push_back(verify_k0(q));
  if (!q.simply_laced()) return out;
  auto qp = make_quiver(q);
  out.push_back(verify_modules(qp));
  ClusterCategory c(qp);
  out.push_back(verify_cluster(c));
  if (q.rank() > opt.rank_cap) {
    VerificationReport skipped;
    skipped.name = "tilting sets skipped: rank " + std::to_string(q.rank()) + " exceeds the cap";
    out.push_back(skipped);
    return out;
  }
  auto sets = enumerate_tilting_sets(c, opt.rank_cap);
  out.push_back(verify_tilting(c, sets));
  out.push_back(verify_algebras(c, sets, opt));
  for (std::size_t k = 0; k < q.rank(); ++k) {
    const int kk = static_cast<int>(k);
    if (q.is_sink(kk) || q.is_source(kk)) out.push_back(equivalence_invariants(q, kk, opt.rank_cap));
  }
  return out;
}

}  // namespace clustercat
