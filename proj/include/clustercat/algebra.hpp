#pragma once

// Basic algebras given by structure constants: End_H(T), the trivial
// extension A x D Hom_H(T, tau^2 T), End_C(T), and modules over them.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clustercat/cluster.hpp"
#include "clustercat/rep.hpp"

namespace clustercat {

/// A basis element is a morphism T_source -> T_target of the given degree.
struct BasisElement {
  std::size_t source = 0;
  std::size_t target = 0;
  int degree = 0;
};

/// Arrow multiplicities of a Gabriel quiver, keyed by (from, to).
struct GabrielQuiver {
  std::size_t vertices = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrows;

  std::size_t arrow_count() const {
    std::size_t s = 0;
    for (auto& [k, v] : arrows) s += v;
    return s;
  }
  std::size_t count(std::size_t from, std::size_t to) const {
    auto it = arrows.find({from, to});
    return it == arrows.end() ? 0 : it->second;
  }
  friend bool operator==(const GabrielQuiver&, const GabrielQuiver&) = default;
};

/// Finite-dimensional algebra on a basis of morphisms between summands, with
/// product x * y = x o y (first y, then x).
class BasicAlgebra {
 public:
  using Sparse = std::vector<std::pair<std::size_t, Rational>>;

  BasicAlgebra() = default;
  BasicAlgebra(std::size_t vertices, std::vector<BasisElement> basis)
      : vertices_(vertices), basis_(std::move(basis)), products_(basis_.size(), std::vector<Sparse>(basis_.size())) {}

  std::size_t vertices() const { return vertices_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& element(std::size_t i) const { return basis_.at(i); }

  void set_product(std::size_t a, std::size_t b, const Vector& coeffs) {
    Sparse s;
    for (std::size_t c = 0; c < coeffs.size(); ++c)
      if (sgn(coeffs[c]) != 0) s.emplace_back(c, coeffs[c]);
    products_.at(a).at(b) = std::move(s);
  }
  const Sparse& product(std::size_t a, std::size_t b) const { return products_.at(a).at(b); }

  Vector multiply(const Vector& x, const Vector& y) const {
    Vector out(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      if (sgn(x[a]) == 0) continue;
      for (std::size_t b = 0; b < dim(); ++b) {
        if (sgn(y[b]) == 0) continue;
        for (const auto& [c, v] : products_[a][b]) out[c] += x[a] * y[b] * v;
      }
    }
    return out;
  }

  Vector unit_vector(std::size_t a) const {
    Vector v(dim());
    v.at(a) = 1;
    return v;
  }

  /// Sum of the identity endomorphisms, given in coordinates.
  void set_unit(Vector u) { unit_ = std::move(u); }
  const Vector& unit() const { return unit_; }

  std::size_t dim_between(std::size_t source, std::size_t target) const {
    std::size_t n = 0;
    for (const auto& e : basis_) n += e.source == source && e.target == target;
    return n;
  }
  std::size_t degree_dim(int degree) const {
    std::size_t n = 0;
    for (const auto& e : basis_) n += e.degree == degree;
    return n;
  }

  /// Products of basis elements whose endpoints do not match must vanish, and
  /// (xy)z = x(yz) on all basis triples.
  bool is_associative() const {
    for (std::size_t a = 0; a < dim(); ++a)
      for (std::size_t b = 0; b < dim(); ++b) {
        if (basis_[b].target != basis_[a].source && !products_[a][b].empty()) return false;
        for (std::size_t c = 0; c < dim(); ++c) {
          Vector lhs = multiply(multiply(unit_vector(a), unit_vector(b)), unit_vector(c));
          Vector rhs = multiply(unit_vector(a), multiply(unit_vector(b), unit_vector(c)));
          if (lhs != rhs) return false;
        }
      }
    return true;
  }

  bool unit_acts_trivially() const {
    if (unit_.size() != dim()) return false;
    for (std::size_t a = 0; a < dim(); ++a)
      if (multiply(unit_, unit_vector(a)) != unit_vector(a) || multiply(unit_vector(a), unit_) != unit_vector(a))
        return false;
    return true;
  }

  /// Every product of two degree-1 basis elements is zero.
  bool degree_one_squares_to_zero() const {
    for (std::size_t a = 0; a < dim(); ++a)
      for (std::size_t b = 0; b < dim(); ++b)
        if (basis_[a].degree == 1 && basis_[b].degree == 1 && !products_[a][b].empty()) return false;
    return true;
  }

  /// Arrow i -> j for each irreducible morphism T_j -> T_i, counted as
  /// dim e(rad / rad^2) between the summands. The radical is spanned by every
  /// basis element except the degree-0 endomorphisms, which must be scalar.
  GabrielQuiver gabriel_quiver() const {
    std::vector<std::size_t> rad;
    std::vector<int> identity(vertices_, -1);
    for (std::size_t a = 0; a < dim(); ++a) {
      const auto& e = basis_[a];
      if (e.source == e.target && e.degree == 0) {
        if (identity[e.source] != -1)
          throw InputError("degree-0 endomorphisms at vertex " + std::to_string(e.source + 1) + " are not scalar");
        identity[e.source] = static_cast<int>(a);
      } else {
        rad.push_back(a);
      }
    }
    for (std::size_t v = 0; v < vertices_; ++v)
      if (identity[v] == -1) throw InputError("no identity at vertex " + std::to_string(v + 1));
    // Isomorphic summands: a product through another vertex hits an identity.
    for (std::size_t a : rad)
      for (std::size_t b : rad) {
        if (basis_[b].target != basis_[a].source) continue;
        for (const auto& [c, x] : products_[a][b])
          if (static_cast<int>(c) == identity[basis_[c].source]) throw InputError("algebra is not basic");
      }
    GabrielQuiver g;
    g.vertices = vertices_;
    for (std::size_t s = 0; s < vertices_; ++s)
      for (std::size_t t = 0; t < vertices_; ++t) {
        std::size_t block = 0;
        for (std::size_t a : rad) block += basis_[a].source == s && basis_[a].target == t;
        if (block == 0) continue;
        std::vector<Vector> squares;
        for (std::size_t a : rad)
          for (std::size_t b : rad) {
            if (basis_[b].source != s || basis_[a].target != t || basis_[b].target != basis_[a].source) continue;
            Vector v(dim());
            for (const auto& [c, x] : products_[a][b]) v[c] = x;
            if (!is_zero(v)) squares.push_back(std::move(v));
          }
        std::size_t arrows = block - span_dim(squares, dim());
        if (arrows) g.arrows[{t, s}] = arrows;
      }
    return g;
  }

 private:
  std::size_t vertices_ = 0;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<Sparse>> products_;
  Vector unit_;
};

/// A x D Hom_H(T, tau^2 T) together with its ingredients.
struct ClusterTiltedAlgebra {
  BasicAlgebra A;
  BasicAlgebra Lambda;
  std::size_t bimodule_dim = 0;
};

namespace detail {

// tau^2 on a list of modules, with the chains needed to move morphisms.
struct TauSquared {
  std::vector<CoxeterChain> first, second;
  std::vector<std::optional<Representation>> image;

  explicit TauSquared(const std::vector<Representation>& t) {
    for (const auto& m : t) {
      first.push_back(coxeter_chain(m, 1));
      if (first.back().result) {
        second.push_back(coxeter_chain(*first.back().result, 1));
        image.push_back(second.back().result);
      } else {
        second.emplace_back();
        image.emplace_back();
      }
    }
  }

  std::optional<RepMorphism> map(std::size_t z, std::size_t a, const RepMorphism& v) const {
    if (!image[z] || !image[a]) return std::nullopt;
    auto once = coxeter_translate(first[z], first[a], v);
    if (!once) return std::nullopt;
    return coxeter_translate(second[z], second[a], *once);
  }
};

inline void check_modules(const QuiverPtr& q, const std::vector<Representation>& t) {
  if (t.empty()) throw InputError("empty tilting module");
  for (const auto& m : t) {
    detail::require_same_quiver(m, Representation{q, {}, {}});
    if (m.is_zero()) throw InputError("zero summand");
  }
}

}  // namespace detail

/// End_H(T) for a list of indecomposable modules T_1..T_m.
inline BasicAlgebra endomorphism_algebra(const std::vector<Representation>& t) {
  const std::size_t m = t.size();
  std::vector<std::vector<HomSpace>> homs(m, std::vector<HomSpace>(m));
  std::vector<BasisElement> basis;
  std::vector<std::vector<std::size_t>> offset(m, std::vector<std::size_t>(m));
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t u = 0; u < m; ++u) {
      homs[s][u] = hom_space(t[s], t[u]);
      offset[s][u] = basis.size();
      for (std::size_t k = 0; k < homs[s][u].dim(); ++k) basis.push_back({s, u, 0});
    }
  BasicAlgebra alg(m, basis);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto& x = basis[a];
      const auto& y = basis[b];
      if (y.target != x.source) continue;
      RepMorphism fx = homs[x.source][x.target].basis(a - offset[x.source][x.target]);
      RepMorphism fy = homs[y.source][y.target].basis(b - offset[y.source][y.target]);
      Vector c = homs[y.source][x.target].coords(compose(fx, fy));
      Vector full(basis.size());
      for (std::size_t k = 0; k < c.size(); ++k) full[offset[y.source][x.target] + k] = c[k];
      alg.set_product(a, b, full);
    }
  Vector unit(basis.size());
  for (std::size_t s = 0; s < m; ++s) {
    Vector c = homs[s][s].coords(identity_morphism(t[s]));
    for (std::size_t k = 0; k < c.size(); ++k) unit[offset[s][s] + k] = c[k];
  }
  alg.set_unit(std::move(unit));
  return alg;
}

/// Lambda = A x D Hom_H(T, tau^2 T). The dual basis element xi of
/// D Hom(T_b, tau^2 T_a) is a degree-1 morphism T_a -> T_b, with
/// (u o xi)(m) = xi(m o u) and (xi o v)(m) = xi(tau^2(v) o m).
inline ClusterTiltedAlgebra trivial_extension(const QuiverPtr& q, const std::vector<Representation>& t) {
  detail::check_modules(q, t);
  const std::size_t m = t.size();
  ClusterTiltedAlgebra out;
  out.A = endomorphism_algebra(t);
  detail::TauSquared tau2(t);

  // Hom(T_b, tau^2 T_a) for every pair with tau^2 T_a nonzero.
  std::vector<std::vector<std::optional<HomSpace>>> dual(m, std::vector<std::optional<HomSpace>>(m));
  std::vector<std::vector<std::size_t>> dual_offset(m, std::vector<std::size_t>(m, 0));
  std::vector<BasisElement> basis = out.A.basis();
  const std::size_t a_dim = basis.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (!tau2.image[a]) continue;
      dual[b][a] = hom_space(t[b], *tau2.image[a]);
      dual_offset[b][a] = basis.size();
      for (std::size_t k = 0; k < dual[b][a]->dim(); ++k) basis.push_back({a, b, 1});
    }
  out.bimodule_dim = basis.size() - a_dim;

  // Recover A's homs for morphism evaluation.
  std::vector<std::vector<HomSpace>> homs(m, std::vector<HomSpace>(m));
  std::vector<std::vector<std::size_t>> a_offset(m, std::vector<std::size_t>(m, 0));
  {
    std::size_t off = 0;
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t u = 0; u < m; ++u) {
        homs[s][u] = hom_space(t[s], t[u]);
        a_offset[s][u] = off;
        off += homs[s][u].dim();
      }
  }

  // Identify a degree-1 basis index with (a, b, k).
  auto locate = [&](std::size_t idx) {
    const auto& e = basis[idx];
    return std::make_tuple(e.source, e.target, idx - dual_offset[e.target][e.source]);
  };

  BasicAlgebra lam(m, basis);
  for (std::size_t x = 0; x < a_dim; ++x)
    for (std::size_t y = 0; y < a_dim; ++y) {
      Vector full(basis.size());
      for (const auto& [c, v] : out.A.product(x, y)) full[c] = v;
      lam.set_product(x, y, full);
    }
  for (std::size_t i = a_dim; i < basis.size(); ++i) {
    auto [a, b, k] = locate(i);
    const HomSpace& hba = *dual[b][a];
    // u o xi for u: T_b -> T_c in A.
    for (std::size_t u = 0; u < a_dim; ++u) {
      const auto& ue = basis[u];
      if (ue.source != b) continue;
      const std::size_t c = ue.target;
      const HomSpace& hca = *dual[c][a];
      RepMorphism fu = homs[b][c].basis(u - a_offset[b][c]);
      Vector full(basis.size());
      for (std::size_t s = 0; s < hca.dim(); ++s) {
        Vector coords = hba.coords(compose(hca.basis(s), fu));
        full[dual_offset[c][a] + s] = coords[k];
      }
      lam.set_product(u, i, full);
    }
    // xi o v for v: T_z -> T_a in A.
    for (std::size_t v = 0; v < a_dim; ++v) {
      const auto& ve = basis[v];
      if (ve.target != a) continue;
      const std::size_t z = ve.source;
      Vector full(basis.size());
      if (tau2.image[z]) {
        RepMorphism fv = homs[z][a].basis(v - a_offset[z][a]);
        auto t2v = tau2.map(z, a, fv);
        if (!t2v) throw InvariantViolation("tau^2 lost a morphism between surviving summands");
        const HomSpace& hbz = *dual[b][z];
        for (std::size_t s = 0; s < hbz.dim(); ++s) {
          Vector coords = hba.coords(compose(*t2v, hbz.basis(s)));
          full[dual_offset[b][z] + s] = coords[k];
        }
      }
      lam.set_product(i, v, full);
    }
  }
  Vector unit(basis.size());
  const Vector& au = out.A.unit();
  for (std::size_t k = 0; k < au.size(); ++k) unit[k] = au[k];
  lam.set_unit(std::move(unit));
  out.Lambda = std::move(lam);
  return out;
}

/// End_C(T) computed directly with cluster composition, for object ids of T.
inline BasicAlgebra cluster_endomorphism_algebra(const ClusterCategory& c, const std::vector<std::size_t>& t) {
  const std::size_t m = t.size();
  std::vector<BasisElement> basis;
  std::vector<std::vector<std::size_t>> offset(m, std::vector<std::size_t>(m));
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t u = 0; u < m; ++u) {
      const auto& h = c.hom(t[s], t[u]);
      offset[s][u] = basis.size();
      for (std::size_t k = 0; k < h.deg0.dim(); ++k) basis.push_back({s, u, 0});
      for (std::size_t k = 0; k < h.deg1.dim(); ++k) basis.push_back({s, u, 1});
    }
  BasicAlgebra alg(m, basis);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto& x = basis[a];
      const auto& y = basis[b];
      if (y.target != x.source) continue;
      ClusterMorphism fy = c.basis(t[y.source], t[y.target], b - offset[y.source][y.target]);
      ClusterMorphism fx = c.basis(t[x.source], t[x.target], a - offset[x.source][x.target]);
      Vector prod = c.compose(t[y.source], t[y.target], t[x.target], fy, fx).flat();
      Vector full(basis.size());
      for (std::size_t k = 0; k < prod.size(); ++k) full[offset[y.source][x.target] + k] = prod[k];
      alg.set_product(a, b, full);
    }
  Vector unit(basis.size());
  for (std::size_t s = 0; s < m; ++s) {
    Vector id = c.identity(t[s]).flat();
    for (std::size_t k = 0; k < id.size(); ++k) unit[offset[s][s] + k] = id[k];
  }
  alg.set_unit(std::move(unit));
  return alg;
}

/// Right module over a BasicAlgebra: action[x] is the matrix of v -> v . x.
struct AlgebraModule {
  std::size_t dim = 0;
  std::vector<std::size_t> vertex_dims;  // dim M e_i
  std::vector<Matrix> action;
};

/// G(X) = Hom_C(T, X_1 + ... + X_r) as a right End_C(T)-module by
/// precomposition. The algebra must come from cluster_endomorphism_algebra(c, t).
inline AlgebraModule module_over_cta(const ClusterCategory& c, const std::vector<std::size_t>& t,
                                     const BasicAlgebra& lambda, const std::vector<std::size_t>& xs) {
  const std::size_t m = t.size();
  // Layout: for each summand X_j, for each T_i, Hom_C(T_i, X_j).
  std::vector<std::vector<std::size_t>> offset(xs.size(), std::vector<std::size_t>(m));
  AlgebraModule mod;
  mod.vertex_dims.assign(m, 0);
  for (std::size_t j = 0; j < xs.size(); ++j)
    for (std::size_t i = 0; i < m; ++i) {
      offset[j][i] = mod.dim;
      std::size_t d = c.hom(t[i], xs[j]).dim();
      mod.dim += d;
      mod.vertex_dims[i] += d;
    }
  std::vector<std::vector<std::size_t>> lam_offset(m, std::vector<std::size_t>(m, 0));
  {
    std::size_t off = 0;
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t u = 0; u < m; ++u) {
        lam_offset[s][u] = off;
        off += c.hom(t[s], t[u]).dim();
      }
    if (off != lambda.dim()) throw InputError("algebra does not match the tilting set");
  }
  for (std::size_t a = 0; a < lambda.dim(); ++a) {
    const auto& e = lambda.element(a);
    Matrix r(mod.dim, mod.dim);
    ClusterMorphism x = c.basis(t[e.source], t[e.target], a - lam_offset[e.source][e.target]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const std::size_t dt = c.hom(t[e.target], xs[j]).dim();
      for (std::size_t k = 0; k < dt; ++k) {
        ClusterMorphism phi = c.basis(t[e.target], xs[j], k);
        Vector img = c.compose(t[e.source], t[e.target], xs[j], x, phi).flat();
        for (std::size_t r0 = 0; r0 < img.size(); ++r0) r(offset[j][e.source] + r0, offset[j][e.target] + k) = img[r0];
      }
    }
    mod.action.push_back(std::move(r));
  }
  return mod;
}

/// Right-module axioms: R(xy) = R(y) R(x) and the unit acts as the identity.
inline bool is_module(const BasicAlgebra& alg, const AlgebraModule& m) {
  for (std::size_t a = 0; a < alg.dim(); ++a)
    for (std::size_t b = 0; b < alg.dim(); ++b) {
      Matrix lhs(m.dim, m.dim);
      for (const auto& [c, v] : alg.product(a, b)) lhs = lhs + v * m.action[c];
      if (!(lhs == m.action[b] * m.action[a])) return false;
    }
  Matrix u(m.dim, m.dim);
  for (std::size_t a = 0; a < alg.dim(); ++a)
    if (sgn(alg.unit()[a]) != 0) u = u + alg.unit()[a] * m.action[a];
  return u == Matrix::identity(m.dim);
}

/// dim Hom_Lambda(M, N): linear maps phi with phi R_M(x) = R_N(x) phi.
inline std::size_t hom_lambda_dim(const BasicAlgebra& alg, const AlgebraModule& mm, const AlgebraModule& nn) {
  const std::size_t p = nn.dim, q = mm.dim;
  if (p == 0 || q == 0) return 0;
  // Unknown phi(r, c) at index r * q + c.
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    const Matrix& rm = mm.action[a];
    const Matrix& rn = nn.action[a];
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t c = 0; c < q; ++c) {
        Vector eq(p * q);
        bool any = false;
        // (phi R_M)(r, c) = sum_k phi(r, k) R_M(k, c)
        for (std::size_t k = 0; k < q; ++k)
          if (sgn(rm(k, c)) != 0) {
            eq[r * q + k] += rm(k, c);
            any = true;
          }
        // (R_N phi)(r, c) = sum_k R_N(r, k) phi(k, c)
        for (std::size_t k = 0; k < p; ++k)
          if (sgn(rn(r, k)) != 0) {
            eq[k * q + c] -= rn(r, k);
            any = true;
          }
        if (any) rows.push_back(std::move(eq));
      }
  }
  return p * q - span_dim(rows, p * q);
}

/// dim Hom_C(X, Y) minus the dimension of the maps factoring through add tau T.
inline std::size_t hom_quotient_dim(const ClusterCategory& c, const std::vector<std::size_t>& t, std::size_t x, std::size_t y) {
  const auto& hxy = c.hom(x, y);
  std::vector<Vector> through;
  for (std::size_t ti : t) {
    const std::size_t w = c.tau(ti);
    const std::size_t d1 = c.hom(x, w).dim(), d2 = c.hom(w, y).dim();
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d2; ++j) {
        Vector v = c.compose(x, w, y, c.basis(x, w, i), c.basis(w, y, j)).flat();
        if (!is_zero(v)) through.push_back(std::move(v));
      }
  }
  return hxy.dim() - span_dim(through, hxy.dim());
}

/// Number of paths (including trivial ones) in an acyclic quiver.
inline std::size_t path_count(const ValuedQuiver& q) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < q.rank(); ++i) {
    RootVec p = projective_dimension(q, static_cast<int>(i));
    for (std::size_t j = 0; j < q.rank(); ++j) total += static_cast<std::size_t>(p[j]);
  }
  return total;
}

/// Gabriel quiver of a simply-laced quiver, for comparisons.
inline GabrielQuiver as_gabriel(const ValuedQuiver& q) {
  GabrielQuiver g;
  g.vertices = q.rank();
  for (const auto& a : q.arrows()) ++g.arrows[{static_cast<std::size_t>(a.source), static_cast<std::size_t>(a.target)}];
  return g;
}

/// True when the algebra is the path algebra of its (acyclic) Gabriel quiver:
/// no relations, so the dimension equals the number of paths.
inline bool is_hereditary_path_algebra(const BasicAlgebra& alg) {
  GabrielQuiver g = alg.gabriel_quiver();
  std::vector<Arrow> arrows;
  for (auto& [k, v] : g.arrows) {
    if (v != 1) return false;
    arrows.push_back({static_cast<int>(k.first), static_cast<int>(k.second)});
  }
  try {
    ValuedQuiver q = ValuedQuiver::simply_laced(g.vertices, arrows);
    return path_count(q) == alg.dim();
  } catch (const InputError&) {
    return false;
  }
}

}  // namespace clustercat
