#pragma once

// Representations of simply-laced quivers over Q: Hom and Ext^1 by linear
// algebra, BGP reflection functors and the Coxeter functors built from them.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clustercat/error.hpp"
#include "clustercat/linalg.hpp"
#include "clustercat/quiver.hpp"
#include "clustercat/roots.hpp"

namespace clustercat {

using QuiverPtr = std::shared_ptr<const ValuedQuiver>;

inline QuiverPtr make_quiver(ValuedQuiver q) { return std::make_shared<const ValuedQuiver>(std::move(q)); }

/// V = (V_i, maps): maps[a] is dims[target(a)] x dims[source(a)].
struct Representation {
  QuiverPtr quiver;
  RootVec dims;
  std::vector<Matrix> maps;

  std::size_t total_dim() const {
    std::size_t s = 0;
    for (int d : dims.coords) s += static_cast<std::size_t>(d);
    return s;
  }
  bool is_zero() const { return total_dim() == 0; }
};

/// Per-vertex blocks of a morphism; block i is dims_target[i] x dims_source[i].
struct RepMorphism {
  std::vector<Matrix> blocks;
};

/// An element of the cochain group  (+)_{a: i -> j} Hom(X_i, Y_j).
struct Cochain {
  std::vector<Matrix> blocks;
};

namespace detail {

inline void require_simply_laced(const ValuedQuiver& q) {
  if (!q.simply_laced()) throw InputError("explicit representations need a simply-laced quiver");
}

inline void require_same_quiver(const Representation& x, const Representation& y) {
  if (x.quiver != y.quiver && !(*x.quiver == *y.quiver)) throw InputError("representations live on different quivers");
}

inline Representation zero_rep(const QuiverPtr& q) {
  Representation r{q, RootVec::zero(q->rank()), {}};
  for (std::size_t a = 0; a < q->arrows().size(); ++a) r.maps.emplace_back(0, 0);
  return r;
}

// Thin module supported on `support`, with identity 1x1 maps along arrows
// between supported vertices.
inline Representation thin(const QuiverPtr& q, const std::vector<bool>& support) {
  Representation r{q, RootVec::zero(q->rank()), {}};
  for (std::size_t i = 0; i < q->rank(); ++i) r.dims[i] = support[i] ? 1 : 0;
  for (const auto& a : q->arrows()) {
    Matrix m(r.dims[a.target], r.dims[a.source]);
    if (support[a.source] && support[a.target]) m(0, 0) = 1;
    r.maps.push_back(std::move(m));
  }
  return r;
}

inline std::vector<bool> reachable(const ValuedQuiver& q, int i, bool forward) {
  std::vector<bool> seen(q.rank(), false);
  seen[i] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& a : q.arrows()) {
      int from = forward ? a.source : a.target;
      int to = forward ? a.target : a.source;
      if (seen[from] && !seen[to]) seen[to] = grew = true;
    }
  }
  return seen;
}

// Offsets of per-vertex (or per-arrow) blocks in a flattened vector.
struct Layout {
  std::vector<std::size_t> offset;
  std::vector<std::size_t> rows, cols;
  std::size_t total = 0;

  void add(std::size_t r, std::size_t c) {
    offset.push_back(total);
    rows.push_back(r);
    cols.push_back(c);
    total += r * c;
  }
  std::size_t at(std::size_t block, std::size_t r, std::size_t c) const { return offset[block] + r * cols[block] + c; }

  Vector flatten(const std::vector<Matrix>& blocks) const {
    Vector v(total);
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::size_t r = 0; r < rows[b]; ++r)
        for (std::size_t c = 0; c < cols[b]; ++c) v[at(b, r, c)] = blocks[b](r, c);
    return v;
  }
  std::vector<Matrix> unflatten(const Vector& v) const {
    std::vector<Matrix> blocks;
    for (std::size_t b = 0; b < offset.size(); ++b) {
      Matrix m(rows[b], cols[b]);
      for (std::size_t r = 0; r < rows[b]; ++r)
        for (std::size_t c = 0; c < cols[b]; ++c) m(r, c) = v[at(b, r, c)];
      blocks.push_back(std::move(m));
    }
    return blocks;
  }
};

}  // namespace detail

inline Representation build_projective(const QuiverPtr& q, int i) {
  detail::require_simply_laced(*q);
  q->check_vertex(i);
  return detail::thin(q, detail::reachable(*q, i, true));
}

inline Representation build_injective(const QuiverPtr& q, int i) {
  detail::require_simply_laced(*q);
  q->check_vertex(i);
  return detail::thin(q, detail::reachable(*q, i, false));
}

inline Representation build_simple(const QuiverPtr& q, int i) {
  detail::require_simply_laced(*q);
  q->check_vertex(i);
  std::vector<bool> support(q->rank(), false);
  support[i] = true;
  return detail::thin(q, support);
}

inline bool intertwines(const Representation& x, const Representation& y, const RepMorphism& f) {
  const auto& arrows = x.quiver->arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const auto& ar = arrows[a];
    if (!(f.blocks[ar.target] * x.maps[a] == y.maps[a] * f.blocks[ar.source])) return false;
  }
  return true;
}

inline RepMorphism identity_morphism(const Representation& x) {
  RepMorphism id;
  for (int d : x.dims.coords) id.blocks.push_back(Matrix::identity(static_cast<std::size_t>(d)));
  return id;
}

inline RepMorphism zero_morphism(const Representation& x, const Representation& y) {
  RepMorphism z;
  for (std::size_t i = 0; i < x.dims.size(); ++i) z.blocks.emplace_back(y.dims[i], x.dims[i]);
  return z;
}

/// g o f for f: X -> Y, g: Y -> Z.
inline RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  RepMorphism h;
  for (std::size_t i = 0; i < f.blocks.size(); ++i) h.blocks.push_back(g.blocks[i] * f.blocks[i]);
  return h;
}

/// c o f for f: L -> X and a cochain c from X to Y.
inline Cochain precompose(const Cochain& c, const RepMorphism& f, const ValuedQuiver& q) {
  Cochain out;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) out.blocks.push_back(c.blocks[a] * f.blocks[q.arrows()[a].source]);
  return out;
}

/// h o c for a cochain c from X to Y and h: Y -> Z.
inline Cochain postcompose(const RepMorphism& h, const Cochain& c, const ValuedQuiver& q) {
  Cochain out;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) out.blocks.push_back(h.blocks[q.arrows()[a].target] * c.blocks[a]);
  return out;
}

/// Hom(X, Y) as the kernel of the difference map d.
struct HomSpace {
  detail::Layout layout;  // one block per vertex: Y_i x X_i
  Kernel kernel;

  std::size_t dim() const { return kernel.dim(); }
  RepMorphism basis(std::size_t t) const { return {layout.unflatten(kernel.basis.column(t))}; }
  Vector coords(const RepMorphism& f) const { return kernel.coords(layout.flatten(f.blocks)); }
  RepMorphism element(const Vector& coords) const {
    Vector v(layout.total);
    for (std::size_t t = 0; t < coords.size(); ++t) {
      if (sgn(coords[t]) == 0) continue;
      for (std::size_t r = 0; r < layout.total; ++r) v[r] += coords[t] * kernel.basis(r, t);
    }
    return {layout.unflatten(v)};
  }
};

/// Ext^1(X, Y) as the cokernel of d; the quotient basis is e_c for the
/// non-pivot positions c of the reduced image.
struct ExtSpace {
  detail::Layout layout;  // one block per arrow a: i -> j, Y_j x X_i
  Subspace image;

  std::size_t dim() const { return image.codim(); }
  Cochain basis(std::size_t t) const {
    Vector v(layout.total);
    v[image.nonpivots()[t]] = 1;
    return {layout.unflatten(v)};
  }
  Vector coords(const Cochain& c) const { return image.quotient_coords(layout.flatten(c.blocks)); }
  Cochain element(const Vector& coords) const {
    Vector v(layout.total);
    for (std::size_t t = 0; t < coords.size(); ++t) v[image.nonpivots()[t]] = coords[t];
    return {layout.unflatten(v)};
  }
};

struct HomExt {
  HomSpace hom;
  ExtSpace ext;
};

namespace detail {

// Matrix of d: (+)_i Hom(X_i, Y_i) -> (+)_{a:i->j} Hom(X_i, Y_j),
// d(phi)_a = phi_j x_a - y_a phi_i.
inline Matrix difference_map(const Representation& x, const Representation& y, Layout& vertices, Layout& arrows) {
  const auto& q = *x.quiver;
  for (std::size_t i = 0; i < q.rank(); ++i) vertices.add(y.dims[i], x.dims[i]);
  for (const auto& a : q.arrows()) arrows.add(y.dims[a.target], x.dims[a.source]);
  Matrix d(arrows.total, vertices.total);
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrows()[ai];
    const std::size_t yi = y.dims[a.target], xs = x.dims[a.source], xt = x.dims[a.target], ys = y.dims[a.source];
    // (phi_j x_a)_{r,c} = sum_k phi_j[r][k] x_a[k][c]
    for (std::size_t r = 0; r < yi; ++r)
      for (std::size_t c = 0; c < xs; ++c)
        for (std::size_t k = 0; k < xt; ++k)
          d(arrows.at(ai, r, c), vertices.at(a.target, r, k)) += x.maps[ai](k, c);
    // -(y_a phi_i)_{r,c} = -sum_k y_a[r][k] phi_i[k][c]
    for (std::size_t r = 0; r < yi; ++r)
      for (std::size_t c = 0; c < xs; ++c)
        for (std::size_t k = 0; k < ys; ++k)
          d(arrows.at(ai, r, c), vertices.at(a.source, k, c)) -= y.maps[ai](r, k);
  }
  return d;
}

}  // namespace detail

inline HomSpace hom_space(const Representation& x, const Representation& y) {
  detail::require_same_quiver(x, y);
  HomSpace h;
  detail::Layout arrows;
  Matrix d = detail::difference_map(x, y, h.layout, arrows);
  h.kernel = kernel(d);
  return h;
}

inline ExtSpace ext_space(const Representation& x, const Representation& y) {
  detail::require_same_quiver(x, y);
  ExtSpace e;
  detail::Layout vertices;
  Matrix d = detail::difference_map(x, y, vertices, e.layout);
  e.image = Subspace::column_space(d);
  return e;
}

inline HomExt hom_ext(const Representation& x, const Representation& y) { return {hom_space(x, y), ext_space(x, y)}; }

enum class ReflectionSign { plus, minus };

/// S_k^+ (k a sink) or S_k^- (k a source) applied to a representation, with
/// the data needed to transport morphisms.
struct Reflected {
  Representation rep;   // over s_k Q
  int vertex = -1;
  ReflectionSign sign = ReflectionSign::plus;
  RootVec input_dims;
  Kernel kernel;        // plus: W_k = ker of (+)_j V_j -> V_k
  Subspace image;       // minus: W_k = coker of V_k -> (+)_j V_j
};

namespace detail {

// Arrows incident to k, in arrow-index order, with the neighbouring vertex.
inline std::vector<std::pair<std::size_t, int>> incident(const ValuedQuiver& q, int k) {
  std::vector<std::pair<std::size_t, int>> out;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const auto& ar = q.arrows()[a];
    if (ar.source == k) out.emplace_back(a, ar.target);
    if (ar.target == k) out.emplace_back(a, ar.source);
  }
  return out;
}

}  // namespace detail

/// The reflected quiver is shared between calls through `target_quiver` when
/// given, so that repeated reflections agree on quiver identity.
inline Reflected reflect_with_data(const Representation& v, int k, ReflectionSign sign, QuiverPtr target_quiver = nullptr) {
  const ValuedQuiver& q = *v.quiver;
  detail::require_simply_laced(q);
  q.check_vertex(k);
  if (sign == ReflectionSign::plus && !q.is_sink(k)) throw InputError("S^+ needs a sink");
  if (sign == ReflectionSign::minus && !q.is_source(k)) throw InputError("S^- needs a source");
  if (!target_quiver) target_quiver = make_quiver(q.reflect_orientation(k));

  Reflected out;
  out.vertex = k;
  out.sign = sign;
  out.input_dims = v.dims;
  const auto inc = detail::incident(q, k);
  std::size_t total = 0;
  for (auto [a, j] : inc) total += static_cast<std::size_t>(v.dims[j]);
  const std::size_t vk = static_cast<std::size_t>(v.dims[k]);

  out.rep.quiver = target_quiver;
  out.rep.dims = v.dims;
  out.rep.maps = v.maps;
  if (sign == ReflectionSign::plus) {
    // (+)_j V_j -> V_k, block columns in incidence order.
    Matrix assembled(vk, total);
    std::size_t off = 0;
    for (auto [a, j] : inc) {
      for (std::size_t r = 0; r < vk; ++r)
        for (int c = 0; c < v.dims[j]; ++c) assembled(r, off + c) = v.maps[a](r, c);
      off += v.dims[j];
    }
    out.kernel = kernel(assembled);
    if (total == 0) out.kernel = Kernel{Matrix(0, 0), {}};
    const std::size_t w = out.kernel.dim();
    out.rep.dims[k] = static_cast<int>(w);
    off = 0;
    for (auto [a, j] : inc) {
      out.rep.maps[a] = out.kernel.basis.row_block(off, v.dims[j]);
      if (w == 0) out.rep.maps[a] = Matrix(v.dims[j], 0);
      off += v.dims[j];
    }
  } else {
    // V_k -> (+)_j V_j, block rows in incidence order.
    Matrix assembled(total, vk);
    std::size_t off = 0;
    for (auto [a, j] : inc) {
      for (int r = 0; r < v.dims[j]; ++r)
        for (std::size_t c = 0; c < vk; ++c) assembled(off + r, c) = v.maps[a](r, c);
      off += v.dims[j];
    }
    out.image = Subspace::column_space(assembled);
    if (vk == 0) out.image = Subspace(total, Matrix(0, total));
    Matrix proj = out.image.projection();
    const std::size_t w = out.image.codim();
    out.rep.dims[k] = static_cast<int>(w);
    off = 0;
    for (auto [a, j] : inc) {
      out.rep.maps[a] = proj.col_block(off, v.dims[j]);
      if (w == 0) out.rep.maps[a] = Matrix(0, v.dims[j]);
      off += v.dims[j];
    }
  }
  return out;
}

inline Representation reflect(int k, ReflectionSign sign, const Representation& v) { return reflect_with_data(v, k, sign).rep; }

/// The morphism S_k^{+-}(alpha) for alpha: V -> V', given the reflections of V
/// and V' at the same vertex.
inline RepMorphism reflect_morphism(const Reflected& from, const Reflected& to, const RepMorphism& alpha) {
  if (from.vertex != to.vertex || from.sign != to.sign) throw InputError("reflections do not match");
  const ValuedQuiver& q = *from.rep.quiver;  // incidence is orientation independent
  const int k = from.vertex;
  const auto inc = detail::incident(q, k);
  std::size_t src_total = 0, tgt_total = 0;
  for (auto [a, j] : inc) {
    src_total += from.input_dims[j];
    tgt_total += to.input_dims[j];
  }
  // (+)_j alpha_j, block diagonal.
  Matrix diag(tgt_total, src_total);
  std::size_t ro = 0, co = 0;
  for (auto [a, j] : inc) {
    const Matrix& b = alpha.blocks[j];
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) diag(ro + r, co + c) = b(r, c);
    ro += b.rows();
    co += b.cols();
  }
  RepMorphism beta = alpha;
  const std::size_t w_src = from.rep.dims[k], w_tgt = to.rep.dims[k];
  Matrix bk(w_tgt, w_src);
  if (w_src > 0 && w_tgt > 0) {
    if (from.sign == ReflectionSign::plus) {
      Matrix image = diag * from.kernel.basis;  // lands in ker of the target map
      for (std::size_t c = 0; c < w_src; ++c) {
        Vector coords = to.kernel.coords(image.column(c));
        for (std::size_t r = 0; r < w_tgt; ++r) bk(r, c) = coords[r];
      }
    } else {
      bk = to.image.projection() * diag * from.image.section();
    }
  }
  beta.blocks[k] = std::move(bk);
  return beta;
}

/// Composite of reflection functors along an admissible sequence; the result
/// lives on the original quiver. `result` is empty when the image is zero.
struct CoxeterChain {
  std::vector<Reflected> steps;
  std::optional<Representation> result;
};

namespace detail {

struct ChainQuivers {
  std::vector<int> sequence;
  std::vector<QuiverPtr> quivers;  // quiver after each step; last equals the input quiver
};

inline ChainQuivers chain_quivers(const QuiverPtr& q, ReflectionSign sign) {
  ChainQuivers c;
  c.sequence = q->admissible_sequence(sign == ReflectionSign::plus);
  ValuedQuiver cur = *q;
  for (std::size_t s = 0; s < c.sequence.size(); ++s) {
    cur = cur.reflect_orientation(c.sequence[s]);
    c.quivers.push_back(s + 1 == c.sequence.size() ? q : make_quiver(cur));
  }
  if (!(cur == *q)) throw InvariantViolation("admissible sequence did not return to the quiver");
  return c;
}

}  // namespace detail

/// C^+ = S^+_{k_n} ... S^+_{k_1} (direction +1, realizing tau) or
/// C^- = S^-_{k_n} ... S^-_{k_1} (direction -1, realizing tau^-1).
inline CoxeterChain coxeter_chain(const Representation& v, int direction) {
  const ReflectionSign sign = direction > 0 ? ReflectionSign::plus : ReflectionSign::minus;
  auto cq = detail::chain_quivers(v.quiver, sign);
  CoxeterChain chain;
  Representation cur = v;
  for (std::size_t s = 0; s < cq.sequence.size(); ++s) {
    chain.steps.push_back(reflect_with_data(cur, cq.sequence[s], sign, cq.quivers[s]));
    cur = chain.steps.back().rep;
  }
  if (!cur.is_zero()) chain.result = std::move(cur);
  return chain;
}

/// tau (direction +1) or tau^-1 (direction -1) of a representation; empty for
/// the zero object (tau of a projective, tau^-1 of an injective).
inline std::optional<Representation> coxeter_translate(const Representation& v, int direction) {
  return coxeter_chain(v, direction).result;
}

/// The Coxeter functor on a morphism, given the chains of its endpoints.
/// Empty when either endpoint is annihilated.
inline std::optional<RepMorphism> coxeter_translate(const CoxeterChain& from, const CoxeterChain& to, const RepMorphism& f) {
  if (!from.result || !to.result) return std::nullopt;
  RepMorphism cur = f;
  for (std::size_t s = 0; s < from.steps.size(); ++s) cur = reflect_morphism(from.steps[s], to.steps[s], cur);
  return cur;
}

/// Indecomposable representations of a simply-laced Dynkin quiver, one per
/// positive root, obtained as tau^-m P_i.
class Catalog {
 public:
  struct Entry {
    RootVec key;
    Representation rep;
    std::optional<int> projective_vertex;
    std::optional<int> injective_vertex;
    std::optional<std::size_t> tau;          // index of tau X
    std::optional<std::size_t> tau_inverse;  // index of tau^-1 X
  };

  explicit Catalog(QuiverPtr q) : quiver_(std::move(q)) {
    if (!quiver_->is_dynkin()) throw InputError("indecomposable catalog requires a Dynkin quiver");
    detail::require_simply_laced(*quiver_);
    const std::size_t n = quiver_->rank();
    projective_.assign(n, 0);
    injective_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      Representation cur = build_projective(quiver_, static_cast<int>(i));
      std::size_t idx = add(cur);
      entries_[idx].projective_vertex = static_cast<int>(i);
      projective_[i] = idx;
      for (;;) {
        CoxeterChain chain = coxeter_chain(entries_[idx].rep, -1);
        if (!chain.result) {
          chains_.emplace(idx, std::move(chain));
          break;
        }
        std::size_t next = add(*chain.result);
        entries_[next].tau = idx;
        entries_[idx].tau_inverse = next;
        chains_.emplace(idx, std::move(chain));
        idx = next;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      RootVec key = build_injective(quiver_, static_cast<int>(i)).dims;
      auto it = index_.find(key);
      if (it == index_.end() || entries_[it->second].tau_inverse)
        throw InvariantViolation("injective " + key.str() + " not found at the end of a tau-orbit");
      entries_[it->second].injective_vertex = static_cast<int>(i);
      injective_[i] = it->second;
    }
    auto roots = enumerate_positive_roots(quiver_->cartan());
    if (roots.size() != entries_.size()) throw InvariantViolation("catalog size differs from the number of positive roots");
    for (const auto& r : roots)
      if (!index_.count(r)) throw InvariantViolation("positive root " + r.str() + " has no indecomposable");
  }

  const QuiverPtr& quiver() const { return quiver_; }
  std::size_t size() const { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<Entry>& entries() const { return entries_; }

  std::optional<std::size_t> find(const RootVec& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t at(const RootVec& key) const {
    auto f = find(key);
    if (!f) throw InputError("no indecomposable with dimension vector " + key.str());
    return *f;
  }
  std::size_t projective(int i) const { return projective_.at(i); }
  std::size_t injective(int i) const { return injective_.at(i); }

  /// C^- chain of entry i (empty result for injectives).
  const CoxeterChain& tau_inverse_chain(std::size_t i) const { return chains_.at(i); }

 private:
  std::size_t add(Representation r) {
    RootVec key = r.dims;
    if (index_.count(key)) throw InvariantViolation("two indecomposables share dimension vector " + key.str());
    index_.emplace(key, entries_.size());
    entries_.push_back(Entry{key, std::move(r), std::nullopt, std::nullopt, std::nullopt, std::nullopt});
    return entries_.size() - 1;
  }

  QuiverPtr quiver_;
  std::vector<Entry> entries_;
  std::map<RootVec, std::size_t> index_;
  std::vector<std::size_t> projective_, injective_;
  std::map<std::size_t, CoxeterChain> chains_;
};

/// Map from positive roots to the catalog's representations.
inline std::map<RootVec, Representation> catalog_indecomposables(const QuiverPtr& q) {
  Catalog c(q);
  std::map<RootVec, Representation> out;
  for (const auto& e : c.entries()) out.emplace(e.key, e.rep);
  return out;
}

}  // namespace clustercat
