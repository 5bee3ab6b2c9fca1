#pragma once

// The cluster category D^b(H)/F, F = tau^-1 [1], on the fundamental domain
// ind H u {P_i[1]}, and the root category D^b(H)/[2].

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clustercat/derived.hpp"
#include "clustercat/rep.hpp"

namespace clustercat {

/// An indecomposable of the fundamental domain: a module, or P_vertex[1].
struct ClusterObject {
  bool shifted = false;
  int vertex = -1;     // for shifted projectives
  RootVec dims;        // module dimension vector (dim P_vertex when shifted)
  Representation rep;  // the module, or P_vertex when shifted
  std::optional<std::size_t> catalog_index;

  DerivedObject derived() const { return {dims, shifted ? 1 : 0}; }
  std::string label() const { return shifted ? "P" + std::to_string(vertex + 1) + "[1]" : dims.str(); }
};

enum class PieceKind { zero, hom, ext };

/// One graded piece of a cluster Hom space, realized either as module maps or
/// as Ext^1 classes.
struct HomPiece {
  PieceKind kind = PieceKind::zero;
  HomSpace hom;
  ExtSpace ext;

  std::size_t dim() const {
    switch (kind) {
      case PieceKind::hom: return hom.dim();
      case PieceKind::ext: return ext.dim();
      default: return 0;
    }
  }
  RepMorphism map(const Vector& c) const { return hom.element(c); }
  Cochain cochain(const Vector& c) const { return ext.element(c); }
  Vector coords(const RepMorphism& f) const { return hom.coords(f); }
  Vector coords(const Cochain& c) const { return ext.coords(c); }
};

/// Hom_C(X, Y) = Hom_D(X, Y) + Hom_D(X, FY).
struct ClusterHomSpace {
  std::size_t source = 0, target = 0;
  HomPiece deg0, deg1;
  std::size_t dim() const { return deg0.dim() + deg1.dim(); }
};

/// Element of a cluster Hom space in the bases of its two pieces.
struct ClusterMorphism {
  Vector deg0, deg1;

  bool is_zero() const { return clustercat::is_zero(deg0) && clustercat::is_zero(deg1); }
  friend bool operator==(const ClusterMorphism&, const ClusterMorphism&) = default;
  ClusterMorphism& operator+=(const ClusterMorphism& o) {
    for (std::size_t i = 0; i < deg0.size(); ++i) deg0[i] += o.deg0[i];
    for (std::size_t i = 0; i < deg1.size(); ++i) deg1[i] += o.deg1[i];
    return *this;
  }
  ClusterMorphism scaled(const Rational& s) const {
    ClusterMorphism r = *this;
    for (auto& x : r.deg0) x *= s;
    for (auto& x : r.deg1) x *= s;
    return r;
  }
  Vector flat() const {
    Vector v = deg0;
    v.insert(v.end(), deg1.begin(), deg1.end());
    return v;
  }
};

class ClusterCategory {
 public:
  /// All of ind H u {P_i[1]} for a simply-laced Dynkin quiver.
  explicit ClusterCategory(QuiverPtr q) : ClusterCategory(std::make_shared<const Catalog>(std::move(q))) {}

  explicit ClusterCategory(std::shared_ptr<const Catalog> catalog)
      : quiver_(catalog->quiver()), derived_(std::make_shared<DerivedModel>(catalog)) {
    for (std::size_t i = 0; i < catalog->size(); ++i) {
      const auto& e = (*catalog)[i];
      objects_.push_back(ClusterObject{false, -1, e.key, e.rep, i});
    }
    add_shifted_projectives();
  }

  /// A category on explicitly given indecomposable modules over any acyclic
  /// simply-laced quiver (plus all P_i[1]). No orbit-window or tau support.
  static ClusterCategory from_modules(QuiverPtr q, const std::vector<Representation>& modules) {
    detail::require_simply_laced(*q);
    ClusterCategory c;
    c.quiver_ = std::move(q);
    for (const auto& m : modules) {
      detail::require_same_quiver(m, Representation{c.quiver_, {}, {}});
      if (m.is_zero()) throw InputError("zero module");
      c.objects_.push_back(ClusterObject{false, -1, m.dims, m, std::nullopt});
    }
    c.add_shifted_projectives();
    return c;
  }

  const QuiverPtr& quiver() const { return quiver_; }
  std::size_t rank() const { return quiver_->rank(); }
  std::size_t size() const { return objects_.size(); }
  const ClusterObject& object(std::size_t x) const { return objects_.at(x); }
  const std::vector<ClusterObject>& objects() const { return objects_; }

  bool has_derived_model() const { return derived_ != nullptr; }
  const DerivedModel& derived() const {
    if (!derived_) throw InputError("operation needs a Dynkin catalog");
    return *derived_;
  }

  std::optional<std::size_t> find_module(const RootVec& dims) const {
    for (std::size_t x = 0; x < objects_.size(); ++x)
      if (!objects_[x].shifted && objects_[x].dims == dims) return x;
    return std::nullopt;
  }
  std::size_t module(const RootVec& dims) const {
    auto f = find_module(dims);
    if (!f) throw InputError("no module with dimension vector " + dims.str());
    return *f;
  }
  std::size_t shifted_projective(int i) const {
    quiver_->check_vertex(i);
    return shifted_begin_ + static_cast<std::size_t>(i);
  }
  std::size_t projective_module(int i) const { return module(build_projective(quiver_, i).dims); }
  std::size_t injective_module(int i) const { return module(build_injective(quiver_, i).dims); }
  std::size_t simple_module(int i) const { return module(RootVec::simple(rank(), i)); }

  /// Normal form of a derived object in the fundamental domain.
  std::size_t normalize(DerivedObject x) const {
    const DerivedModel& d = derived();
    for (int guard = 0; guard < 1000; ++guard) {
      const auto& e = d.catalog()[d.index(x)];
      if (x.shift == 0) return module(x.key);
      if (x.shift == 1 && e.projective_vertex) return shifted_projective(*e.projective_vertex);
      x = x.shift >= 1 ? d.apply(x, Auto::F_inverse) : d.apply(x, Auto::F);
    }
    throw InvariantViolation("normalization did not terminate");
  }

  /// Cluster Hom space, computed once per pair.
  const ClusterHomSpace& hom(std::size_t x, std::size_t y) const {
    {
      std::lock_guard<std::mutex> lock(memo_->mutex);
      auto it = memo_->homs.find({x, y});
      if (it != memo_->homs.end()) return *it->second;
    }
    auto h = std::make_shared<ClusterHomSpace>(build_hom(x, y));
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto [it, inserted] = memo_->homs.emplace(std::make_pair(x, y), std::move(h));
    return *it->second;
  }

  /// (dim Hom_D(X, Y), dim Hom_D(X, FY)) from the orbit sum over F^i, i in
  /// [-3, 3]; a nonzero term outside i in {0, 1} is an invariant violation.
  std::pair<std::size_t, std::size_t> hom_window(std::size_t x, std::size_t y) const {
    const DerivedModel& d = derived();
    DerivedObject X = objects_.at(x).derived(), Y = objects_.at(y).derived();
    std::size_t deg0 = 0, deg1 = 0;
    for (int i = -3; i <= 3; ++i) {
      std::size_t dim = d.hom(X, d.F_power(Y, i)).dim;
      if (i == 0) deg0 = dim;
      else if (i == 1) deg1 = dim;
      else if (dim != 0)
        throw InvariantViolation("orbit Hom has a nonzero term at F^" + std::to_string(i) + " for " +
                                 objects_[x].label() + ", " + objects_[y].label());
    }
    return {deg0, deg1};
  }

  /// dim Hom_D(X, Y[1]) on fundamental-domain representatives.
  std::size_t ext_derived(std::size_t x, std::size_t y) const {
    {
      std::lock_guard<std::mutex> lock(memo_->mutex);
      auto it = memo_->exts.find({x, y});
      if (it != memo_->exts.end()) return it->second;
    }
    const auto& X = objects_.at(x);
    const auto& Y = objects_.at(y);
    std::size_t d = 0;
    if (!X.shifted && !Y.shifted) d = ext_space(X.rep, Y.rep).dim();
    else if (X.shifted && !Y.shifted) d = hom_space(X.rep, Y.rep).dim();
    std::lock_guard<std::mutex> lock(memo_->mutex);
    memo_->exts.emplace(std::make_pair(x, y), d);
    return d;
  }

  /// dim Ext^1_C(X, Y) = dim Ext^1_D(X, Y) + dim Ext^1_D(Y, X).
  std::size_t ext1(std::size_t x, std::size_t y) const { return ext_derived(x, y) + ext_derived(y, x); }

  /// Ext^1_C(X, Y) = Hom_C(X, Y[1]) as an orbit sum over a window.
  std::size_t ext1_window(std::size_t x, std::size_t y) const {
    const DerivedModel& d = derived();
    DerivedObject X = objects_.at(x).derived(), Y = objects_.at(y).derived();
    ++Y.shift;
    std::size_t total = 0;
    for (int i = -3; i <= 3; ++i) total += d.hom(X, d.F_power(Y, i)).dim;
    return total;
  }

  /// tau in C: tau M for non-projective M, P_j -> P_j[1], P_j[1] -> I_j.
  std::size_t tau(std::size_t x) const {
    const DerivedModel& d = derived();
    const auto& X = objects_.at(x);
    if (X.shifted) return module(d.catalog()[d.catalog().injective(X.vertex)].key);
    const auto& e = d.catalog()[*X.catalog_index];
    if (e.projective_vertex) return shifted_projective(*e.projective_vertex);
    return module(d.catalog()[*e.tau].key);
  }

  std::size_t tau_inverse(std::size_t x) const {
    for (std::size_t y = 0; y < size(); ++y)
      if (tau(y) == x) return y;
    throw InvariantViolation("tau is not a bijection on the fundamental domain");
  }

  ClusterMorphism zero(std::size_t x, std::size_t y) const {
    const auto& h = hom(x, y);
    return {Vector(h.deg0.dim()), Vector(h.deg1.dim())};
  }

  ClusterMorphism basis(std::size_t x, std::size_t y, std::size_t t) const {
    ClusterMorphism m = zero(x, y);
    if (t < m.deg0.size()) m.deg0[t] = 1;
    else m.deg1.at(t - m.deg0.size()) = 1;
    return m;
  }

  ClusterMorphism identity(std::size_t x) const {
    const auto& h = hom(x, x);
    ClusterMorphism m = zero(x, x);
    m.deg0 = h.deg0.coords(identity_morphism(objects_[x].rep));
    return m;
  }

  /// g o f for f: X -> Y and g: Y -> Z:
  /// (g o f)_0 = g_0 f_0 and (g o f)_1 = g_1 f_0 + F(g_0) f_1.
  ClusterMorphism compose(std::size_t x, std::size_t y, std::size_t z, const ClusterMorphism& f,
                          const ClusterMorphism& g) const {
    const auto& hxy = hom(x, y);
    const auto& hyz = hom(y, z);
    const auto& hxz = hom(x, z);
    if (f.deg0.size() != hxy.deg0.dim() || f.deg1.size() != hxy.deg1.dim() || g.deg0.size() != hyz.deg0.dim() ||
        g.deg1.size() != hyz.deg1.dim())
      throw InputError("morphism does not match the given endpoints");
    const ValuedQuiver& q = *quiver_;
    const bool sx = objects_[x].shifted, sy = objects_[y].shifted, sz = objects_[z].shifted;
    ClusterMorphism out = zero(x, z);

    if (!is_zero(f.deg0) && !is_zero(g.deg0)) {
      if (!sx && !sy && !sz) {
        out.deg0 = hxz.deg0.coords(clustercat::compose(hyz.deg0.map(g.deg0), hxy.deg0.map(f.deg0)));
      } else if (!sx && !sy && sz) {
        out.deg0 = hxz.deg0.coords(precompose(hyz.deg0.cochain(g.deg0), hxy.deg0.map(f.deg0), q));
      } else if (!sx && sy && sz) {
        out.deg0 = hxz.deg0.coords(postcompose(hyz.deg0.map(g.deg0), hxy.deg0.cochain(f.deg0), q));
      } else if (sx && sy && sz) {
        out.deg0 = hxz.deg0.coords(clustercat::compose(hyz.deg0.map(g.deg0), hxy.deg0.map(f.deg0)));
      }
    }

    if (hxz.deg1.dim() == 0) return out;
    Vector deg1(hxz.deg1.dim());
    auto add = [&](const Vector& v) {
      for (std::size_t i = 0; i < deg1.size(); ++i) deg1[i] += v[i];
    };
    // g_1 o f_0
    if (!is_zero(f.deg0) && !is_zero(g.deg1)) {
      if (!sx && !sy && !sz) {
        add(hxz.deg1.coords(precompose(hyz.deg1.cochain(g.deg1), hxy.deg0.map(f.deg0), q)));
      } else if (!sx && sy && !sz) {
        add(hxz.deg1.coords(postcompose(hyz.deg1.map(g.deg1), hxy.deg0.cochain(f.deg0), q)));
      } else if (sx && sy && !sz) {
        add(hxz.deg1.coords(clustercat::compose(hyz.deg1.map(g.deg1), hxy.deg0.map(f.deg0))));
      }
    }
    // F(g_0) o f_1; only Y, Z non-injective modules contribute.
    if (!is_zero(f.deg1) && !is_zero(g.deg0) && !sy && !sz) {
      auto fg = coxeter_translate(chain(y), chain(z), hyz.deg0.map(g.deg0));
      if (!fg) throw InvariantViolation("F(g) vanished on non-injective modules");
      if (!sx) add(hxz.deg1.coords(postcompose(*fg, hxy.deg1.cochain(f.deg1), q)));
      else add(hxz.deg1.coords(clustercat::compose(*fg, hxy.deg1.map(f.deg1))));
    }
    out.deg1 = std::move(deg1);
    return out;
  }

  /// tau^-1 chain of a module object (empty result for injectives).
  const CoxeterChain& chain(std::size_t x) const {
    const auto& X = objects_.at(x);
    if (X.shifted) throw InvariantViolation("chain requested for a shifted projective");
    if (X.catalog_index) return derived_->catalog().tau_inverse_chain(*X.catalog_index);
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->chains.find(x);
    if (it == memo_->chains.end()) it = memo_->chains.emplace(x, std::make_shared<CoxeterChain>(coxeter_chain(X.rep, -1))).first;
    return *it->second;
  }

 private:
  ClusterCategory() = default;

  void add_shifted_projectives() {
    shifted_begin_ = objects_.size();
    for (std::size_t i = 0; i < rank(); ++i) {
      Representation p = build_projective(quiver_, static_cast<int>(i));
      RootVec dims = p.dims;
      objects_.push_back(ClusterObject{true, static_cast<int>(i), dims, std::move(p), std::nullopt});
    }
  }

  ClusterHomSpace build_hom(std::size_t x, std::size_t y) const {
    const auto& X = objects_.at(x);
    const auto& Y = objects_.at(y);
    ClusterHomSpace h;
    h.source = x;
    h.target = y;
    auto set_hom = [](HomPiece& p, const Representation& a, const Representation& b) {
      p.kind = PieceKind::hom;
      p.hom = hom_space(a, b);
    };
    auto set_ext = [](HomPiece& p, const Representation& a, const Representation& b) {
      p.kind = PieceKind::ext;
      p.ext = ext_space(a, b);
    };
    if (!X.shifted && !Y.shifted) {
      set_hom(h.deg0, X.rep, Y.rep);
      const auto& c = chain(y);
      if (c.result) set_ext(h.deg1, X.rep, *c.result);
    } else if (!X.shifted && Y.shifted) {
      set_ext(h.deg0, X.rep, Y.rep);
    } else if (X.shifted && !Y.shifted) {
      const auto& c = chain(y);
      if (c.result) set_hom(h.deg1, X.rep, *c.result);
    } else {
      set_hom(h.deg0, X.rep, Y.rep);
    }
    if (derived_) {
      auto [d0, d1] = hom_window(x, y);
      if (d0 != h.deg0.dim() || d1 != h.deg1.dim())
        throw InvariantViolation("orbit-window Hom disagrees with the fundamental-domain computation for " + X.label() +
                                 ", " + Y.label());
    }
    return h;
  }

  struct Memo {
    std::mutex mutex;
    std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const ClusterHomSpace>> homs;
    std::map<std::size_t, std::shared_ptr<const CoxeterChain>> chains;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> exts;
  };

  QuiverPtr quiver_;
  std::shared_ptr<DerivedModel> derived_;
  std::vector<ClusterObject> objects_;
  std::size_t shifted_begin_ = 0;
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

/// ind H u {P_i[1]} as derived objects.
inline std::vector<DerivedObject> ind_cluster(const ClusterCategory& c) {
  std::vector<DerivedObject> out;
  for (const auto& o : c.objects()) out.push_back(o.derived());
  return out;
}

inline std::vector<DerivedObject> ind_cluster(const QuiverPtr& q) { return ind_cluster(ClusterCategory(q)); }

inline const ClusterHomSpace& hom_cluster(const ClusterCategory& c, std::size_t x, std::size_t y) { return c.hom(x, y); }
inline std::size_t ext1_cluster(const ClusterCategory& c, std::size_t x, std::size_t y) { return c.ext1(x, y); }

/// The root category D^b/[2] on representatives ind H u ind H[1].
class RootCategory {
 public:
  explicit RootCategory(std::shared_ptr<const Catalog> catalog) : derived_(std::move(catalog)) {
    for (int s = 0; s <= 1; ++s)
      for (std::size_t i = 0; i < derived_.catalog().size(); ++i) objects_.push_back(derived_.module(i, s));
  }
  explicit RootCategory(QuiverPtr q) : RootCategory(std::make_shared<const Catalog>(std::move(q))) {}

  std::size_t size() const { return objects_.size(); }
  const DerivedObject& object(std::size_t x) const { return objects_.at(x); }
  const std::vector<DerivedObject>& objects() const { return objects_; }
  const DerivedModel& derived() const { return derived_; }

  /// Signed dimension vector: dim M, or -dim M for M[1].
  RootVec dim(std::size_t x) const { return k0_class(objects_.at(x)); }

  /// dim Hom_R(X, Y) = sum_i dim Hom_D(X, Y[2i]) over i in [-3, 3]; between
  /// representatives of degree 0 and 1 only i in {0, 1} can contribute.
  std::size_t hom(std::size_t x, std::size_t y) const {
    std::size_t total = 0;
    for (int i = -3; i <= 3; ++i) {
      DerivedObject Y = objects_.at(y);
      Y.shift += 2 * i;
      std::size_t d = derived_.hom(objects_.at(x), Y).dim;
      if (d != 0 && i != 0 && i != 1) throw InvariantViolation("root-category Hom has a term outside the window");
      total += d;
    }
    return total;
  }

 private:
  DerivedModel derived_;
  std::vector<DerivedObject> objects_;
};

inline std::vector<DerivedObject> ind_root_category(const QuiverPtr& q) { return RootCategory(q).objects(); }

}  // namespace clustercat
