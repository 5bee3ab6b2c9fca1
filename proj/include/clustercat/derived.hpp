#pragma once

// Combinatorial model of ind D^b(mod KQ) for a Dynkin quiver: objects are
// (indecomposable module, shift) pairs.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "clustercat/rep.hpp"

namespace clustercat {

struct DerivedObject {
  RootVec key;  // dimension vector of the module
  int shift = 0;

  friend bool operator==(const DerivedObject&, const DerivedObject&) = default;
  friend auto operator<=>(const DerivedObject& a, const DerivedObject& b) {
    if (auto c = a.shift <=> b.shift; c != 0) return c;
    return a.key <=> b.key;
  }
  std::string str() const { return key.str() + (shift ? "[" + std::to_string(shift) + "]" : ""); }
};

enum class Auto { tau, tau_inverse, shift, F, F_inverse };

enum class DerivedHomKind { zero, hom, ext };

/// Hom_D(M[a], N[b]): Hom_H(M, N) for b = a, Ext^1_H(M, N) for b = a + 1, else 0.
struct DerivedHom {
  DerivedHomKind kind = DerivedHomKind::zero;
  std::size_t dim = 0;
  std::size_t source = 0, target = 0;  // catalog indices of M and N
};

class DerivedModel {
 public:
  explicit DerivedModel(std::shared_ptr<const Catalog> catalog) : catalog_(std::move(catalog)) {}
  explicit DerivedModel(QuiverPtr q) : catalog_(std::make_shared<const Catalog>(std::move(q))) {}

  const Catalog& catalog() const { return *catalog_; }
  const std::shared_ptr<const Catalog>& catalog_ptr() const { return catalog_; }

  DerivedObject module(std::size_t index, int shift = 0) const { return {(*catalog_)[index].key, shift}; }
  DerivedObject projective(int i, int shift = 0) const { return module(catalog_->projective(i), shift); }
  DerivedObject injective(int i, int shift = 0) const { return module(catalog_->injective(i), shift); }
  std::size_t index(const DerivedObject& x) const { return catalog_->at(x.key); }

  DerivedObject tau(const DerivedObject& x) const {
    const auto& e = (*catalog_)[index(x)];
    if (e.projective_vertex) return injective(*e.projective_vertex, x.shift - 1);
    return module(*e.tau, x.shift);
  }

  DerivedObject tau_inverse(const DerivedObject& x) const {
    const auto& e = (*catalog_)[index(x)];
    if (e.injective_vertex) return projective(*e.injective_vertex, x.shift + 1);
    return module(*e.tau_inverse, x.shift);
  }

  /// Applies tau, tau^-1, [m], F = tau^-1 [1] or F^-1; `m` is used only for the shift.
  DerivedObject apply(const DerivedObject& x, Auto which, int m = 1) const {
    switch (which) {
      case Auto::tau: return tau(x);
      case Auto::tau_inverse: return tau_inverse(x);
      case Auto::shift: return {x.key, x.shift + m};
      case Auto::F: {
        DerivedObject y = tau_inverse(x);
        ++y.shift;
        return y;
      }
      case Auto::F_inverse: {
        DerivedObject y = x;
        --y.shift;
        return tau(y);
      }
    }
    throw InvariantViolation("unknown automorphism");
  }

  /// F^i applied to x (i may be negative).
  DerivedObject F_power(DerivedObject x, int i) const {
    for (; i > 0; --i) x = apply(x, Auto::F);
    for (; i < 0; ++i) x = apply(x, Auto::F_inverse);
    return x;
  }

  DerivedHom hom(const DerivedObject& x, const DerivedObject& y) const {
    DerivedHom h;
    h.source = index(x);
    h.target = index(y);
    if (y.shift == x.shift) {
      h.kind = DerivedHomKind::hom;
      h.dim = spaces(h.source, h.target).hom.dim();
    } else if (y.shift == x.shift + 1) {
      h.kind = DerivedHomKind::ext;
      h.dim = spaces(h.source, h.target).ext.dim();
    }
    if (h.dim == 0) h.kind = DerivedHomKind::zero;
    return h;
  }

  /// Hom and Ext^1 between catalog modules, computed once per pair.
  const HomExt& spaces(std::size_t m, std::size_t n) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find({m, n});
    if (it == memo_.end()) it = memo_.emplace(std::make_pair(m, n), hom_ext((*catalog_)[m].rep, (*catalog_)[n].rep)).first;
    return it->second;
  }

 private:
  std::shared_ptr<const Catalog> catalog_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::size_t, std::size_t>, HomExt> memo_;
};

inline DerivedHom hom_derived(const DerivedModel& d, const DerivedObject& x, const DerivedObject& y) { return d.hom(x, y); }

inline DerivedObject apply_auto(const DerivedModel& d, const DerivedObject& x, Auto which, int m = 1) {
  return d.apply(x, which, m);
}

/// Class of an object in K_0: dim M for M[2j], -dim M for M[2j+1].
inline RootVec k0_class(const DerivedObject& x) { return (x.shift % 2 == 0) ? x.key : -x.key; }

}  // namespace clustercat
