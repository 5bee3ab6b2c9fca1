#pragma once

// Valued quivers: an orientation of the graph of a Cartan matrix.

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clustercat/error.hpp"
#include "clustercat/linalg.hpp"
#include "clustercat/roots.hpp"

namespace clustercat {

struct Arrow {
  int source;
  int target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

enum class VertexClass { sink, source, interior };

inline const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::sink: return "sink";
    case VertexClass::source: return "source";
    default: return "interior";
  }
}

/// An orientation of the Cartan graph. Vertices are 0-based. The valuation of
/// an arrow i -> j is (d_ij, d_ji) = (-a_ij, -a_ji).
class ValuedQuiver {
 public:
  ValuedQuiver() = default;

  ValuedQuiver(CartanData cartan, std::vector<Arrow> arrows) : cartan_(std::move(cartan)), arrows_(std::move(arrows)) {
    const int n = static_cast<int>(cartan_.rank());
    std::vector<std::vector<int>> seen(n, std::vector<int>(n, 0));
    for (const auto& a : arrows_) {
      if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n) throw InputError("arrow endpoint out of range");
      if (a.source == a.target) throw InputError("loops are not allowed");
      ++seen[a.source][a.target];
    }
    if (!acyclic()) throw InputError("quiver has an oriented cycle");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        int count = seen[i][j] + seen[j][i];
        if (count > 1) throw InputError("more than one arrow on an edge");
        if ((count == 1) != (cartan_(i, j) != 0)) throw InputError("arrows do not match the Cartan graph");
      }
  }

  /// Simply-laced quiver from a list of arrows.
  static ValuedQuiver simply_laced(std::size_t n, const std::vector<Arrow>& arrows) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& a : arrows) edges.emplace_back(a.source, a.target);
    for (const auto& a : arrows)
      if (a.source < 0 || a.target < 0 || a.source >= static_cast<int>(n) || a.target >= static_cast<int>(n))
        throw InputError("arrow endpoint out of range");
    // Detect double arrows before building the Cartan matrix would hide them.
    for (std::size_t x = 0; x < arrows.size(); ++x)
      for (std::size_t y = x + 1; y < arrows.size(); ++y) {
        const auto& a = arrows[x];
        const auto& b = arrows[y];
        if ((a.source == b.target && a.target == b.source)) throw InputError("quiver has an oriented cycle");
        if (a == b) throw InputError("more than one arrow on an edge");
      }
    return ValuedQuiver(CartanData::simply_laced(n, edges), arrows);
  }

  const CartanData& cartan() const { return cartan_; }
  std::size_t rank() const { return cartan_.rank(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  bool simply_laced() const { return cartan_.simply_laced(); }
  bool is_dynkin() const { return cartan_.is_dynkin(); }

  std::pair<int, int> valuation(const Arrow& a) const {
    return {-cartan_(a.source, a.target), -cartan_(a.target, a.source)};
  }

  VertexClass classify_vertex(int k) const {
    check_vertex(k);
    bool out = false, in = false;
    for (const auto& a : arrows_) {
      out |= a.source == k;
      in |= a.target == k;
    }
    if (!out) return VertexClass::sink;
    if (!in) return VertexClass::source;
    return VertexClass::interior;
  }

  bool is_sink(int k) const {
    check_vertex(k);
    return std::none_of(arrows_.begin(), arrows_.end(), [k](const Arrow& a) { return a.source == k; });
  }
  bool is_source(int k) const {
    check_vertex(k);
    return std::none_of(arrows_.begin(), arrows_.end(), [k](const Arrow& a) { return a.target == k; });
  }

  /// s_k Omega: every arrow incident to k reversed; arrow order is kept.
  ValuedQuiver reflect_orientation(int k) const {
    check_vertex(k);
    ValuedQuiver q = *this;
    for (auto& a : q.arrows_)
      if (a.source == k || a.target == k) std::swap(a.source, a.target);
    return q;
  }

  void check_vertex(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= rank()) throw InputError("vertex out of range: " + std::to_string(k + 1));
  }

  /// Vertices in an order where every arrow goes from earlier to later.
  std::vector<int> topological_order() const {
    const std::size_t n = rank();
    std::vector<int> indeg(n, 0), order;
    for (const auto& a : arrows_) ++indeg[a.target];
    for (;;) {
      int pick = -1;
      for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) {
          pick = static_cast<int>(i);
          break;
        }
      if (pick < 0) break;
      order.push_back(pick);
      indeg[pick] = -1;
      for (const auto& a : arrows_)
        if (a.source == pick) --indeg[a.target];
    }
    return order;
  }

  /// Admissible sequence k_1..k_n: k_1 is the smallest sink of Q, k_2 the
  /// smallest sink of s_{k_1}Q, and so on (sources when `sinks` is false).
  std::vector<int> admissible_sequence(bool sinks) const {
    std::vector<int> seq;
    std::vector<bool> used(rank(), false);
    ValuedQuiver q = *this;
    for (std::size_t step = 0; step < rank(); ++step) {
      int pick = -1;
      for (std::size_t k = 0; k < rank(); ++k) {
        if (used[k]) continue;
        bool ok = sinks ? q.is_sink(static_cast<int>(k)) : q.is_source(static_cast<int>(k));
        if (ok) {
          pick = static_cast<int>(k);
          break;
        }
      }
      if (pick < 0) throw InvariantViolation("no admissible vertex left");
      seq.push_back(pick);
      used[pick] = true;
      q = q.reflect_orientation(pick);
    }
    return seq;
  }

  friend bool operator==(const ValuedQuiver& a, const ValuedQuiver& b) {
    return a.cartan_ == b.cartan_ && a.arrows_ == b.arrows_;
  }

 private:
  bool acyclic() const { return topological_order().size() == rank(); }

  CartanData cartan_;
  std::vector<Arrow> arrows_;
};

/// Every orientation of the Cartan graph, edges taken in (i < j) order and
/// enumerated as binary counters (bit = 0 means i -> j).
inline std::vector<ValuedQuiver> all_orientations(const CartanData& c) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < c.rank(); ++i)
    for (std::size_t j = i + 1; j < c.rank(); ++j)
      if (c(i, j) != 0) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  if (edges.size() > 20) throw InputError("too many edges to enumerate orientations");
  std::vector<ValuedQuiver> out;
  for (unsigned long mask = 0; mask < (1UL << edges.size()); ++mask) {
    std::vector<Arrow> arrows;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [i, j] = edges[e];
      arrows.push_back((mask >> e) & 1 ? Arrow{j, i} : Arrow{i, j});
    }
    try {
      out.emplace_back(c, std::move(arrows));
    } catch (const InputError&) {
      // oriented cycle; only possible when the graph has a cycle
    }
  }
  return out;
}

/// Orientation with every edge i -- j (i < j) pointing i -> j.
inline ValuedQuiver standard_orientation(const CartanData& c) { return all_orientations(c).front(); }

/// Projective and injective dimension vectors, Euler form and Coxeter matrix.
/// Columns of `projectives` (resp. `injectives`) are dim P_i (resp. dim I_i).
struct ProjectiveData {
  std::vector<RootVec> projectives;
  std::vector<RootVec> injectives;
  std::vector<std::vector<long>> cartan;   // column i is dim P_i
  std::vector<std::vector<long>> euler;    // <x, y> = x^T E y
  std::vector<std::vector<long>> coxeter;  // dim tau X = Phi dim X
};

namespace detail {

inline std::vector<std::vector<long>> to_long(const Matrix& m) {
  std::vector<std::vector<long>> out(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).get_den() != 1) throw InvariantViolation("expected an integer matrix");
      out[r][c] = m(r, c).get_num().get_si();
    }
  return out;
}

inline Matrix columns_to_matrix(const std::vector<RootVec>& cols) {
  const std::size_t n = cols.size();
  Matrix m(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) m(r, c) = cols[c][r];
  return m;
}

}  // namespace detail

/// Dimension vector of P_i: along a path i = u_0 -> ... -> u_m = j the entry at
/// j is the product of -a(u_{t+1}, u_t); injectives dually along paths into i.
inline RootVec projective_dimension(const ValuedQuiver& q, int i, bool injective = false) {
  const std::size_t n = q.rank();
  RootVec dim = RootVec::zero(n);
  dim[i] = 1;
  std::vector<int> order = q.topological_order();
  if (injective) std::reverse(order.begin(), order.end());
  for (int u : order) {
    if (dim[u] == 0) continue;
    for (const auto& a : q.arrows()) {
      int from = injective ? a.target : a.source;
      int to = injective ? a.source : a.target;
      if (from == u) dim[to] += dim[u] * -q.cartan()(to, u);
    }
  }
  return dim;
}

inline ProjectiveData projective_data(const ValuedQuiver& q) {
  const std::size_t n = q.rank();
  ProjectiveData out;
  for (std::size_t i = 0; i < n; ++i) {
    out.projectives.push_back(projective_dimension(q, static_cast<int>(i)));
    out.injectives.push_back(projective_dimension(q, static_cast<int>(i), true));
  }
  Matrix p = detail::columns_to_matrix(out.projectives);
  Matrix inj = detail::columns_to_matrix(out.injectives);
  Matrix p_inv = inverse(p);
  // <P_i, y> = eps_i y_i, so C^T E = diag(eps).
  Matrix eps(n, n);
  for (std::size_t i = 0; i < n; ++i) eps(i, i) = q.cartan().symmetrizers()[i];
  out.cartan = detail::to_long(p);
  out.euler = detail::to_long(inverse(p.transpose()) * eps);
  // tau P_i = I_i[-1] in the derived category, so Phi dim P_i = -dim I_i.
  out.coxeter = detail::to_long(Rational(-1) * (inj * p_inv));
  return out;
}

inline long euler_form(const ProjectiveData& d, const RootVec& x, const RootVec& y) {
  long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * d.euler[i][j] * y[j];
  return s;
}

inline RootVec apply_matrix(const std::vector<std::vector<long>>& m, const RootVec& v) {
  RootVec out = RootVec::zero(v.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    long s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += m[i][j] * v[j];
    out[i] = static_cast<int>(s);
  }
  return out;
}

}  // namespace clustercat
