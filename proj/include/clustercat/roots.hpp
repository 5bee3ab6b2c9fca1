#pragma once

// Cartan data of valued Dynkin graphs, Weyl reflections and root enumeration.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "clustercat/error.hpp"
#include "clustercat/linalg.hpp"

namespace clustercat {

/// Integer vector in simple-root coordinates.
struct RootVec {
  std::vector<int> coords;

  RootVec() = default;
  explicit RootVec(std::vector<int> c) : coords(std::move(c)) {}
  RootVec(std::initializer_list<int> c) : coords(c) {}

  static RootVec zero(std::size_t n) { return RootVec(std::vector<int>(n, 0)); }
  static RootVec simple(std::size_t n, int i) {
    RootVec v = zero(n);
    v.coords.at(i) = 1;
    return v;
  }

  std::size_t size() const { return coords.size(); }
  int& operator[](std::size_t i) { return coords[i]; }
  int operator[](std::size_t i) const { return coords[i]; }

  bool nonnegative() const {
    return std::all_of(coords.begin(), coords.end(), [](int x) { return x >= 0; });
  }
  bool nonpositive() const {
    return std::all_of(coords.begin(), coords.end(), [](int x) { return x <= 0; });
  }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int x) { return x == 0; });
  }
  int height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

  RootVec operator-() const {
    RootVec r = *this;
    for (auto& x : r.coords) x = -x;
    return r;
  }
  friend RootVec operator+(RootVec a, const RootVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  }
  friend RootVec operator-(RootVec a, const RootVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  }

  auto operator<=>(const RootVec&) const = default;

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
    os << ')';
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const RootVec& v) { return os << v.str(); }
};

class CartanData {
 public:
  CartanData() = default;

  /// Validates a generalized Cartan matrix: a_ii = 2, a_ij <= 0 off the
  /// diagonal, a_ij = 0 iff a_ji = 0, and symmetrizable. Finite type is not
  /// required here; see is_dynkin().
  explicit CartanData(std::vector<std::vector<int>> a) : a_(std::move(a)) {
    const std::size_t n = a_.size();
    if (n == 0) throw InputError("Cartan matrix must have positive rank");
    for (std::size_t i = 0; i < n; ++i) {
      if (a_[i].size() != n) throw InputError("Cartan matrix must be square");
      if (a_[i][i] != 2) throw InputError("Cartan matrix diagonal must be 2");
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (a_[i][j] > 0) throw InputError("Cartan matrix off-diagonal entries must be <= 0");
        if ((a_[i][j] == 0) != (a_[j][i] == 0)) throw InputError("Cartan matrix zero pattern must be symmetric");
      }
    }
    compute_symmetrizers();
    dynkin_ = positive_definite();
    label_ = dynkin_ ? recognise_type() : std::string("non-Dynkin");
  }

  static CartanData simply_laced(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
    for (auto [i, j] : edges) a[i][j] = a[j][i] = -1;
    return CartanData(std::move(a));
  }

  std::size_t rank() const { return a_.size(); }
  int operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const std::vector<std::vector<int>>& matrix() const { return a_; }
  const std::vector<int>& symmetrizers() const { return d_; }
  bool is_dynkin() const { return dynkin_; }
  const std::string& type_label() const { return label_; }

  bool simply_laced() const {
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        if (i != j && a_[i][j] != 0 && a_[i][j] != -1) return false;
    return true;
  }

  std::vector<int> neighbours(int i) const {
    std::vector<int> out;
    for (std::size_t j = 0; j < rank(); ++j)
      if (static_cast<int>(j) != i && a_[i][j] != 0) out.push_back(static_cast<int>(j));
    return out;
  }

  friend bool operator==(const CartanData& x, const CartanData& y) { return x.a_ == y.a_; }

 private:
  void compute_symmetrizers() {
    const std::size_t n = rank();
    // d_i a_ij = d_j a_ji, solved over the rationals per component then scaled.
    std::vector<Rational> d(n, Rational(0));
    for (std::size_t start = 0; start < n; ++start) {
      if (sgn(d[start]) != 0) continue;
      d[start] = 1;
      std::deque<std::size_t> queue{start};
      while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j || a_[i][j] == 0) continue;
          Rational dj = d[i] * a_[i][j] / a_[j][i];
          if (sgn(d[j]) == 0) {
            d[j] = dj;
            queue.push_back(j);
          } else if (d[j] != dj) {
            throw InputError("Cartan matrix is not symmetrizable");
          }
        }
      }
    }
    mpz_class lcm = 1;
    for (auto& x : d) lcm = lcm * x.get_den() / gcd(lcm, x.get_den());
    d_.assign(n, 0);
    mpz_class g = 0;
    std::vector<mpz_class> scaled(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = d[i] * lcm;
      scaled[i] = s.get_num();
      g = gcd(g, scaled[i]);
    }
    for (std::size_t i = 0; i < n; ++i) d_[i] = static_cast<int>(mpz_class(scaled[i] / g).get_si());
  }

  // Sylvester's criterion on the symmetrized matrix d_i a_ij.
  bool positive_definite() const {
    const std::size_t n = rank();
    Matrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j) = d_[i] * a_[i][j];
    for (std::size_t k = 1; k <= n; ++k) {
      Matrix m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = s(i, j);
      // Gaussian elimination determinant.
      Rational det = 1;
      for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && sgn(m(p, c)) == 0) ++p;
        if (p == k) return false;
        if (p != c) {
          for (std::size_t x = 0; x < k; ++x) std::swap(m(p, x), m(c, x));
          det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < k; ++r) {
          Rational f = m(r, c) / m(c, c);
          for (std::size_t x = c; x < k; ++x) m(r, x) -= f * m(c, x);
        }
      }
      if (sgn(det) <= 0) return false;
    }
    return true;
  }

  std::string recognise_type() const;

  std::vector<std::vector<int>> a_;
  std::vector<int> d_;
  bool dynkin_ = false;
  std::string label_;
};

// Type recognition by the shape of each connected component.
inline std::string CartanData::recognise_type() const {
  const std::size_t n = rank();
  std::vector<int> comp(n, -1);
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members;
    std::deque<int> q{static_cast<int>(s)};
    comp[s] = static_cast<int>(labels.size());
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      members.push_back(i);
      for (int j : neighbours(i))
        if (comp[j] < 0) {
          comp[j] = comp[s];
          q.push_back(j);
        }
    }
    const std::size_t m = members.size();
    int branch = -1;
    int heavy_i = -1, heavy_j = -1;
    for (int i : members) {
      if (neighbours(i).size() >= 3) branch = i;
      for (int j : neighbours(i))
        if (a_[i][j] * a_[j][i] > 1) heavy_i = i, heavy_j = j;
    }
    std::string r = std::to_string(m);
    if (heavy_i >= 0) {
      int product = a_[heavy_i][heavy_j] * a_[heavy_j][heavy_i];
      if (product == 3) {
        labels.push_back("G2");
        continue;
      }
      if (m == 4 && neighbours(heavy_i).size() == 2 && neighbours(heavy_j).size() == 2) {
        labels.push_back("F4");
        continue;
      }
      // The short end carries the -2 in its row under a_ij = 2(a_i,a_j)/(a_i,a_i).
      int end = neighbours(heavy_i).size() == 1 ? heavy_i : heavy_j;
      int other = end == heavy_i ? heavy_j : heavy_i;
      if (m == 2) {
        labels.push_back("B2");
      } else {
        labels.push_back((a_[end][other] == -2 ? "B" : "C") + r);
      }
      continue;
    }
    if (branch < 0) {
      labels.push_back("A" + r);
      continue;
    }
    std::vector<int> arms;
    for (int start : neighbours(branch)) {
      int prev = branch, cur = start, len = 1;
      for (;;) {
        int next = -1;
        for (int j : neighbours(cur))
          if (j != prev) next = j;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1)
      labels.push_back("D" + r);
    else
      labels.push_back("E" + r);
  }
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "+" : "") + labels[i];
  return out;
}

/// Cartan matrix of a Dynkin type with Bourbaki labelling (0-based here).
/// Entries follow a_kj = <alpha_j, alpha_k^vee>; B_n has its short root last,
/// C_n is the transpose, and G_2 uses a_12 = -1, a_21 = -3.
inline CartanData cartan_of_type(char type, std::size_t n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  auto edge = [&](std::size_t i, std::size_t j, int aij = -1, int aji = -1) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  switch (type) {
    case 'A':
      if (n < 1) break;
      for (std::size_t i = 0; i + 1 < n; ++i) edge(i, i + 1);
      return CartanData(a);
    case 'B':
    case 'C':
      if (n < 2) break;
      for (std::size_t i = 0; i + 2 < n; ++i) edge(i, i + 1);
      if (type == 'B') edge(n - 2, n - 1, -1, -2);
      else edge(n - 2, n - 1, -2, -1);
      return CartanData(a);
    case 'D':
      if (n < 4) break;
      for (std::size_t i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      return CartanData(a);
    case 'E':
      if (n < 6 || n > 8) break;
      edge(0, 2);
      edge(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) edge(i, i + 1);
      return CartanData(a);
    case 'F':
      if (n != 4) break;
      edge(0, 1);
      edge(1, 2, -1, -2);
      edge(2, 3);
      return CartanData(a);
    case 'G':
      if (n != 2) break;
      edge(0, 1, -1, -3);
      return CartanData(a);
    default:
      break;
  }
  throw InputError(std::string("unknown Dynkin type ") + type + std::to_string(n));
}

/// Parses labels such as "A3", "D4" or "E6".
inline CartanData cartan_of_type(const std::string& label) {
  if (label.size() < 2) throw InputError("bad type label: " + label);
  std::size_t n = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (label[i] < '0' || label[i] > '9') throw InputError("bad type label: " + label);
    n = n * 10 + static_cast<std::size_t>(label[i] - '0');
  }
  return cartan_of_type(static_cast<char>(std::toupper(static_cast<unsigned char>(label[0]))), n);
}

/// s_k(v) = v - (sum_j a_kj v_j) alpha_k.
inline RootVec simple_reflection(int k, const RootVec& v, const CartanData& c) {
  if (k < 0 || static_cast<std::size_t>(k) >= c.rank()) throw InputError("vertex out of range");
  if (v.size() != c.rank()) throw InputError("root vector has wrong length");
  int pairing = 0;
  for (std::size_t j = 0; j < c.rank(); ++j) pairing += c(k, j) * v[j];
  RootVec w = v;
  w[k] -= pairing;
  return w;
}

/// All positive roots, by reflection closure from the simple roots. Sorted by
/// height, then lexicographically.
inline std::vector<RootVec> enumerate_positive_roots(const CartanData& c) {
  if (!c.is_dynkin()) throw InputError("root enumeration requires Dynkin (positive definite) Cartan data");
  const std::size_t n = c.rank();
  std::set<RootVec> seen;
  std::deque<RootVec> queue;
  for (std::size_t i = 0; i < n; ++i) {
    RootVec s = RootVec::simple(n, static_cast<int>(i));
    seen.insert(s);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    RootVec v = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < n; ++k) {
      RootVec w = simple_reflection(static_cast<int>(k), v, c);
      if (w.nonnegative() && !w.is_zero() && seen.insert(w).second) queue.push_back(w);
    }
  }
  std::vector<RootVec> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const RootVec& a, const RootVec& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a < b;
  });
  return out;
}

/// Element of the almost positive roots: a positive root or the negative of a
/// simple root.
class AlmostPositiveRoot {
 public:
  static AlmostPositiveRoot positive(RootVec r) {
    if (!r.nonnegative() || r.is_zero()) throw InvariantViolation("positive root expected");
    AlmostPositiveRoot a;
    a.root_ = std::move(r);
    return a;
  }
  static AlmostPositiveRoot negative_simple(std::size_t n, int i) {
    AlmostPositiveRoot a;
    a.root_ = -RootVec::simple(n, i);
    a.vertex_ = i;
    return a;
  }

  bool is_negative_simple() const { return vertex_ >= 0; }
  int vertex() const { return vertex_; }
  /// Signed coordinates (negative simple roots as -e_i).
  const RootVec& vector() const { return root_; }

  auto operator<=>(const AlmostPositiveRoot&) const = default;

  std::string str() const { return is_negative_simple() ? "-a" + std::to_string(vertex_ + 1) : root_.str(); }

 private:
  RootVec root_;
  int vertex_ = -1;
};

inline std::vector<AlmostPositiveRoot> almost_positive_roots(const CartanData& c) {
  std::vector<AlmostPositiveRoot> out;
  for (std::size_t i = 0; i < c.rank(); ++i)
    out.push_back(AlmostPositiveRoot::negative_simple(c.rank(), static_cast<int>(i)));
  for (auto& r : enumerate_positive_roots(c)) out.push_back(AlmostPositiveRoot::positive(r));
  return out;
}

/// sigma_k: fixes -alpha_j for j != k and acts as s_k otherwise.
inline AlmostPositiveRoot truncated_reflection(int k, const AlmostPositiveRoot& a, const CartanData& c) {
  if (k < 0 || static_cast<std::size_t>(k) >= c.rank()) throw InputError("vertex out of range");
  if (a.is_negative_simple() && a.vertex() != k) return a;
  RootVec w = simple_reflection(k, a.vector(), c);
  if (w == -RootVec::simple(c.rank(), k)) return AlmostPositiveRoot::negative_simple(c.rank(), k);
  if (!w.nonnegative() || w.is_zero())
    throw InvariantViolation("truncated reflection left the almost positive roots: " + w.str());
  return AlmostPositiveRoot::positive(w);
}

}  // namespace clustercat
