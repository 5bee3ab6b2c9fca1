#pragma once

// Grothendieck group quotients Z^n / im(I - M) for an automorphism acting on
// K_0 by the integer matrix M.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "clustercat/quiver.hpp"

namespace clustercat {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Diagonal of the Smith normal form, d_1 | d_2 | ..., padded with zeros to
/// min(rows, cols).
inline std::vector<mpz_class> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  const std::size_t lim = std::min(rows, cols);
  for (std::size_t t = 0; t < lim; ++t) {
    // Bring a nonzero entry of least absolute value to (t, t); repeat until it
    // divides its row and column.
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (sgn(m[r][c]) != 0 && (pr == rows || abs(m[r][c]) < abs(m[pr][pc]))) pr = r, pc = c;
      if (pr == rows) {
        std::vector<mpz_class> out;
        for (std::size_t i = 0; i < lim; ++i) out.push_back(i < t ? mpz_class(abs(m[i][i])) : mpz_class(0));
        return out;
      }
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        mpz_class q = m[r][t] / m[t][t];
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        clean = clean && sgn(m[r][t]) == 0;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        mpz_class q = m[t][c] / m[t][t];
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        clean = clean && sgn(m[t][c]) == 0;
      }
      if (!clean) continue;
      // Divisibility of the remaining block.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (m[r][c] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[r][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < lim; ++i) out.push_back(abs(m[i][i]));
  return out;
}

enum class K0Auto { F, shift2, identity };

/// Z^n / im(relations), described by its invariant factors.
struct GrothendieckQuotient {
  std::size_t rank = 0;
  IntMatrix relations;
  std::vector<mpz_class> invariant_factors;

  std::size_t free_rank() const {
    std::size_t r = rank - invariant_factors.size();
    for (const auto& d : invariant_factors) r += d == 0;
    return r;
  }
  /// Torsion orders greater than one.
  std::vector<mpz_class> torsion() const {
    std::vector<mpz_class> out;
    for (const auto& d : invariant_factors)
      if (d > 1) out.push_back(d);
    return out;
  }
  bool trivial() const { return free_rank() == 0 && torsion().empty(); }
  std::string description() const {
    if (trivial()) return "trivial group";
    std::string s;
    for (const auto& d : torsion()) s += (s.empty() ? "" : " x ") + std::string("Z/") + d.get_str();
    if (std::size_t f = free_rank(); f > 0)
      s += (s.empty() ? "" : " x ") + std::string(f == 1 ? "Z" : "Z^" + std::to_string(f));
    return s;
  }
};

inline GrothendieckQuotient quotient_by(IntMatrix relations) {
  GrothendieckQuotient g;
  g.rank = relations.size();
  g.relations = std::move(relations);
  g.invariant_factors = smith_invariants(g.relations);
  return g;
}

/// Action on K_0: M_F = -Phi^{-1} for F = tau^-1 [1], and the identity for [2].
inline IntMatrix k0_action(const ValuedQuiver& q, K0Auto which) {
  const std::size_t n = q.rank();
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  if (which != K0Auto::F) {
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  }
  ProjectiveData d = projective_data(q);
  Matrix phi(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) phi(r, c) = static_cast<long>(d.coxeter[r][c]);
  Matrix inv = inverse(phi);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (inv(r, c).get_den() != 1) throw InvariantViolation("Coxeter matrix is not unimodular");
      m[r][c] = -inv(r, c).get_num();
    }
  return m;
}

inline GrothendieckQuotient k0_quotient(const ValuedQuiver& q, K0Auto which) {
  IntMatrix m = k0_action(q, which);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) m[r][c] = (r == c ? 1 : 0) - m[r][c];
  return quotient_by(std::move(m));
}

}  // namespace clustercat
