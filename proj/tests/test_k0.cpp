#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>

#include "clustercat/k0.hpp"

using namespace clustercat;

namespace {

mpz_class det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(m[0][c]) == 0) continue;
    IntMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    mpz_class term = m[0][c] * det(minor);
    s += (c % 2 == 0) ? term : mpz_class(-term);
  }
  return s;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Invariant factors from determinantal divisors d_k = gcd of k x k minors.
std::vector<mpz_class> determinantal_oracle(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<mpz_class> divisors{1};
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class g = 0;
    for (const auto& rs : subsets(n, k))
      for (const auto& cs : subsets(n, k)) {
        IntMatrix sub;
        for (std::size_t r : rs) {
          std::vector<mpz_class> row;
          for (std::size_t c : cs) row.push_back(m[r][c]);
          sub.push_back(row);
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(det(sub)).get_mpz_t());
      }
    divisors.push_back(g);
  }
  std::vector<mpz_class> out;
  for (std::size_t k = 1; k <= n; ++k)
    out.push_back(divisors[k - 1] == 0 ? mpz_class(0) : mpz_class(divisors[k] / divisors[k - 1]));
  return out;
}

}  // namespace

TEST(K0, SmithMatchesDeterminantalDivisors) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 4;
    IntMatrix m(n, std::vector<mpz_class>(n));
    for (auto& row : m)
      for (auto& x : row) x = trial % 5 == 0 ? dist(rng) * 2 : dist(rng);
    EXPECT_EQ(smith_invariants(m), determinantal_oracle(m));
  }
}

TEST(K0, InvariantFactorsDivideSuccessively) {
  IntMatrix m = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto d = smith_invariants(m);
  EXPECT_EQ(d, (std::vector<mpz_class>{2, 6, 12}));
}

TEST(K0, ShiftTwoAndIdentityGiveFreeGroups) {
  for (auto label : {"A1", "A2", "A5", "B3", "C3", "D4", "E6", "F4", "G2"}) {
    auto q = standard_orientation(cartan_of_type(label));
    for (auto which : {K0Auto::shift2, K0Auto::identity}) {
      auto g = k0_quotient(q, which);
      EXPECT_EQ(g.free_rank(), q.rank());
      EXPECT_TRUE(g.torsion().empty());
    }
  }
}

TEST(K0, ClusterCategoryOfEvenTypeAIsTrivial) {
  for (auto label : {"A2", "A4", "A6"})
    for (auto& q : all_orientations(cartan_of_type(label))) {
      auto g = k0_quotient(q, K0Auto::F);
      EXPECT_TRUE(g.trivial()) << label;
      EXPECT_EQ(g.description(), "trivial group");
    }
}

TEST(K0, OtherTypesAreOrientationIndependentAndPinned) {
  const std::map<std::string, std::string> pinned = {
      {"A1", "Z"},  {"A3", "Z"},   {"A5", "Z"},   {"B2", "Z/2"},           {"B3", "Z"},
      {"C3", "Z"},  {"D4", "Z^2"}, {"D5", "Z"},   {"D6", "Z^2"},           {"E6", "trivial group"},
      {"E7", "Z"},  {"E8", "trivial group"},      {"F4", "trivial group"}, {"G2", "Z/3"}};
  for (const auto& [label, text] : pinned) {
    for (auto& q : all_orientations(cartan_of_type(label))) {
      auto g = k0_quotient(q, K0Auto::F);
      EXPECT_EQ(g.description(), text) << label;
      if (q.rank() <= 6) {
        EXPECT_EQ(smith_invariants(g.relations), determinantal_oracle(g.relations));
      }
    }
  }
}

TEST(K0, DescriptionFormat) {
  auto g = quotient_by({{0, 0}, {0, 3}});
  EXPECT_EQ(g.description(), "Z/3 x Z");
}
