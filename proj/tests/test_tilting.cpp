#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "clustercat/tilting.hpp"

using namespace clustercat;

namespace {

// Subsets of size n that are Ext-free and not extendable, by brute force.
std::size_t brute_force_count(const ClusterCategory& c) {
  const std::size_t m = c.size(), n = c.rank();
  std::size_t count = 0;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == n) {
      count += is_tilting(c, pick);
      return;
    }
    for (std::size_t x = start; x < m; ++x) {
      pick.push_back(x);
      if (is_exceptional(c, pick)) rec(x + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return count;
}

}  // namespace

TEST(Tilting, CountsPerType) {
  const std::map<std::string, std::size_t> expected = {{"A1", 2},  {"A2", 5},   {"A3", 14}, {"A4", 42},
                                                       {"A5", 132}, {"D4", 50}, {"D5", 182}};
  for (const auto& [label, count] : expected) {
    for (auto& qv : all_orientations(cartan_of_type(label))) {
      ClusterCategory c(make_quiver(qv));
      auto sets = enumerate_tilting_sets(c);
      EXPECT_EQ(sets.size(), count) << label;
      for (const auto& s : sets) EXPECT_TRUE(is_tilting(c, s));
    }
  }
}

TEST(Tilting, CliqueSearchMatchesBruteForce) {
  for (auto label : {"A2", "A3", "A4", "D4"}) {
    ClusterCategory c(make_quiver(standard_orientation(cartan_of_type(label))));
    EXPECT_EQ(enumerate_tilting_sets(c).size(), brute_force_count(c)) << label;
  }
}

TEST(Tilting, A1HasTwoSingletons) {
  ClusterCategory c(make_quiver(standard_orientation(cartan_of_type("A1"))));
  auto sets = enumerate_tilting_sets(c);
  ASSERT_EQ(sets.size(), 2u);
  EXPECT_EQ(complete_almost_tilting(c, {}).size(), 2u);
}

TEST(Tilting, EveryAlmostCompleteSetHasTwoCompletions) {
  for (auto label : {"A2", "A3", "A4", "D4"}) {
    for (auto& qv : all_orientations(cartan_of_type(label))) {
      ClusterCategory c(make_quiver(qv));
      for (const auto& t : enumerate_tilting_sets(c))
        for (std::size_t drop = 0; drop < t.size(); ++drop) {
          auto b = t;
          b.erase(b.begin() + static_cast<long>(drop));
          auto comp = complements(c, b);
          EXPECT_EQ(comp.size(), 2u);
          EXPECT_NE(std::find(comp.begin(), comp.end(), t[drop]), comp.end());
        }
    }
  }
}

TEST(Tilting, A2ExchangeGraphIsAPentagon) {
  ClusterCategory c(make_quiver(ValuedQuiver::simply_laced(2, {{0, 1}})));
  auto sets = enumerate_tilting_sets(c);
  auto edges = exchange_graph(sets);
  EXPECT_EQ(edges.size(), 5u);
  std::vector<int> degree(sets.size());
  for (auto [a, b] : edges) ++degree[a], ++degree[b];
  for (int d : degree) EXPECT_EQ(d, 2);
}

TEST(Tilting, RankCapIsEnforced) {
  ClusterCategory c(make_quiver(standard_orientation(cartan_of_type("A3"))));
  EXPECT_THROW(enumerate_tilting_sets(c, 2), InputError);
}

TEST(Tilting, ErrorsOnBadAlmostCompleteSets) {
  ClusterCategory c(make_quiver(ValuedQuiver::simply_laced(2, {{0, 1}})));
  EXPECT_THROW(complements(c, {0, 1}), InputError);
  EXPECT_THROW(complements(c, {c.simple_module(0), c.projective_module(1)}), InputError);
}
