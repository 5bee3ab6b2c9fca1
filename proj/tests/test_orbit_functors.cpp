#include <gtest/gtest.h>

#include "clustercat/orbit_functors.hpp"

using namespace clustercat;

namespace {

std::vector<ValuedQuiver> sweep(std::initializer_list<const char*> labels) {
  std::vector<ValuedQuiver> out;
  for (auto label : labels)
    for (auto& q : all_orientations(cartan_of_type(label))) out.push_back(q);
  return out;
}

std::vector<int> sinks_and_sources(const ValuedQuiver& q) {
  std::vector<int> out;
  for (std::size_t k = 0; k < q.rank(); ++k)
    if (q.is_sink(int(k)) || q.is_source(int(k))) out.push_back(int(k));
  return out;
}

ValuedQuiver a2() { return ValuedQuiver::simply_laced(2, {{0, 1}}); }

}  // namespace

TEST(OrbitFunctors, GammaExamples) {
  auto q = a2();
  EXPECT_EQ(gamma(q, Label::shifted_projective(2, 0)), AlmostPositiveRoot::negative_simple(2, 0));
  EXPECT_EQ(gamma(q, Label::module({0, 1})), AlmostPositiveRoot::positive({0, 1}));
  std::set<AlmostPositiveRoot> image;
  for (const auto& x : cluster_domain(q)) image.insert(gamma(q, x));
  auto all = almost_positive_roots(q.cartan());
  EXPECT_EQ(image, std::set<AlmostPositiveRoot>(all.begin(), all.end()));
  EXPECT_THROW(gamma(q, Label::module({1, 2})), InputError);
}

TEST(OrbitFunctors, ClusterReflectBoundaryCases) {
  auto q = a2();
  EXPECT_EQ(cluster_reflect(q, 1, Label::module({0, 1})), Label::shifted_projective(2, 1));
  EXPECT_EQ(cluster_reflect(q, 1, Label::shifted_projective(2, 1)), Label::module({0, 1}));
  EXPECT_EQ(cluster_reflect(q, 1, Label::shifted_projective(2, 0)), Label::shifted_projective(2, 0));
  EXPECT_EQ(cluster_reflect(q, 1, Label::module({1, 1})), Label::module({1, 0}));
  EXPECT_EQ(cluster_reflect(q, 1, Label::module({1, 0})), Label::module({1, 1}));
  auto q3 = ValuedQuiver::simply_laced(3, {{0, 1}, {1, 2}});
  EXPECT_THROW(cluster_reflect(q3, 1, Label::module({0, 1, 0})), InputError);
}

TEST(OrbitFunctors, GammaCommutesWithTruncatedReflection) {
  for (const auto& q : sweep({"A1", "A2", "A3", "A4", "D4", "B2", "C3", "G2", "B3", "F4"})) {
    for (int k : sinks_and_sources(q)) {
      auto rep = verify_cluster_square(q, k);
      EXPECT_TRUE(rep.ok()) << q.cartan().type_label() << " k=" << k << " "
                            << (rep.failures.empty() ? "" : rep.failures[0].object);
      EXPECT_GT(rep.checked, 0u);
    }
  }
}

TEST(OrbitFunctors, DimensionCommutesWithReflection) {
  for (const auto& q : sweep({"A1", "A2", "A3", "A4", "D4", "B2", "C3", "G2"})) {
    for (int k : sinks_and_sources(q)) {
      auto rep = verify_root_square(q, k);
      EXPECT_TRUE(rep.ok()) << q.cartan().type_label() << " k=" << k;
    }
  }
}

TEST(OrbitFunctors, RootReflectExamples) {
  auto q = a2();
  EXPECT_EQ(root_reflect(q, 1, Label::module({0, 1})), Label::shifted_module({0, 1}));
  EXPECT_EQ(root_reflect(q, 1, Label::shifted_module({0, 1})), Label::module({0, 1}));
  EXPECT_EQ(root_dim(root_reflect(q, 1, Label::shifted_module({1, 0}))), (RootVec{-1, -1}));
  EXPECT_EQ(root_domain(q).size(), 6u);
}

TEST(OrbitFunctors, ReportsCounterexamples) {
  VerificationReport r;
  r.check(true, "x", "1", "1");
  r.check(false, "y", "1", "2");
  EXPECT_EQ(r.checked, 2u);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].object, "y");
}

TEST(OrbitFunctors, EquivalenceInvariants) {
  for (const auto& q : sweep({"A1", "A2", "A3", "D4"})) {
    for (int k : sinks_and_sources(q)) {
      auto rep = equivalence_invariants(q, k);
      EXPECT_TRUE(rep.ok()) << q.cartan().type_label() << " k=" << k;
    }
  }
}

TEST(OrbitFunctors, NormalizationReachesModules) {
  auto q = ValuedQuiver::simply_laced(3, {{0, 1}, {1, 2}});
  ClusterCategory c(make_quiver(q));
  for (const auto& t : enumerate_tilting_sets(c)) {
    std::vector<Label> labels;
    for (std::size_t x : t) labels.push_back(label_of(c, x));
    auto n = normalize_to_modules(q, labels);
    for (const auto& l : n.labels) EXPECT_TRUE(l.is_module());
    // Tilting in the new category as well.
    ClusterCategory d(make_quiver(n.quiver));
    std::vector<std::size_t> ids;
    for (const auto& l : n.labels) ids.push_back(index_of(d, l));
    EXPECT_TRUE(is_tilting(d, ids));
    if (all_modules(c, t)) {
      EXPECT_TRUE(n.reflections.empty());
    }
  }
}
