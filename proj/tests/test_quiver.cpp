#include <gtest/gtest.h>

#include "clustercat/quiver.hpp"

using namespace clustercat;

namespace {

ValuedQuiver linear_a3() { return ValuedQuiver::simply_laced(3, {{0, 1}, {1, 2}}); }

// 1 -> 2 -> 3 -> 4 with 5 -> 3.
ValuedQuiver five_vertex() { return ValuedQuiver::simply_laced(5, {{0, 1}, {1, 2}, {2, 3}, {4, 2}}); }

// Independent oracle: dim P_i at j counts paths i ~> j (simply-laced).
int count_paths(const ValuedQuiver& q, int from, int to) {
  if (from == to) return 1;
  int total = 0;
  for (const auto& a : q.arrows())
    if (a.source == from) total += count_paths(q, a.target, to);
  return total;
}

}  // namespace

TEST(Quiver, ClassifyVertex) {
  auto q = linear_a3();
  EXPECT_EQ(q.classify_vertex(2), VertexClass::sink);
  EXPECT_EQ(q.classify_vertex(0), VertexClass::source);
  EXPECT_EQ(q.classify_vertex(1), VertexClass::interior);
  EXPECT_EQ(five_vertex().classify_vertex(1), VertexClass::interior);
  EXPECT_EQ(five_vertex().classify_vertex(0), VertexClass::source);
  EXPECT_EQ(five_vertex().classify_vertex(4), VertexClass::source);
  EXPECT_EQ(five_vertex().classify_vertex(3), VertexClass::sink);
  EXPECT_THROW(q.classify_vertex(3), InputError);
}

TEST(Quiver, ReflectOrientation) {
  auto q = ValuedQuiver::simply_laced(2, {{0, 1}});
  auto r = q.reflect_orientation(1);
  EXPECT_EQ(r.arrows(), (std::vector<Arrow>{{1, 0}}));
  EXPECT_EQ(r.reflect_orientation(1), q);
  auto f = five_vertex().reflect_orientation(3);
  EXPECT_EQ(f.arrows(), (std::vector<Arrow>{{0, 1}, {1, 2}, {3, 2}, {4, 2}}));
  EXPECT_EQ(f.cartan(), five_vertex().cartan());
}

TEST(Quiver, RejectsBadInput) {
  EXPECT_THROW(ValuedQuiver::simply_laced(2, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(ValuedQuiver::simply_laced(3, {{0, 1}, {1, 2}, {2, 0}}), InputError);
  EXPECT_THROW(ValuedQuiver::simply_laced(2, {{0, 0}}), InputError);
  EXPECT_THROW(ValuedQuiver::simply_laced(2, {{0, 2}}), InputError);
  EXPECT_THROW(ValuedQuiver(cartan_of_type('A', 3), {{0, 1}}), InputError);
}

TEST(Quiver, ProjectiveDimensions) {
  auto a2 = ValuedQuiver::simply_laced(2, {{0, 1}});
  auto d = projective_data(a2);
  EXPECT_EQ(d.projectives[0], (RootVec{1, 1}));
  EXPECT_EQ(d.projectives[1], (RootVec{0, 1}));
  EXPECT_EQ(projective_data(linear_a3()).projectives[0], (RootVec{1, 1, 1}));
}

TEST(Quiver, ProjectivesCountPathsOnEveryOrientation) {
  for (auto label : {"A4", "D4", "D5", "E6"}) {
    for (const auto& q : all_orientations(cartan_of_type(label))) {
      auto d = projective_data(q);
      for (std::size_t i = 0; i < q.rank(); ++i)
        for (std::size_t j = 0; j < q.rank(); ++j) {
          EXPECT_EQ(d.projectives[i][j], count_paths(q, int(i), int(j)));
          EXPECT_EQ(d.injectives[i][j], count_paths(q, int(j), int(i)));
        }
    }
  }
}

TEST(Quiver, ValuedProjectivesFollowReflections) {
  // S_k^+ P_j = P'_j for j != k at a sink k, so the dimension vectors must agree
  // with s_k; this pins the valued convention.
  for (auto label : {"B2", "B3", "C3", "G2", "F4", "A4", "D4"}) {
    for (const auto& q : all_orientations(cartan_of_type(label))) {
      auto d = projective_data(q);
      for (std::size_t k = 0; k < q.rank(); ++k) {
        if (!q.is_sink(int(k))) continue;
        auto dr = projective_data(q.reflect_orientation(int(k)));
        for (std::size_t j = 0; j < q.rank(); ++j)
          if (j != k) {
            EXPECT_EQ(simple_reflection(int(k), d.projectives[j], q.cartan()), dr.projectives[j]) << label;
          }
      }
    }
  }
}

TEST(Quiver, EulerFormOnProjectives) {
  for (auto label : {"A3", "D4", "B3", "G2"}) {
    for (const auto& q : all_orientations(cartan_of_type(label))) {
      auto d = projective_data(q);
      const auto& eps = q.cartan().symmetrizers();
      for (std::size_t i = 0; i < q.rank(); ++i)
        for (std::size_t j = 0; j < q.rank(); ++j) {
          EXPECT_EQ(euler_form(d, d.projectives[i], RootVec::simple(q.rank(), int(j))), i == j ? eps[i] : 0);
          EXPECT_EQ(euler_form(d, RootVec::simple(q.rank(), int(j)), d.injectives[i]), i == j ? eps[i] : 0);
        }
    }
  }
}

TEST(Quiver, CoxeterMatrixA2) {
  auto d = projective_data(ValuedQuiver::simply_laced(2, {{0, 1}}));
  EXPECT_EQ(apply_matrix(d.coxeter, RootVec{1, 0}), (RootVec{0, 1}));
  EXPECT_EQ(apply_matrix(d.coxeter, d.projectives[0]), -d.injectives[0]);
}

TEST(Quiver, CoxeterIsProductOfReflectionsAlongSinkSequence) {
  for (auto label : {"A4", "D4", "B3", "C3", "G2", "F4", "E6"}) {
    for (const auto& q : all_orientations(cartan_of_type(label))) {
      auto d = projective_data(q);
      auto seq = q.admissible_sequence(true);
      for (std::size_t i = 0; i < q.rank(); ++i) {
        RootVec v = RootVec::simple(q.rank(), int(i));
        RootVec w = v;
        for (int k : seq) w = simple_reflection(k, w, q.cartan());
        EXPECT_EQ(apply_matrix(d.coxeter, v), w) << label;
      }
    }
  }
}

TEST(Quiver, AdmissibleSequences) {
  auto q = linear_a3();
  EXPECT_EQ(q.admissible_sequence(true), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(q.admissible_sequence(false), (std::vector<int>{0, 1, 2}));
  auto a1 = ValuedQuiver(cartan_of_type('A', 1), {});
  EXPECT_EQ(a1.admissible_sequence(true), (std::vector<int>{0}));
  EXPECT_EQ(a1.admissible_sequence(false), (std::vector<int>{0}));
}

TEST(Quiver, OrientationCounts) {
  EXPECT_EQ(all_orientations(cartan_of_type("A4")).size(), 8u);
  EXPECT_EQ(all_orientations(cartan_of_type("D4")).size(), 8u);
  EXPECT_EQ(all_orientations(cartan_of_type("E6")).size(), 32u);
}
