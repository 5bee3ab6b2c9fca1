#include <gtest/gtest.h>

#include "clustercat/derived.hpp"

using namespace clustercat;

namespace {

QuiverPtr quiver_of(const char* label) { return make_quiver(standard_orientation(cartan_of_type(label))); }

}  // namespace

TEST(Derived, TauOnProjectivesAndInjectives) {
  auto q = make_quiver(ValuedQuiver::simply_laced(2, {{0, 1}}));
  DerivedModel d(q);
  EXPECT_EQ(d.tau(d.projective(0)), d.injective(0, -1));
  EXPECT_EQ(d.tau_inverse(d.injective(1)), d.projective(1, 1));
  // F P_1 = tau^-1 P_1 [1]; P_1 = I_2 is injective, so F P_1 = P_2[2].
  EXPECT_EQ(d.apply(d.projective(0), Auto::F), d.projective(1, 2));
}

TEST(Derived, FAndFInverseAreInverse) {
  for (auto label : {"A1", "A3", "D4", "E6"}) {
    DerivedModel d(quiver_of(label));
    for (std::size_t i = 0; i < d.catalog().size(); ++i)
      for (int s = -2; s <= 2; ++s) {
        auto x = d.module(i, s);
        EXPECT_EQ(d.apply(d.apply(x, Auto::F), Auto::F_inverse), x);
        EXPECT_EQ(d.apply(d.apply(x, Auto::tau), Auto::tau_inverse), x);
        EXPECT_EQ(d.F_power(d.F_power(x, 3), -3), x);
      }
  }
}

TEST(Derived, HomVanishesOutsideTwoDegrees) {
  DerivedModel d(quiver_of("A3"));
  for (std::size_t i = 0; i < d.catalog().size(); ++i)
    for (std::size_t j = 0; j < d.catalog().size(); ++j)
      for (int s : {-1, 2, 3}) EXPECT_EQ(d.hom(d.module(i), d.module(j, s)).dim, 0u);
}

TEST(Derived, SerreDuality) {
  // dim Hom(X, Y[1]) = dim Hom(Y, tau X) for all X, Y in the catalog.
  for (auto label : {"A4", "D4", "D5"}) {
    for (auto& qv : all_orientations(cartan_of_type(label))) {
      DerivedModel d(make_quiver(qv));
      for (std::size_t i = 0; i < d.catalog().size(); ++i)
        for (std::size_t j = 0; j < d.catalog().size(); ++j) {
          auto x = d.module(i), y = d.module(j);
          EXPECT_EQ(d.hom(x, d.apply(y, Auto::shift)).dim, d.hom(y, d.tau(x)).dim);
        }
    }
  }
}

TEST(Derived, K0Class) {
  DerivedModel d(quiver_of("A2"));
  EXPECT_EQ(k0_class(d.module(0, 1)), -d.module(0).key);
  EXPECT_EQ(k0_class(d.module(0, 2)), d.module(0).key);
}
