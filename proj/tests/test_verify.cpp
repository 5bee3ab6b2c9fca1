#include <gtest/gtest.h>

#include "clustercat/verify.hpp"

using namespace clustercat;

namespace {

void expect_all_ok(const std::vector<VerificationReport>& reports) {
  EXPECT_FALSE(reports.empty());
  for (const auto& r : reports) {
    EXPECT_TRUE(r.ok()) << r.name << ": " << (r.failures.empty() ? "" : r.failures[0].object);
  }
}

}  // namespace

TEST(Verify, AllSuitesPassOnA3) {
  for (const auto& q : all_orientations(cartan_of_type("A3"))) expect_all_ok(verify_all(q));
}

TEST(Verify, ValuedTypesRunLabelLevelSuites) {
  for (auto label : {"B2", "G2"}) {
    auto reports = verify_all(standard_orientation(cartan_of_type(label)));
    expect_all_ok(reports);
    for (const auto& r : reports) EXPECT_NE(r.name, "modules");
  }
}

TEST(Verify, RankCapSkipsEnumeration) {
  VerifyOptions opt;
  opt.rank_cap = 2;
  auto reports = verify_all(standard_orientation(cartan_of_type("A3")), opt);
  EXPECT_EQ(reports.back().name.rfind("tilting sets skipped", 0), 0u);
}

TEST(Verify, RejectsNonDynkin) {
  auto q = ValuedQuiver::simply_laced(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_THROW(verify_all(q), InputError);
}
