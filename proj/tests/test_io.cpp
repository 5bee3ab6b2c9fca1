#include <gtest/gtest.h>

#include <filesystem>

#include "clustercat/io.hpp"

using namespace clustercat;

TEST(Io, ParsesLinearA3) {
  auto q = parse_quiver("1 -> 2\n2 -> 3\n");
  EXPECT_EQ(q, ValuedQuiver::simply_laced(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(q.cartan().type_label(), "A3");
}

TEST(Io, ParsesValuedG2) {
  auto q = parse_quiver("# G2\ntype G2 rank 2\n1 -> 2 [1 3]\n");
  EXPECT_EQ(q.cartan(), cartan_of_type("G2"));
  EXPECT_EQ(q.arrows().size(), 1u);
}

TEST(Io, Errors) {
  try {
    parse_quiver("1 -> 2\n2 -> 1\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("cycle"), std::string::npos);
  }
  EXPECT_THROW(parse_quiver("1 => 2\n"), InputError);
  EXPECT_THROW(parse_quiver("1 -> x\n"), InputError);
  EXPECT_THROW(parse_quiver("1 -> 2 [1]\n"), InputError);
  EXPECT_THROW(parse_quiver("1 -> 2\n1 -> 3\n1 -> 4\n1 -> 5\n"), InputError);  // affine
  EXPECT_THROW(parse_quiver("type A2 rank 2\n1 -> 2\n2 -> 3\n"), InputError);
  EXPECT_THROW(parse_quiver("type A3 rank 2\n1 -> 2\n"), InputError);
  EXPECT_THROW(parse_quiver(""), InputError);
  EXPECT_THROW(parse_quiver("1 -> 2\n2 -> 3\n3 -> 1\n"), InputError);
  EXPECT_NO_THROW(parse_quiver("1 -> 2\n1 -> 3\n1 -> 4\n1 -> 5\n", {false}));
}

TEST(Io, RoundTripAndHash) {
  for (auto label : {"A1", "A3", "B3", "C3", "D4", "E6", "F4", "G2"})
    for (auto& q : all_orientations(cartan_of_type(label))) {
      auto text = print_quiver(q);
      EXPECT_EQ(parse_quiver(text), q) << text;
      EXPECT_EQ(quiver_hash(parse_quiver(text)), quiver_hash(q));
      EXPECT_EQ(quiver_hash(q).size(), 16u);
    }
  EXPECT_NE(quiver_hash(parse_quiver("1 -> 2\n")), quiver_hash(parse_quiver("2 -> 1\n")));
  EXPECT_EQ(parse_quiver("type A1 rank 1\n").rank(), 1u);
}

TEST(Io, DotOutput) {
  GabrielQuiver cycle;
  cycle.vertices = 3;
  cycle.arrows = {{{0, 1}, 1}, {{1, 2}, 1}, {{2, 0}, 1}};
  EXPECT_EQ(dot_gabriel(cycle, "lambda"),
            "digraph lambda {\n  1;\n  2;\n  3;\n  1 -> 2;\n  2 -> 3;\n  3 -> 1;\n}\n");
  EXPECT_EQ(dot_gabriel(GabrielQuiver{}, "empty"), "digraph empty {\n}\n");

  ClusterCategory c(make_quiver(parse_quiver("1 -> 2\n")));
  auto sets = enumerate_tilting_sets(c);
  std::string ex = dot_exchange(c, sets);
  EXPECT_EQ(std::count(ex.begin(), ex.end(), '\n'), 1 + 5 + 5 + 1);
  EXPECT_EQ(ex, dot_exchange(c, enumerate_tilting_sets(c)));
  EXPECT_NE(dot_compatibility(c).find("graph compatibility {"), std::string::npos);
  EXPECT_NE(dot_quiver(parse_quiver("1 -> 2 [1 3]\n")).find("label=\"1,3\""), std::string::npos);
}

TEST(Io, CatalogCache) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("clustercat-cache-test-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  auto q = make_quiver(standard_orientation(cartan_of_type("D4")));
  auto first = cached_catalog(q, dir);
  EXPECT_FALSE(first.from_cache);
  EXPECT_TRUE(fs::exists(dir / (quiver_hash(*q) + ".json")));
  auto second = cached_catalog(q, dir);
  EXPECT_TRUE(second.from_cache);
  EXPECT_EQ(first.keys, second.keys);
  EXPECT_EQ(first.tau, second.tau);
  {
    std::ofstream(dir / (quiver_hash(*q) + ".json")) << "{ broken";
  }
  EXPECT_FALSE(cached_catalog(q, dir).from_cache);
  std::size_t files = 0;
  for (auto& e : fs::directory_iterator(dir)) files += e.is_regular_file();
  EXPECT_EQ(files, 1u);
  fs::remove_all(dir);
}
