#pragma once

// Small named quivers and tilting modules used by tests, the acceptance
// binary and the command line.

#include <utility>
#include <vector>

#include "clustercat/rep.hpp"

namespace clustercat::samples {

struct TiltingSample {
  QuiverPtr quiver;
  std::vector<Representation> modules;
};

/// 1 -> 2 -> 3.
inline QuiverPtr linear_a3() { return make_quiver(ValuedQuiver::simply_laced(3, {{0, 1}, {1, 2}})); }

/// T = E_1 + P_1 + P_3 over 1 -> 2 -> 3.
inline TiltingSample linear_a3_tilting() {
  auto q = linear_a3();
  return {q, {build_simple(q, 0), build_projective(q, 0), build_projective(q, 2)}};
}

/// Four-subspace star with centre 1 and arrows 1 -> 2, 3, 4, 5 (affine D4).
inline QuiverPtr star() {
  CartanData c({{2, -1, -1, -1, -1}, {-1, 2, 0, 0, 0}, {-1, 0, 2, 0, 0}, {-1, 0, 0, 2, 0}, {-1, 0, 0, 0, 2}});
  return make_quiver(ValuedQuiver(c, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
}

/// Regular simple with composition factors E_1, E_4, E_5 over the star.
inline Representation star_regular_simple(const QuiverPtr& q) {
  Representation r{q, RootVec{1, 0, 0, 1, 1}, {}};
  r.maps = {Matrix(0, 1), Matrix(0, 1), Matrix::identity(1), Matrix::identity(1)};
  return r;
}

/// T = R + tau^-1 P_2 + tau^-1 P_3 + P_4 + P_5 over the star.
inline TiltingSample star_tilting() {
  auto q = star();
  auto t2 = coxeter_translate(build_projective(q, 1), -1);
  auto t3 = coxeter_translate(build_projective(q, 2), -1);
  if (!t2 || !t3) throw InvariantViolation("tau^-1 of a projective vanished");
  return {q, {star_regular_simple(q), *t2, *t3, build_projective(q, 3), build_projective(q, 4)}};
}

/// 1 -> 2 -> 3 -> 4 with 5 -> 3.
inline QuiverPtr five_vertex() {
  return make_quiver(ValuedQuiver::simply_laced(5, {{0, 1}, {1, 2}, {2, 3}, {4, 2}}));
}

}  // namespace clustercat::samples
