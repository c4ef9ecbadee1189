// The OpenMP kernels must agree exactly with the serial versions.

#include <doctest.h>

#include "coxrep/reference.hpp"
#include "gallery.hpp"

using namespace coxrep;

namespace {

std::vector<CoxeterQuiver> sample() {
  std::vector<CoxeterQuiver> out;
  for (const auto& g : gallery::dynkin_representatives(5, 9)) out.push_back(gallery::orient(g, 5));
  out.push_back(gallery::orient(gallery::type_e(6), 9));
  out.push_back(parse_quiver("vertex 1\nvertex 2\nvertex 3\nvertex 4\narrow 1 2 5\narrow 3 4 8\narrow 1 3\n"));
  return out;
}

}  // namespace

TEST_CASE("unfold") {
  for (const auto& q : sample()) CHECK(unfold(q) == reference::unfold(q));
}

TEST_CASE("root orbit") {
  for (const auto& q : sample()) {
    // Orbits of infinite type are cut at a budget where the two traversal
    // orders legitimately differ.
    if (!is_finite_type(q)) continue;
    const RootSystem rs(q);
    const auto fast = rs.root_orbit();
    const auto slow = reference::root_orbit(rs);
    CHECK(fast.roots == slow.roots);
    CHECK(rs.positive_roots().roots == reference::positive_roots(rs).roots);
  }
}

TEST_CASE("indecomposables") {
  for (const auto& q : {gallery::orient(gallery::type_h3(), 1), gallery::orient(gallery::type_b(4), 6),
                        gallery::orient(gallery::type_i2(8), 0)}) {
    CHECK(enumerate_indecomposables(q) == reference::enumerate_indecomposables(q));
  }
}

TEST_CASE("paths") {
  for (const auto& q : sample()) {
    for (std::size_t len = 0; len <= 4; ++len) CHECK(enumerate_paths(q, len) == reference::enumerate_paths(q, len));
  }
}
