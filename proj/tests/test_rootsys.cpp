#include <doctest.h>

#include "coxrep/rootsys.hpp"
#include "coxrep/unfold.hpp"
#include "gallery.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace coxrep;

TEST_CASE("bilinear form of H3") {
  const RootSystem rs(gallery::orient(gallery::type_h3()));
  const LabelSet l{3, 5};
  CHECK(rs.form(1, 1) == FusionElem::integer(l, 2));
  CHECK(rs.form(1, 2) == -FusionElem::tlj_simple(l, 5, 2));
  CHECK(rs.form(2, 3) == -FusionElem::unit(l));
  CHECK(rs.form(1, 3).is_zero());
  CHECK(rs.bilinear_form(rs.simple_root(1), rs.simple_root(2)) == rs.form(1, 2));
}

TEST_CASE("reflections are involutions fixing nothing of their own root") {
  const RootSystem rs(gallery::orient(gallery::type_h4()));
  const auto e1 = rs.simple_root(1);
  CHECK(rs.reflect(1, e1) == -e1);
  const auto v = rs.reflect(2, rs.reflect(1, rs.simple_root(2)));
  CHECK(rs.reflect(1, rs.reflect(1, v)) == v);
  CHECK_KIND(rs.reflect(9, v), ErrorKind::UnknownVertex);
}

TEST_CASE("positive root counts") {
  for (const auto& g : gallery::dynkin_representatives(8, 12)) {
    const auto q = gallery::orient(g);
    const RootSystem rs(q);
    const auto t = classify_graph(q)[0].type;
    const char family = g.name[0];
    const int param = t.family == DynkinFamily::I2 ? t.parameter : t.vertex_count();
    const auto roots = rs.positive_roots();
    CHECK_MESSAGE(roots.roots.size() == oracle::root_count(family, param), g.name);
    CHECK(roots.closed);
    // The orbit is symmetric under negation, and every orbit element is a
    // unit multiple of a listed root.
    const auto orbit = rs.root_orbit().roots;
    std::size_t positive = 0;
    for (const auto& r : orbit) {
      if (!is_positive_vec(r)) continue;
      ++positive;
      bool covered = false;
      for (const auto& u : invertible_simples(rs.labels())) covered = covered || roots.contains(r.scaled(FusionElem::simple(u)));
      CHECK(covered);
    }
    CHECK(orbit.size() == 2 * positive);
  }
}

TEST_CASE("extended roots match the unfolded classical roots") {
  for (const auto& g : gallery::dynkin_representatives(6, 9)) {
    const auto q = gallery::orient(g);
    const auto uq = unfold(q);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& a : uq.arrows()) edges.push_back({a.source, a.target});
    const auto classical = oracle::classical_positive_roots(uq.vertices().size(), edges);
    const RootSystem rs(q);
    const auto ext = rs.extended_positive_roots();
    CHECK_MESSAGE(ext.roots.size() == classical.size(), g.name);
    // Folding every classical root lands in the extended set.
    for (const auto& r : classical) CHECK(ext.contains(fold_dim(uq, r)));
  }
}

TEST_CASE("even labels put unit multiples in the orbit") {
  // B2: s1 s2 s1 (e2) = [Pi_2] e2 and Pi_2 (x) Pi_2 = 1.
  const auto q = gallery::orient(gallery::type_i2(4));
  const RootSystem rs(q);
  const auto pi2 = FusionElem::tlj_simple({4}, 4, 2);
  CHECK(rs.reflect(1, rs.reflect(2, rs.reflect(1, rs.simple_root(2)))) == rs.simple_root(2).scaled(pi2));
  CHECK(invertible_simples({4}).size() == 2);
  CHECK(invertible_simples({3, 5}).size() == 1);
  CHECK(invertible_simples({4, 6}).size() == 4);
  CHECK(rs.root_orbit().roots.size() == 16);
  CHECK(rs.positive_roots().roots.size() == 4);
}

TEST_CASE("root set canonical order and membership") {
  const RootSystem rs(gallery::orient(gallery::type_i2(5)));
  const auto pos = rs.positive_roots();
  for (std::size_t k = 1; k < pos.roots.size(); ++k) CHECK(pos.roots[k - 1].serialize() < pos.roots[k].serialize());
  CHECK(pos.contains(rs.simple_root(1)));
  CHECK_FALSE(pos.contains(-rs.simple_root(1)));
}

TEST_CASE("budget") {
  // Affine A2 (a triangle) has infinitely many roots.
  const RootSystem rs(parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow 1 2\narrow 2 3\narrow 1 3\n"));
  try {
    (void)rs.root_orbit(50);
    FAIL("expected OrbitBudgetExceeded");
  } catch (const OrbitBudgetExceeded& e) {
    CHECK(e.kind() == ErrorKind::OrbitBudgetExceeded);
    CHECK_FALSE(e.partial().closed);
    CHECK(e.partial().roots.size() > 0);
  }
  CHECK_KIND(rs.positive_roots(20), ErrorKind::OrbitBudgetExceeded);
}

TEST_CASE("Coxeter element") {
  const auto q = gallery::orient(gallery::type_i2(5));
  const RootSystem rs(q);
  const auto ordering = admissible_sink_ordering(q);
  CHECK(rs.coxeter_order(ordering) == 5);
  CHECK(RootSystem(gallery::orient(gallery::type_a(4))).coxeter_order({1, 2, 3, 4}) == 5);
  CHECK(RootSystem(gallery::orient(gallery::type_h4())).coxeter_order({1, 2, 3, 4}) == 30);
  CHECK(RootSystem(gallery::orient(gallery::type_e(8))).coxeter_order({1, 2, 3, 4, 5, 6, 7, 8}) == 30);
  CHECK_KIND(rs.coxeter_apply({1, 1}, rs.simple_root(1)), ErrorKind::InvalidOrdering);
}

TEST_CASE("depositivization") {
  const auto q = gallery::orient(gallery::type_h3());
  const RootSystem rs(q);
  const auto ordering = admissible_sink_ordering(q);
  const auto h = rs.coxeter_order(ordering);
  for (const auto& r : rs.extended_positive_roots().roots) {
    const auto k = rs.depositivize_exponent(ordering, r, 100);
    CHECK(k >= 1);
    CHECK(k <= h);
  }
  CHECK_KIND(rs.depositivize_exponent(ordering, -rs.simple_root(1), 100), ErrorKind::NotPositive);
  CHECK_KIND(rs.depositivize_exponent(ordering, RootVector({3, 5}), 100), ErrorKind::NotPositive);
}

TEST_CASE("root vectors from other rings are rejected") {
  const RootSystem rs(gallery::orient(gallery::type_h3()));
  CHECK_KIND(rs.reflect(1, RootVector::basis({5}, 1)), ErrorKind::MismatchedQuiver);
  CHECK_KIND(rs.reflect(1, RootVector::basis({3, 5}, 7)), ErrorKind::MismatchedQuiver);
}
