#include <algorithm>

#include <doctest.h>

#include "coxrep/reps.hpp"
#include "gallery.hpp"
#include "test_util.hpp"

using namespace coxrep;

namespace {

std::vector<std::string> summand_dims(const Decomposition& d) {
  std::vector<std::string> out;
  for (const auto& s : d.summands) out.push_back(dim_vector(s).serialize());
  return out;
}

}  // namespace

TEST_CASE("simple representation") {
  const auto q = gallery::orient(gallery::type_i2(5));
  const auto s = simple_rep(q, 1, SimpleObject::parse_key("5:2"));
  CHECK(s.total_dim() == 1);
  CHECK(dim_vector(s).to_string() == "(1: [5:2])");
  CHECK(end_dim(s) == 1);
  CHECK_KIND(simple_rep(q, 1, SimpleObject::parse_key("5:1")), ErrorKind::InvalidSimple);
}

TEST_CASE("reflection functors on A2") {
  const auto q = parse_quiver("vertex 1\nvertex 2\narrow 1 2\n");
  const auto s1 = simple_rep(q, 1, SimpleObject::unit({3}));
  // S(1) is simple projective-injective at a source; R- kills it.
  const auto killed = reflect_minus(1, s1);
  CHECK(killed.total_dim() == 0);
  CHECK_KIND(reflect_plus(1, s1), ErrorKind::NotASink);
  CHECK_KIND(reflect_minus(2, s1), ErrorKind::NotASource);
  // R- at the source 1 turns S(2) into 1 -> 1 over 2 -> 1, and R+ at the
  // new sink 1 brings S(2) back.
  const auto s2 = simple_rep(q, 2, SimpleObject::unit({3}));
  const auto p = reflect_minus(1, s2);
  CHECK(p.base() == reverse_at(q, 1));
  CHECK(dim_vector(p).to_string() == "(1: [3:0], 2: [3:0])");
  CHECK(end_dim(p) == 1);
  const auto back = reflect_plus(1, p);
  CHECK(back.base() == q);
  CHECK(dim_vector(back) == dim_vector(s2));
}

TEST_CASE("indecomposables of I2(5)") {
  const auto q = gallery::orient(gallery::type_i2(5));
  const auto reps = enumerate_indecomposables(q);
  CHECK(reps.size() == 10);
  const RootSystem rs(q);
  const auto roots = rs.extended_positive_roots().roots;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    CHECK(dim_vector(reps[k]) == roots[k]);
    CHECK(end_dim(reps[k]) == 1);
    CHECK(reps[k].base() == q);
  }
}

TEST_CASE("indecomposable_for checks its input") {
  const auto q = gallery::orient(gallery::type_h3(), 2);
  const RootSystem rs(q);
  auto not_root = rs.simple_root(1) + rs.simple_root(3);
  CHECK_KIND(indecomposable_for(q, not_root), ErrorKind::NotAnExtendedRoot);
  CHECK_KIND(indecomposable_for(q, -rs.simple_root(1)), ErrorKind::NotAnExtendedRoot);
  const auto double_arrow = parse_quiver("vertex 1\nvertex 2\narrow 1 2\narrow 1 2\n");
  CHECK_KIND(indecomposable_for(double_arrow, RootVector::basis({3}, 1)), ErrorKind::NotFiniteType);
  for (const auto& r : rs.extended_positive_roots().roots) {
    const auto v = indecomposable_for(q, r);
    CHECK(dim_vector(v) == r);
  }
}

TEST_CASE("Hom spaces") {
  const auto q = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow 1 2\narrow 2 3\n");
  const auto reps = enumerate_indecomposables(q);
  CHECK(reps.size() == 6);
  std::size_t nonzero = 0;
  for (const auto& v : reps) {
    for (const auto& w : reps) {
      const auto h = hom_dim(v, w);
      CHECK(h <= 1);
      CHECK(hom_basis(v, w).size() == h);
      nonzero += h;
    }
  }
  // Hom(M[a,b], M[c,d]) is one dimensional iff c <= a <= d <= b for the
  // interval modules of 1 -> 2 -> 3, which happens for 15 ordered pairs.
  CHECK(nonzero == 15);
}

TEST_CASE("decomposition recovers the summands") {
  const auto q = gallery::orient(gallery::type_h3(), 1);
  const auto reps = enumerate_indecomposables(q);
  REQUIRE(reps.size() == 30);
  const auto& a = reps[5];
  const auto& b = reps[17];
  auto sum = direct_sum(direct_sum(a, b), a);
  const auto d = decompose(sum);
  std::vector<std::string> expected{dim_vector(a).serialize(), dim_vector(a).serialize(), dim_vector(b).serialize()};
  std::sort(expected.begin(), expected.end());
  CHECK(summand_dims(d) == expected);
  CHECK(d.seed == kDefaultDecomposeSeed);
  // Seeds only change the search path.
  CHECK(summand_dims(decompose(sum, 99)) == expected);
  CHECK(decompose(a).summands.size() == 1);
  CHECK(decompose(UnfoldedRep::zero(a.quiver())).summands.empty());
}

TEST_CASE("reflection word reproduces the indecomposable") {
  const auto q = gallery::orient(gallery::type_b(3), 3);
  const RootSystem rs(q);
  for (const auto& r : rs.extended_positive_roots().roots) {
    const auto built = construct_indecomposable(q, r);
    CHECK(built.word.size() == built.prefix_length + built.coxeter_power * q.vertex_count());
    for (const auto& step : built.word) CHECK(step.sign == ReflectionSign::Minus);
    CHECK(dim_vector(built.rep) == r);
  }
}

TEST_CASE("JSON round trip") {
  const auto q = gallery::orient(gallery::type_i2(7), 1);
  for (const auto& v : enumerate_indecomposables(q)) CHECK(rep_from_json(to_json(v)) == v);
  auto j = to_json(enumerate_indecomposables(q).back());
  j["dims"]["nonsense"] = 1;
  CHECK_KIND(rep_from_json(j), ErrorKind::Parse);
  CHECK_KIND(rep_from_json(nlohmann::json::object()), ErrorKind::Parse);
}

TEST_CASE("shape checks") {
  const auto uq = unfold(gallery::orient(gallery::type_a(2)));
  CHECK_KIND(UnfoldedRep(uq, {1, 1}, {RationalMatrix(2, 1)}), ErrorKind::ShapeMismatch);
  CHECK_KIND(UnfoldedRep(uq, {1}, {RationalMatrix(1, 1)}), ErrorKind::ShapeMismatch);
  CHECK_KIND(UnfoldedRep(uq, {1, -1}, {RationalMatrix(1, 1)}), ErrorKind::ShapeMismatch);
}
