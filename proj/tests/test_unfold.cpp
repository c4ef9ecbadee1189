#include <algorithm>
#include <map>

#include <doctest.h>

#include "coxrep/unfold.hpp"
#include "gallery.hpp"
#include "test_util.hpp"

using namespace coxrep;

namespace {

std::vector<std::string> component_names(const CoxeterQuiver& q) {
  std::vector<std::string> out;
  for (const auto& c : unfolded_components(unfold(q))) out.push_back(c.type.name());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("unfolding of I2(5) is A4") {
  const auto q = gallery::orient(gallery::type_i2(5));
  const auto uq = unfold(q);
  CHECK(uq.vertices().size() == 4);
  CHECK(uq.arrows().size() == 3);
  CHECK(component_names(q) == std::vector<std::string>{"A4"});
  CHECK(uq.vertices()[0].name() == "5:0@1");
  CHECK(uq.index_of(SimpleObject::parse_key("5:2"), 2) == 3);
}

TEST_CASE("unfolding of a classical quiver is itself") {
  const auto q = gallery::orient(gallery::type_d(5), 5);
  const auto uq = unfold(q);
  CHECK(uq.vertices().size() == 5);
  CHECK(uq.arrows().size() == 4);
  CHECK(component_names(q) == std::vector<std::string>{"D5"});
  const auto classical = uq.to_classical();
  CHECK(classical.arrows().size() == 4);
}

TEST_CASE("golden table") {
  for (int n = 2; n <= 6; ++n) {
    const std::string d = n == 2 ? "A3" : "D" + std::to_string(n + 1);
    CHECK(component_names(gallery::orient(gallery::type_b(n))) ==
          sorted({"A" + std::to_string(2 * n - 1), d}));
  }
  CHECK(component_names(gallery::orient(gallery::type_f4())) == std::vector<std::string>{"E6", "E6"});
  CHECK(component_names(gallery::orient(gallery::type_g2())) == std::vector<std::string>{"A5", "A5"});
  CHECK(component_names(gallery::orient(gallery::type_h3())) == std::vector<std::string>{"D6"});
  CHECK(component_names(gallery::orient(gallery::type_h4())) == std::vector<std::string>{"E8"});
  for (int m = 4; m <= 12; ++m) {
    const auto a = "A" + std::to_string(m - 1);
    const auto expected = m % 2 == 0 ? std::vector<std::string>{a, a} : std::vector<std::string>{a};
    CHECK(component_names(gallery::orient(gallery::type_i2(m))) == expected);
  }
}

TEST_CASE("arrow counts per base arrow") {
  const auto q = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow 1 2 4\narrow 2 3 5\n");
  const auto uq = unfold(q);
  // Irr has 3 * 2 simples; label 4 gives 2(4-2) per TLJ_4 block, label 5 gives 5-2.
  CHECK(unfolded_arrow_count(q, 0) == 2 * 4);
  CHECK(unfolded_arrow_count(q, 1) == 3 * 3);
  std::map<int, std::size_t> seen;
  for (const auto& a : uq.arrows()) ++seen[a.provenance];
  CHECK(seen[0] == unfolded_arrow_count(q, 0));
  CHECK(seen[1] == unfolded_arrow_count(q, 1));
}

TEST_CASE("arrow criterion") {
  // (B,i) -> (C,j) iff C is a summand of Pi_{n-3} (x) B.
  const auto q = gallery::orient(gallery::type_i2(7));
  const auto uq = unfold(q);
  for (const auto& a : uq.arrows()) {
    const auto& s = uq.vertices()[a.source];
    const auto& t = uq.vertices()[a.target];
    const auto summands = tlj_fusion_rule(7, 4, s.simple.index_for(7));
    CHECK(std::find(summands.begin(), summands.end(), t.simple.index_for(7)) != summands.end());
    CHECK(s.vertex == 1);
    CHECK(t.vertex == 2);
  }
}

TEST_CASE("fold_dim") {
  const auto q = gallery::orient(gallery::type_i2(5));
  const auto uq = unfold(q);
  const std::vector<long> dims{1, 0, 2, 1};
  const auto v = fold_dim(uq, dims);
  CHECK(v.to_string() == "(1: [5:0] + 2[5:2], 2: [5:2])");
  CHECK_KIND(fold_dim(uq, std::vector<long>{1, 2}), ErrorKind::ShapeMismatch);
}

TEST_CASE("JSON round trip") {
  const auto q = gallery::orient(gallery::type_h3(), 1);
  const auto uq = unfold(q);
  CHECK(unfolded_from_json(to_json(uq)) == uq);
  auto broken = to_json(uq);
  broken["arrows"].erase(0);
  CHECK_KIND(unfolded_from_json(broken), ErrorKind::Parse);
}
