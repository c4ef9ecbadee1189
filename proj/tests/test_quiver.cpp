#include <doctest.h>

#include "coxrep/quiver.hpp"
#include "gallery.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace coxrep;

TEST_CASE("validation") {
  CHECK_KIND(parse_quiver("vertex 1\nvertex 2\narrow 1 2\narrow 2 1\n"), ErrorKind::CyclicQuiver);
  CHECK_KIND(parse_quiver("vertex 1\narrow 1 1\n"), ErrorKind::LoopArrow);
  CHECK_KIND(parse_quiver("vertex 1\nvertex 2\narrow 1 2 2\n"), ErrorKind::InvalidLabel);
  CHECK_KIND(parse_quiver("vertex 1\narrow 1 2\n"), ErrorKind::UnknownVertex);
  CHECK_KIND(parse_quiver("vertex 1\nvertex 1\n"), ErrorKind::Parse);
  CHECK_KIND(parse_quiver("vertx 1\n"), ErrorKind::Parse);
  CHECK_KIND(parse_quiver("{\"vertices\": [1, 2], \"arrows\": [{\"source\": 1}]}"), ErrorKind::Parse);
}

TEST_CASE("text and JSON round trip") {
  const auto q = parse_quiver("# H3\nvertex 3\nvertex 1\nvertex 2\narrow 1 2 5\narrow 3 2\n");
  CHECK(q.vertices() == std::vector<int>{1, 2, 3});
  CHECK(q.arrows().size() == 2);
  CHECK(q.arrows()[0].label == 5);
  CHECK(q.arrows()[1].label == 3);
  CHECK(parse_quiver(to_text(q)) == q);
  CHECK(quiver_from_json(to_json(q)) == q);
  CHECK(parse_quiver(to_json(q).dump()) == q);
  CHECK(q.is_sink(2));
  CHECK(q.is_source(1));
  CHECK_FALSE(q.is_source(2));
}

TEST_CASE("reflection at a vertex") {
  const auto q = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow 1 2\narrow 3 2 4\n");
  const auto r = reverse_at(q, 2);
  CHECK(r.is_source(2));
  CHECK(r.arrow(1).label == 4);
  CHECK(reverse_at(r, 2) == q);
}

TEST_CASE("admissible sink ordering") {
  const auto q = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow 1 2\narrow 2 3\n");
  CHECK(admissible_sink_ordering(q) == std::vector<int>{3, 2, 1});
  auto cur = q;
  for (int v : admissible_sink_ordering(q)) {
    CHECK(cur.is_sink(v));
    cur = reverse_at(cur, v);
  }
  CHECK(cur == q);
}

TEST_CASE("type names") {
  CHECK(DynkinType::make(DynkinFamily::I2, 4).name() == "B2");
  CHECK(DynkinType::make(DynkinFamily::I2, 6).name() == "G2");
  CHECK(DynkinType::make(DynkinFamily::I2, 3).name() == "A2");
  CHECK(DynkinType::make(DynkinFamily::D, 3).name() == "A3");
  CHECK(DynkinType::make(DynkinFamily::I2, 7).name() == "I2(7)");
  CHECK(DynkinType::parse("C4") == DynkinType::make(DynkinFamily::B, 4));
  CHECK(DynkinType::parse("E8").vertex_count() == 8);
  CHECK(DynkinType::parse("I2(9)").vertex_count() == 2);
  CHECK_KIND(DynkinType::parse("Q7"), ErrorKind::Parse);
}

TEST_CASE("classification of the Dynkin gallery in every orientation") {
  for (const auto& g : gallery::dynkin_representatives(8, 12)) {
    for (unsigned mask = 0; mask < (1u << g.edges.size()); ++mask) {
      const auto q = gallery::orient(g, mask);
      const auto types = classify_graph(q);
      REQUIRE(types.size() == 1);
      CHECK_MESSAGE(types[0].type.name() == g.name, g.name << " mask " << mask);
      CHECK(is_finite_type(q));
    }
  }
}

TEST_CASE("non-Dynkin graphs") {
  // Double arrow, triangle, affine D4, E6 with a long arm, label on the wrong edge.
  const char* cases[] = {
      "vertex 1\nvertex 2\narrow 1 2\narrow 1 2\n",
      "vertex 1\nvertex 2\nvertex 3\narrow 1 2\narrow 2 3\narrow 1 3\n",
      "vertex 1\nvertex 2\nvertex 3\nvertex 4\nvertex 5\narrow 1 2\narrow 3 2\narrow 4 2\narrow 5 2\n",
      "vertex 1\nvertex 2\nvertex 3\narrow 1 2 4\narrow 2 3 4\n",
      "vertex 1\nvertex 2\nvertex 3\narrow 1 2 5\narrow 2 3 5\n",
      "vertex 1\nvertex 2\nvertex 3\nvertex 4\nvertex 5\narrow 1 2\narrow 2 3 5\narrow 3 4\narrow 4 5\n",
      "vertex 1\nvertex 2\nvertex 3\nvertex 4\narrow 1 2 6\narrow 2 3\narrow 3 4\n",
  };
  for (const char* text : cases) {
    const auto q = parse_quiver(text);
    CHECK_MESSAGE(!is_finite_type(q), text);
  }
}

TEST_CASE("components are listed by smallest vertex") {
  const auto q = parse_quiver("vertex 1\nvertex 2\nvertex 3\nvertex 4\nvertex 5\narrow 5 2 5\narrow 1 3\narrow 3 4\n");
  const auto types = classify_graph(q);
  REQUIRE(types.size() == 2);
  CHECK(types[0].type.name() == "A3");
  CHECK(types[0].vertices == std::vector<int>{1, 3, 4});
  CHECK(types[1].type.name() == "I2(5)");
}

TEST_CASE("finite type agrees with positive definiteness on small labelled graphs") {
  // Every labelled graph on 4 vertices with at most 3 edges and labels 3..7.
  const std::vector<std::pair<int, int>> pairs{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  std::size_t checked = 0;
  for (unsigned choose = 0; choose < 64; ++choose) {
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < 6; ++k) {
      if ((choose >> k) & 1u) chosen.push_back(k);
    }
    if (chosen.size() > 3) continue;
    std::size_t combos = 1;
    for (std::size_t k = 0; k < chosen.size(); ++k) combos *= 5;
    for (std::size_t code = 0; code < combos; ++code) {
      std::vector<LabelledEdge> edges;
      std::vector<std::pair<std::pair<std::size_t, std::size_t>, int>> numeric;
      auto rest = code;
      for (std::size_t k : chosen) {
        const int label = 3 + static_cast<int>(rest % 5);
        rest /= 5;
        edges.push_back({pairs[k].first, pairs[k].second, label});
        numeric.push_back({{static_cast<std::size_t>(pairs[k].first - 1), static_cast<std::size_t>(pairs[k].second - 1)}, label});
      }
      bool finite = true;
      for (const auto& c : classify_labelled_graph({1, 2, 3, 4}, edges)) finite = finite && c.type.is_dynkin();
      CHECK(finite == oracle::coxeter_form_positive_definite(4, numeric));
      ++checked;
    }
  }
  CHECK(checked == 1 + 6 * 5 + 15 * 25 + 20 * 125);
}
