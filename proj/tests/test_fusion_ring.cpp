#include <cmath>
#include <random>

#include <doctest.h>

#include "coxrep/fusion_ring.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace coxrep;

namespace {

FusionElem random_elem(const LabelSet& labels, std::mt19937& rng, int max_coeff = 3) {
  FusionElem x(labels);
  for (const auto& s : irr_enumerate(labels)) {
    const int c = static_cast<int>(rng() % (2 * max_coeff + 1)) - max_coeff;
    x.add_term(s, c);
  }
  return x;
}

}  // namespace

TEST_CASE("chebyshev recursion") {
  CHECK(chebyshev(0) == IntPolynomial{1});
  CHECK(chebyshev(1) == IntPolynomial{0, 1});
  CHECK(chebyshev(2) == IntPolynomial{-1, 0, 1});
  CHECK(chebyshev(3) == IntPolynomial{0, -2, 0, 1});
  CHECK(chebyshev(4) == IntPolynomial{1, 0, -3, 0, 1});
}

TEST_CASE("Delta_{n-1} kills the generator") {
  for (int n = 3; n <= 12; ++n) {
    const auto value = evaluate_at_generator(n, chebyshev(static_cast<unsigned>(n - 1)));
    for (const auto& c : value) CHECK(c == 0);
    // Delta_{n-2}(Pi_1) is Pi_{n-2}, not zero.
    const auto top = evaluate_at_generator(n, chebyshev(static_cast<unsigned>(n - 2)));
    CHECK(top.back() == 1);
  }
}

TEST_CASE("fusion rule agrees with the Clebsch-Gordan recursion") {
  for (int n = 3; n <= 12; ++n) {
    const auto table = oracle::tlj_table(n);
    for (int a = 0; a <= n - 2; ++a) {
      for (int b = 0; b <= n - 2; ++b) {
        std::vector<long> got(static_cast<std::size_t>(n - 1), 0);
        for (int c : tlj_fusion_rule(n, a, b)) ++got[static_cast<std::size_t>(c)];
        CHECK_MESSAGE(got == table[a][b], "n=" << n << " a=" << a << " b=" << b);
      }
    }
  }
}

TEST_CASE("simples of TLJ_n and its even part") {
  CHECK(tlj_simples(4).size() == 3);
  CHECK(tlj_simples(5).size() == 2);
  CHECK(tlj_simples(5)[1].a == 2);
  CHECK(tlj_simples(7).size() == 3);
  CHECK(irr_enumerate({4, 5}).size() == 6);
  CHECK(irr_enumerate({}).size() == 1);
  CHECK(irr_enumerate({}).front().is_unit());
  CHECK_KIND(SimpleIndex::make(5, 1), ErrorKind::InvalidSimple);
  CHECK_KIND(SimpleIndex::make(4, 3), ErrorKind::InvalidSimple);
  CHECK_KIND(make_label_set({2}), ErrorKind::InvalidLabel);
  CHECK(make_label_set({5, 3, 5}) == LabelSet{3, 5});
}

TEST_CASE("Fibonacci rule in the even part of TLJ_5") {
  const LabelSet l{5};
  const auto tau = FusionElem::tlj_simple(l, 5, 2);
  const auto square = tau * tau;
  CHECK(square == FusionElem::unit(l) + tau);
  CHECK(square.to_string() == "[5:0] + [5:2]");
}

TEST_CASE("TLJ_4 products") {
  const LabelSet l{4};
  const auto p1 = FusionElem::tlj_simple(l, 4, 1);
  const auto p2 = FusionElem::tlj_simple(l, 4, 2);
  CHECK(p1 * p1 == FusionElem::unit(l) + p2);
  CHECK(p2 * p2 == FusionElem::unit(l));
  CHECK(p1 * p2 == p1);
}

TEST_CASE("ring laws on random elements") {
  std::mt19937 rng(7);
  for (const LabelSet& labels : {LabelSet{3}, LabelSet{5}, LabelSet{4, 5}, LabelSet{6, 7}}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_elem(labels, rng);
      const auto y = random_elem(labels, rng);
      const auto z = random_elem(labels, rng);
      CHECK(x * y == y * x);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * FusionElem::unit(labels) == x);
      CHECK((x - x).is_zero());
    }
  }
}

TEST_CASE("pf_eval is a ring homomorphism") {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(pf_eval(FusionElem::tlj_simple({5}, 5, 2)) == doctest::Approx(phi));
  CHECK(pf_eval(FusionElem::tlj_simple({4}, 4, 1)) == doctest::Approx(std::sqrt(2.0)));
  std::mt19937 rng(11);
  const LabelSet labels{5, 8};
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_elem(labels, rng);
    const auto y = random_elem(labels, rng);
    CHECK(pf_eval(x * y) == doctest::Approx(pf_eval(x) * pf_eval(y)).epsilon(1e-9));
  }
}

TEST_CASE("positivity") {
  const LabelSet l{5};
  CHECK(is_positive_elem(FusionElem::unit(l)));
  CHECK_FALSE(is_positive_elem(FusionElem::zero(l)));
  CHECK_FALSE(is_positive_elem(FusionElem::unit(l) - FusionElem::tlj_simple(l, 5, 2)));
}

TEST_CASE("keys and JSON") {
  const auto s = SimpleObject::parse_key("4:1|5:2");
  CHECK(s.index_for(4) == 1);
  CHECK(s.index_for(5) == 2);
  CHECK(s.key() == "4:1|5:2");
  CHECK(s.labels() == LabelSet{4, 5});
  CHECK_KIND(SimpleObject::parse_key("5:2|4:1"), ErrorKind::Parse);
  CHECK_KIND(SimpleObject::parse_key("junk"), ErrorKind::Parse);

  FusionElem x({4, 5});
  x.add_term(s, mpz_class("123456789012345678901234567890"));
  x.add_term(SimpleObject::unit({4, 5}), -2);
  const auto j = to_json(x);
  CHECK(fusion_from_json(j, {4, 5}) == x);
  CHECK_KIND(fusion_from_json(j, {4, 6}), ErrorKind::MismatchedLabelSets);
  CHECK_KIND(fusion_from_json(nlohmann::json::array(), {4, 5}), ErrorKind::Parse);
  CHECK_KIND(FusionElem::unit({4}) + FusionElem::unit({5}), ErrorKind::MismatchedLabelSets);
}
