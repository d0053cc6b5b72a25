#include <doctest.h>

#include <array>
#include <string>

#include "rank2/errors.hpp"
#include "rank2/fusion_polytope.hpp"
#include "rank2/graded_fusion.hpp"

using namespace rank2;

namespace {

using Entries = std::map<Weight, QPolynomial, WeightDescending>;
constexpr std::array kTypes{LieType::A2, LieType::C2, LieType::G2};

QPolynomial poly(std::vector<Int> c) { return QPolynomial(std::move(c)); }

}  // namespace

TEST_CASE("QPolynomial normalization and rendering") {
  CHECK(poly({1, 0, 0}).coeffs() == std::vector<Int>{1});
  CHECK(poly({0, 0}).is_zero());
  QPolynomial p;
  p.add(2);
  p.add(0, 2);
  CHECK(p.coeffs() == std::vector<Int>{2, 0, 1});
  CHECK(p.at_one() == 3);
  CHECK(p.coeff(7) == 0);
  CHECK(to_string(p) == "2 + q^2");
  CHECK(to_string(poly({1, 2, 1})) == "1 + 2q + q^2");
  CHECK(poly({1, 1}).dominated_by(poly({1, 2})));
  CHECK_FALSE(poly({0, 0, 1}).dominated_by(poly({1, 1})));
}

TEST_CASE("graded decomposition examples") {
  const auto a = graded_decompose(LieType::A2, Weight{1, 0}, Weight{0, 1});
  CHECK(a.entries == Entries{{Weight{1, 1}, poly({1})}, {Weight{0, 0}, poly({0, 1})}});
  const auto c = graded_decompose(LieType::C2, Weight{1, 0}, Weight{1, 0});
  CHECK(c.entries == Entries{{Weight{2, 0}, poly({1})}, {Weight{0, 1}, poly({0, 1})}, {Weight{0, 0}, poly({0, 1})}});
  const auto g = graded_decompose(LieType::G2, Weight{1, 0}, Weight{1, 0});
  CHECK(g.entries == Entries{{Weight{2, 0}, poly({1})},
                             {Weight{1, 0}, poly({0, 1})},
                             {Weight{0, 1}, poly({0, 1})},
                             {Weight{0, 0}, poly({0, 0, 1})}});
  CHECK(dimension_check(a));
  CHECK(dimension_check(g));
  CHECK(dimension_check(graded_decompose(LieType::C2, Weight{0, 0}, Weight{0, 0})));
  // Cartan component prints first.
  CHECK(g.entries.begin()->first == Weight{2, 0});
}

TEST_CASE("q = 1 equals Klimyk; swap symmetry; Cartan component") {
  for (LieType t : kTypes) {
    for (Int m1 = 0; m1 <= 3; ++m1)
      for (Int m2 = 0; m2 <= 3; ++m2)
        for (Int n1 = 0; n1 <= 3; ++n1)
          for (Int n2 = 0; n2 <= 3; ++n2) {
            const Weight l{m1, m2}, u{n1, n2};
            if (!is_admissible(t, l, u)) continue;
            const auto d = graded_decompose(t, l, u);
            CHECK(at_q_equals_one(d) == klimyk_decompose(t, l, u));
            CHECK(d.entries == graded_decompose(t, u, l).entries);
            CHECK(d.entries.at(l + u) == poly({1}));
            CHECK(dimension_check(d));
            for (const auto& [nu, p] : d.entries) CHECK_FALSE(p.is_zero());
          }
  }
}

TEST_CASE("G2 outside the graded domain is rejected") {
  CHECK_THROWS_AS(graded_decompose(LieType::G2, Weight{1, 1}, Weight{0, 1}), HypothesisViolation);
}

TEST_CASE("Schur positivity examples") {
  CHECK(schur_positivity_check(LieType::A2, Weight{2, 0}, Weight{0, 0}, Weight{1, 0}, Weight{1, 0}));
  CHECK(schur_positivity_check(LieType::C2, Weight{2, 1}, Weight{0, 0}, Weight{1, 1}, Weight{1, 0}));
  for (LieType t : kTypes) CHECK(schur_positivity_check(t, Weight{2, 0}, Weight{1, 0}, Weight{2, 0}, Weight{1, 0}));

  const auto cmp = schur_compare(LieType::A2, Weight{2, 0}, Weight{0, 0}, Weight{1, 0}, Weight{1, 0});
  REQUIRE(cmp.rows.size() == 2);
  CHECK(cmp.rows[0].nu == Weight{2, 0});
  CHECK(cmp.rows[1].lhs == 0);
  CHECK(cmp.rows[1].rhs == 1);
}

TEST_CASE("Schur hypothesis failures name the reason") {
  // Reversed comparison: the min-pairing hypothesis fails at alpha1.
  const auto why = schur_hypothesis_failure(LieType::A2, Weight{1, 0}, Weight{1, 0}, Weight{2, 0}, Weight{0, 0});
  REQUIRE(why);
  CHECK(why->find("(1,0)") != std::string::npos);
  CHECK_THROWS_AS(schur_compare(LieType::A2, Weight{1, 0}, Weight{1, 0}, Weight{2, 0}, Weight{0, 0}),
                  HypothesisViolation);
  CHECK(schur_hypothesis_failure(LieType::A2, Weight{1, 0}, Weight{0, 0}, Weight{0, 0}, Weight{0, 1}));
  CHECK(schur_hypothesis_failure(LieType::G2, Weight{0, 0}, Weight{0, 1}, Weight{0, 0}, Weight{0, 1}));
}

TEST_CASE("graded Schur domination is exploratory") {
  CHECK_FALSE(graded_schur_domination(LieType::G2, Weight{1, 1}, Weight{0, 1}, Weight{1, 1}, Weight{0, 1}));
  const auto same = graded_schur_domination(LieType::C2, Weight{1, 1}, Weight{0, 1}, Weight{1, 1}, Weight{0, 1});
  REQUIRE(same);
  CHECK(*same);
}
