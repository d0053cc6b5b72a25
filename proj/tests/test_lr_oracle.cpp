#include <doctest.h>

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rank2/errors.hpp"
#include "rank2/fusion_polytope.hpp"
#include "rank2/lr_oracle.hpp"

using namespace rank2;

namespace {

constexpr std::array kTypes{LieType::A2, LieType::C2, LieType::G2};
using Entries = std::map<Weight, Int, WeightDescending>;

// Product character, then repeatedly peel off the highest remaining
// dominant weight nu with its multiplicity times the character of V(nu).
Entries peel_decompose(LieType t, const Weight& l, const Weight& u) {
  std::map<Weight, Int> ch;
  const auto a = weight_multiplicities(t, l);
  const auto b = weight_multiplicities(t, u);
  for (const auto& [x, mx] : a)
    for (const auto& [y, my] : b) ch[x + y] += mx * my;
  Entries out;
  for (;;) {
    std::optional<Weight> top;
    for (const auto& [w, m] : ch) {
      // Height in the simple-root basis decides "highest" among dominant weights.
      if (m == 0 || !is_dominant(w)) continue;
      if (!top) {
        top = w;
        continue;
      }
      const auto dw = weight_to_root(t, w - *top);
      if (dw && (*dw)[0] >= 0 && (*dw)[1] >= 0) top = w;
    }
    if (!top) break;
    const Int m = ch[*top];
    out[*top] = m;
    for (const auto& [w, k] : weight_multiplicities(t, *top)) ch[w] -= m * k;
  }
  for (const auto& [w, m] : ch) REQUIRE(m == 0);
  return out;
}

std::vector<std::vector<Int>> rows(const std::vector<LatticePoint>& pts) {
  std::vector<std::vector<Int>> out;
  for (const auto& p : pts) out.emplace_back(p.data(), p.data() + p.size());
  return out;
}

}  // namespace

TEST_CASE("Klimyk examples") {
  CHECK(klimyk_decompose(LieType::A2, Weight{1, 0}, Weight{1, 0}).entries == Entries{{Weight{2, 0}, 1}, {Weight{0, 1}, 1}});
  CHECK(klimyk_decompose(LieType::G2, Weight{1, 0}, Weight{1, 0}).entries ==
        Entries{{Weight{2, 0}, 1}, {Weight{0, 1}, 1}, {Weight{1, 0}, 1}, {Weight{0, 0}, 1}});
  for (LieType t : kTypes) {
    CHECK(klimyk_decompose(t, Weight{3, 2}, Weight{0, 0}).entries == Entries{{Weight{3, 2}, 1}});
  }
  CHECK_THROWS_AS(klimyk_decompose(LieType::C2, Weight{0, -1}, Weight{1, 0}), HypothesisViolation);
}

TEST_CASE("Klimyk agrees with character peeling and is symmetric") {
  for (LieType t : kTypes) {
    for (Int m1 = 0; m1 <= 3; ++m1)
      for (Int m2 = 0; m2 <= 3; ++m2)
        for (Int n1 = 0; n1 <= 2; ++n1)
          for (Int n2 = 0; n2 <= 2; ++n2) {
            const Weight l{m1, m2}, u{n1, n2};
            const auto k = klimyk_decompose(t, l, u);
            CHECK(k.entries == peel_decompose(t, l, u));
            CHECK(k == klimyk_decompose(t, u, l));
            Int dims = 0;
            for (const auto& [nu, m] : k.entries) {
              CHECK(m >= 1);
              dims += m * weyl_dim(t, nu);
            }
            CHECK(dims == weyl_dim(t, l) * weyl_dim(t, u));
          }
  }
}

TEST_CASE("T-model examples") {
  CHECK(rows(enumerate_T_A(Weight{0, 0}, Weight{0, 0})) == std::vector<std::vector<Int>>{{0, 0, 0}});
  CHECK(enumerate_T_A(Weight{1, 0}, Weight{0, 1}).size() == 2);
  CHECK(rows(enumerate_T_C(Weight{0, 0}, Weight{0, 0})) == std::vector<std::vector<Int>>{{0, 0, 0, 0}});
  CHECK(enumerate_T_C(Weight{1, 0}, Weight{1, 0}).size() == 3);
  CHECK(rows(enumerate_T_G(Weight{0, 0}, Weight{0, 0})) == std::vector<std::vector<Int>>{{0, 0, 0, 0, 0, 0}});
  CHECK(enumerate_T_G(Weight{1, 0}, Weight{1, 0}).size() == 4);
  CHECK_THROWS_AS(enumerate_T_G(Weight{1, 1}, Weight{1, 1}), HypothesisViolation);
  // Swap when m2 = 0 < n2.
  CHECK(enumerate_T_G(Weight{3, 0}, Weight{2, 1}).size() == enumerate_T_G(Weight{2, 1}, Weight{3, 0}).size());
}

TEST_CASE("T-model cardinalities equal Klimyk totals") {
  for (LieType t : kTypes) {
    for (Int m1 = 0; m1 <= 4; ++m1)
      for (Int m2 = 0; m2 <= 4; ++m2)
        for (Int n1 = 0; n1 <= 4; ++n1)
          for (Int n2 = 0; n2 <= 4; ++n2) {
            const Weight l{m1, m2}, u{n1, n2};
            if (!is_admissible(t, l, u)) continue;
            CHECK(static_cast<Int>(enumerate_T(t, l, u).size()) == klimyk_decompose(t, l, u).total_multiplicity());
          }
  }
}

TEST_CASE("tableau counts") {
  CHECK(littelmann_tableau_count(Weight{0, 0}, Weight{0, 0}) == 1);
  CHECK(littelmann_tableau_count(Weight{1, 0}, Weight{1, 0}) == 4);
  CHECK_THROWS_AS(littelmann_tableau_count(Weight{1, 0}, Weight{0, 1}), HypothesisViolation);
  for (Int m1 = 0; m1 <= 3; ++m1)
    for (Int m2 = 0; m2 <= 3; ++m2)
      for (Int n1 = 0; n1 <= 4; ++n1) {
        const Weight l{m1, m2}, u{n1, 0};
        const auto c = littelmann_tableau_counts(l, u);
        CHECK(c.reduced == c.prefix_scan);
        CHECK(c.reduced == c.critical_scan);
        // (a,b,c,d,e,f) = (y2,y3,y34,y4,y5,y6) is a bijection onto T^G.
        const auto T = enumerate_T_G(l, u);
        const auto tab = standard_dominant_tableau_tuples(l, u);
        const auto t_rows = rows(T), tab_rows = rows(tab);
        CHECK(std::set(t_rows.begin(), t_rows.end()) == std::set(tab_rows.begin(), tab_rows.end()));
        CHECK(T.size() == tab.size());
      }
}

TEST_CASE("the printed critical indices accept a tableau that is not dominant") {
  bool differs = false;
  for (Int m1 = 0; m1 <= 3 && !differs; ++m1)
    for (Int m2 = 0; m2 <= 3 && !differs; ++m2)
      for (Int n1 = 0; n1 <= 4 && !differs; ++n1) {
        const auto c = littelmann_tableau_counts(Weight{m1, m2}, Weight{n1, 0});
        differs = c.printed_index_scan != c.prefix_scan;
      }
  CHECK(differs);
}
