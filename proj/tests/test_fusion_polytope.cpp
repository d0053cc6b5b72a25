#include <doctest.h>

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "rank2/errors.hpp"
#include "rank2/fusion_polytope.hpp"

using namespace rank2;

namespace {

using Rows = std::vector<std::vector<Int>>;

Rows as_rows(const std::vector<LatticePoint>& pts) {
  Rows out;
  for (const auto& p : pts) out.emplace_back(p.data(), p.data() + p.size());
  return out;
}

Rows sorted(Rows r) {
  std::sort(r.begin(), r.end());
  return r;
}

// The three polytopes typed out independently of build_S_system.
bool in_S(LieType t, const std::vector<Int>& s, Int m1, Int m2, Int n1, Int n2) {
  using std::min;
  switch (t) {
    case LieType::A2: {
      const Int a = s[0], b = s[1], c = s[2];
      return a <= min(m1, n1) && c <= min(m2, n2) && a + b + c <= min(m1 + m2, n1 + n2) && 2 * a + b <= m1 + n1 &&
             2 * c + b <= m2 + n2;
    }
    case LieType::C2: {
      const Int a = s[0], b = s[1], c = s[2], d = s[3];
      return a <= min(m1, n1) && d <= min(m2, n2) && a + b + c <= min(m1 + m2, n1 + n2) &&
             a + b + d <= min(m1 + m2, n1 + n2) && 2 * a + b <= m1 + n1 && 2 * d + b <= m2 + n2 &&
             2 * a + b + 2 * (c - d) <= m1 + n1;
    }
    case LieType::G2: {
      const Int a = s[0], b = s[1], c = s[2], d = s[3], e = s[4], f = s[5];
      const Int A = min(m1 + m2, n1 + n2), C = min(m1 + 2 * m2, n1 + 2 * n2);
      return a <= min(m1, n1) && b <= m2 + n2 && f <= min(m2, n2) && b + e - a <= m2 + n2 && a + c + d <= A &&
             a + b + c <= A && a + b + c + d <= C && b + c + d + e <= C && 2 * (a + c) + 3 * d - b <= m1 + n1 &&
             2 * (a + c) + b + d <= m1 + n1;
    }
  }
  return false;
}

Rows brute_force_S(LieType t, Int m1, Int m2, Int n1, Int n2) {
  const int n = polytope_arity(t);
  const Int B = m1 + m2 + n1 + n2;
  Rows out;
  std::vector<Int> x(n, 0);
  for (;;) {
    if (in_S(t, x, m1, m2, n1, n2)) out.push_back(x);
    int i = n - 1;
    while (i >= 0 && x[i] == B) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

constexpr std::array kTypes{LieType::A2, LieType::C2, LieType::G2};

}  // namespace

TEST_CASE("S examples") {
  CHECK(sorted(as_rows(enumerate_S(LieType::A2, Weight{1, 0}, Weight{0, 1}))) == Rows{{0, 0, 0}, {0, 1, 0}});
  CHECK(sorted(as_rows(enumerate_S(LieType::C2, Weight{1, 0}, Weight{1, 0}))) ==
        sorted(Rows{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}}));
  CHECK(sorted(as_rows(enumerate_S(LieType::G2, Weight{1, 0}, Weight{1, 0}))) ==
        sorted(Rows{{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {1, 0, 0, 0, 1, 0}}));
}

TEST_CASE("degree and weight statistic examples") {
  CHECK(degree(make_point({0, 0, 0})) == 0);
  CHECK(degree(make_point({1, 0, 0, 0, 1, 0})) == 2);
  CHECK(degree(make_point({1, 2, 3})) == 6);
  CHECK(weight_statistic_root(LieType::A2, make_point({0, 1, 0})) == RootVector{1, 1});
  CHECK(weight_statistic(LieType::A2, make_point({0, 1, 0})) == Weight{1, 1});
  CHECK(weight_statistic_root(LieType::C2, make_point({0, 0, 1, 0})) == RootVector{2, 1});
  CHECK(weight_statistic(LieType::C2, make_point({0, 0, 1, 0})) == Weight{2, 0});
  CHECK(weight_statistic_root(LieType::G2, make_point({1, 0, 0, 0, 1, 0})) == RootVector{4, 2});
  CHECK(weight_statistic(LieType::G2, make_point({1, 0, 0, 0, 1, 0})) == Weight{2, 0});
  CHECK_THROWS_AS(weight_statistic(LieType::C2, make_point({0, 0, 0})), HypothesisViolation);
}

TEST_CASE("hypothesis gates") {
  CHECK_THROWS_AS(build_S_system(LieType::A2, Weight{-1, 0}, Weight{0, 0}), HypothesisViolation);
  try {
    (void)build_S_system(LieType::G2, Weight{1, 1}, Weight{0, 1});
    FAIL("expected HypothesisViolation");
  } catch (const HypothesisViolation& e) {
    CHECK(std::string(e.what()).find("min{m2,n2}=0") != std::string::npos);
  }
  CHECK(is_admissible(LieType::G2, Weight{0, 3}, Weight{2, 0}));
  CHECK_FALSE(is_admissible(LieType::G2, Weight{0, 3}, Weight{2, 1}));
}

TEST_CASE("S agrees with an independently typed brute-force filter") {
  for (LieType t : kTypes) {
    const Int max = t == LieType::G2 ? 2 : 3;
    for (Int m1 = 0; m1 <= max; ++m1)
      for (Int m2 = 0; m2 <= max; ++m2)
        for (Int n1 = 0; n1 <= max; ++n1)
          for (Int n2 = 0; n2 <= max; ++n2) {
            if (!is_admissible(t, Weight{m1, m2}, Weight{n1, n2})) continue;
            CHECK(as_rows(enumerate_S(t, Weight{m1, m2}, Weight{n1, n2})) == brute_force_S(t, m1, m2, n1, n2));
          }
  }
}

TEST_CASE("structural properties over a sweep") {
  for (LieType t : kTypes) {
    for (Int m1 = 0; m1 <= 3; ++m1)
      for (Int m2 = 0; m2 <= 3; ++m2)
        for (Int n1 = 0; n1 <= 3; ++n1)
          for (Int n2 = 0; n2 <= 3; ++n2) {
            const Weight l{m1, m2}, u{n1, n2};
            if (!is_admissible(t, l, u)) continue;
            const auto S = enumerate_S(t, l, u);
            // lambda <-> mu symmetry as point sets
            CHECK(as_rows(S) == as_rows(enumerate_S(t, u, l)));
            // zero point present and the only one of degree 0
            CHECK(std::count_if(S.begin(), S.end(), [](const auto& s) { return degree(s) == 0; }) == 1);
            CHECK(S.front().isZero());
            for (const auto& s : S) CHECK(is_dominant(l + u - weight_statistic(t, s)));
            CHECK(std::adjacent_find(S.begin(), S.end(), [](const auto& a, const auto& b) { return !LexLess{}(a, b); }) ==
                  S.end());
          }
    for (Int m1 = 0; m1 <= 4; ++m1)
      for (Int m2 = 0; m2 <= 4; ++m2) CHECK(enumerate_S(t, Weight{m1, m2}, Weight{0, 0}).size() == 1);
  }
}
