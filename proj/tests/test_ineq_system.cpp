#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "rank2/errors.hpp"
#include "rank2/fusion_polytope.hpp"
#include "rank2/ineq_system.hpp"

using namespace rank2;

namespace {

std::vector<std::vector<Int>> as_vectors(const std::vector<LatticePoint>& pts) {
  std::vector<std::vector<Int>> out;
  for (const auto& p : pts) out.emplace_back(p.data(), p.data() + p.size());
  return out;
}

}  // namespace

TEST_CASE("enumeration examples") {
  IneqSystem one("x", {"x1"});
  one.le({1}, 0);
  CHECK(as_vectors(enumerate_lattice_points(one)) == std::vector<std::vector<Int>>{{0}});

  IneqSystem two("x", {"x1", "x2"});
  two.le({1, 1}, 1);
  CHECK(as_vectors(enumerate_lattice_points(two)) == std::vector<std::vector<Int>>{{0, 0}, {0, 1}, {1, 0}});

  CHECK(as_vectors(enumerate_S(LieType::A2, Weight{0, 0}, Weight{0, 0})) == std::vector<std::vector<Int>>{{0, 0, 0}});
}

TEST_CASE("strict, equality and min constraints") {
  IneqSystem s("x", {"x", "y"});
  s.lt({1, 0}, 3).eq({1, -1}, 0).le_min({0, 1}, 5, 1);
  CHECK(as_vectors(enumerate_lattice_points(s)) == std::vector<std::vector<Int>>{{0, 0}, {1, 1}});
  CHECK(s.contains(make_point({1, 1})));
  CHECK_FALSE(s.contains(make_point({2, 2})));
}

TEST_CASE("negative bounds and the empty system give no points") {
  IneqSystem s("x", {"x"});
  s.le({1}, -1);
  CHECK(enumerate_lattice_points(s).empty());
  CHECK(count_lattice_points(IneqSystem::empty("e", {"a", "b"})) == 0);
}

TEST_CASE("unbounded systems are rejected naming the coordinate") {
  IneqSystem s("x", {"p", "q"});
  s.le({1, 0}, 4);
  try {
    (void)enumerate_lattice_points(s);
    FAIL("expected HypothesisViolation");
  } catch (const HypothesisViolation& e) {
    CHECK(std::string(e.what()).find("'q'") != std::string::npos);
  }
}

TEST_CASE("random systems agree with brute-force enumeration of a box") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coef(-2, 3), bound(-1, 9), arity_dist(1, 4), box(0, 5), rows(0, 4), coin(0, 1);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = arity_dist(rng);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    IneqSystem sys("random", names);
    std::vector<Int> box_bound(n);
    struct Row {
      std::vector<Int> c;
      Int b;
      bool strict;
    };
    std::vector<Row> extra;
    for (int i = 0; i < n; ++i) {
      box_bound[i] = box(rng);
      std::vector<Int> c(n, 0);
      c[i] = 1;
      extra.push_back({c, box_bound[i], false});
    }
    for (int k = rows(rng); k > 0; --k) {
      std::vector<Int> c(n);
      for (auto& x : c) x = coef(rng);
      extra.push_back({c, bound(rng), coin(rng) == 1});
    }
    for (const auto& r : extra) {
      auto add = [&](auto&&... xs) {
        if (r.strict) {
          sys.lt({xs...}, r.b);
        } else {
          sys.le({xs...}, r.b);
        }
      };
      switch (n) {
        case 1: add(r.c[0]); break;
        case 2: add(r.c[0], r.c[1]); break;
        case 3: add(r.c[0], r.c[1], r.c[2]); break;
        default: add(r.c[0], r.c[1], r.c[2], r.c[3]); break;
      }
    }

    std::vector<std::vector<Int>> want;
    std::vector<Int> x(n, 0);
    for (;;) {
      bool ok = true;
      for (const auto& r : extra) {
        Int lhs = 0;
        for (int i = 0; i < n; ++i) lhs += r.c[i] * x[i];
        ok &= r.strict ? lhs < r.b : lhs <= r.b;
      }
      if (ok) want.push_back(x);
      int i = n - 1;
      while (i >= 0 && x[i] == box_bound[i]) x[i--] = 0;
      if (i < 0) break;
      ++x[i];
    }
    CHECK(as_vectors(enumerate_lattice_points(sys)) == want);
    CHECK(count_lattice_points(sys) == want.size());
  }
}
