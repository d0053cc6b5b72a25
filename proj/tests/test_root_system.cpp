#include <doctest.h>

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rank2/errors.hpp"
#include "rank2/root_system.hpp"

using namespace rank2;

namespace {

constexpr std::array kTypes{LieType::A2, LieType::C2, LieType::G2};

// Weyl group as integer matrices on fundamental coordinates, closed by BFS
// from the two simple reflections w -> w - w_i alpha_i.
struct Mat {
  Int a, b, c, d;  // [[a,b],[c,d]]
  Weight operator()(const Weight& w) const { return Weight{a * w[0] + b * w[1], c * w[0] + d * w[1]}; }
  Mat operator*(const Mat& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Int det() const { return a * d - b * c; }
  auto key() const { return std::array{a, b, c, d}; }
};

std::vector<Mat> weyl_group(LieType type) {
  const auto& C = root_system(type).cartan;
  // Column j of the Cartan matrix is alpha_j.
  const Mat s1{1 - C(0, 0), 0, -C(1, 0), 1};
  const Mat s2{1, -C(0, 1), 0, 1 - C(1, 1)};
  std::vector<Mat> elems{{1, 0, 0, 1}};
  std::set<std::array<Int, 4>> seen{elems.front().key()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Mat& s : {s1, s2}) {
      const Mat g = s * elems[i];
      if (seen.insert(g.key()).second) elems.push_back(g);
    }
  }
  return elems;
}

// Gelfand-Tsetlin patterns of gl3 with top row (a+b, b, 0).
std::map<Weight, Int> gt_multiplicities(Int a, Int b) {
  std::map<Weight, Int> out;
  const Int x1 = a + b, x2 = b, x3 = 0;
  for (Int y1 = x2; y1 <= x1; ++y1) {
    for (Int y2 = x3; y2 <= x2; ++y2) {
      for (Int z = y2; z <= y1; ++z) {
        const Int w1 = z, w2 = y1 + y2 - z, w3 = x1 + x2 + x3 - y1 - y2;
        ++out[Weight{w1 - w2, w2 - w3}];
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("root_to_weight examples") {
  CHECK(root_to_weight(LieType::A2, RootVector{1, 0}) == Weight{2, -1});
  CHECK(root_to_weight(LieType::C2, RootVector{1, 1}) == Weight{0, 1});
  CHECK(root_to_weight(LieType::G2, RootVector{3, 2}) == Weight{0, 1});
}

TEST_CASE("bilinear examples") {
  CHECK(bilinear(LieType::A2, Weight{1, 1}, RootVector{1, 1}) == 2);
  CHECK(bilinear(LieType::C2, Weight{0, 1}, RootVector{0, 1}) == 2);
  CHECK(bilinear(LieType::G2, Weight{1, 0}, RootVector{3, 2}) == 3);
}

TEST_CASE("weyl_dim examples and errors") {
  CHECK(weyl_dim(LieType::A2, Weight{1, 0}) == 3);
  CHECK(weyl_dim(LieType::C2, Weight{0, 1}) == 5);
  CHECK(weyl_dim(LieType::G2, Weight{1, 0}) == 7);
  CHECK(weyl_dim(LieType::G2, Weight{0, 1}) == 14);
  CHECK_THROWS_AS(weyl_dim(LieType::A2, Weight{-1, 0}), HypothesisViolation);
}

TEST_CASE("simple_reflection examples") {
  CHECK(simple_reflection(LieType::A2, 1, Weight{1, 0}) == Weight{-1, 1});
  CHECK(simple_reflection(LieType::C2, 2, Weight{0, 1}) == Weight{2, -1});
  for (LieType t : kTypes) CHECK(simple_reflection(t, 1, Weight{0, 5}) == Weight{0, 5});
}

TEST_CASE("dominant_conjugate_signed examples") {
  for (LieType t : kTypes) {
    CHECK(dominant_conjugate_signed(t, Weight{2, 1}).weight == Weight{2, 1});
    CHECK(dominant_conjugate_signed(t, Weight{2, 1}).sign == 1);
    CHECK(dominant_conjugate_signed(t, Weight{0, 3}).sign == 0);
  }
  const auto c = dominant_conjugate_signed(LieType::A2, Weight{-1, 2});
  CHECK(c.weight == Weight{1, 1});
  CHECK(c.sign == -1);
}

TEST_CASE("Weyl group order, involutions and signed conjugation against brute force") {
  for (LieType t : kTypes) {
    const auto W = weyl_group(t);
    CHECK(static_cast<Int>(W.size()) == root_system(t).weyl_order);
    for (Int x = -7; x <= 7; ++x) {
      for (Int y = -7; y <= 7; ++y) {
        const Weight xi{x, y};
        for (int i = 1; i <= 2; ++i) CHECK(simple_reflection(t, i, simple_reflection(t, i, xi)) == xi);

        bool stabilized = false;
        std::optional<Mat> to_chamber;
        for (const Mat& g : W) {
          const Weight img = g(xi);
          if (img == xi && g.key() != Mat{1, 0, 0, 1}.key()) stabilized = true;
          if (img[0] > 0 && img[1] > 0) to_chamber = g;
        }
        const auto got = dominant_conjugate_signed(t, xi);
        if (stabilized) {
          CHECK(got.sign == 0);
        } else {
          REQUIRE(to_chamber);
          CHECK(got.weight == (*to_chamber)(xi));
          CHECK(got.sign == to_chamber->det());
        }
        const auto orbit = weyl_orbit(t, xi);
        CHECK(std::set<Weight>(orbit.begin(), orbit.end()).size() == orbit.size());
      }
    }
  }
}

TEST_CASE("weight_multiplicities examples") {
  const auto adj = weight_multiplicities(LieType::A2, Weight{1, 1});
  CHECK(adj.at(Weight{0, 0}) == 2);
  for (LieType t : kTypes) {
    const auto triv = weight_multiplicities(t, Weight{0, 0});
    CHECK(triv.size() == 1);
    CHECK(triv.at(Weight{0, 0}) == 1);
  }
  const auto g7 = weight_multiplicities(LieType::G2, Weight{1, 0});
  CHECK(g7.size() == 7);
  for (const auto& [eta, m] : g7) CHECK(m == 1);
  CHECK_THROWS_AS(weight_multiplicities(LieType::C2, Weight{0, -2}), HypothesisViolation);
}

TEST_CASE("Freudenthal sums equal Weyl dimensions for coordinates <= 8") {
  for (LieType t : kTypes) {
    for (Int a = 0; a <= 8; ++a) {
      for (Int b = 0; b <= 8; ++b) {
        Int total = 0;
        for (const auto& [eta, m] : weight_multiplicities(t, Weight{a, b})) total += m;
        CHECK(total == weyl_dim(t, Weight{a, b}));
      }
    }
  }
}

TEST_CASE("Weight multiplicities are Weyl invariant") {
  for (LieType t : kTypes) {
    const auto W = weyl_group(t);
    for (Int a = 0; a <= 3; ++a) {
      for (Int b = 0; b <= 3; ++b) {
        const auto mult = weight_multiplicities(t, Weight{a, b});
        for (const auto& [eta, m] : mult) {
          for (const Mat& g : W) {
            const auto it = mult.find(g(eta));
            REQUIRE(it != mult.end());
            CHECK(it->second == m);
          }
        }
      }
    }
  }
}

TEST_CASE("A2 multiplicities match Gelfand-Tsetlin patterns") {
  for (Int a = 0; a <= 5; ++a) {
    for (Int b = 0; b <= 5; ++b) {
      const auto got = weight_multiplicities(LieType::A2, Weight{a, b});
      const auto want = gt_multiplicities(a, b);
      CHECK(std::map<Weight, Int>(got.begin(), got.end()) == want);
    }
  }
}

TEST_CASE("Lie type names") {
  CHECK(parse_lie_type("C2") == LieType::C2);
  CHECK(to_string(LieType::G2) == "G2");
  CHECK_THROWS_AS(parse_lie_type("B2"), HypothesisViolation);
}
