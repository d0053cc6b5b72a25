#include "rank2/fusion_polytope.hpp"

#include <algorithm>
#include <string>

#include "rank2/errors.hpp"

namespace rank2 {

int polytope_arity(LieType type) {
  switch (type) {
    case LieType::A2: return 3;
    case LieType::C2: return 4;
    case LieType::G2: return 6;
  }
  return 0;
}

bool is_admissible(LieType type, const Weight& lambda, const Weight& mu) {
  if (!is_dominant(lambda) || !is_dominant(mu)) return false;
  return type != LieType::G2 || std::min(lambda[1], mu[1]) == 0;
}

void require_admissible(LieType type, const Weight& lambda, const Weight& mu) {
  require_dominant(lambda, "lambda");
  require_dominant(mu, "mu");
  if (type == LieType::G2 && std::min(lambda[1], mu[1]) != 0) {
    throw HypothesisViolation(
        "G2 requires min{m2,n2}=0 (lambda or mu must be a multiple of the fundamental weight w1); got m2=" +
        std::to_string(lambda[1]) + ", n2=" + std::to_string(mu[1]));
  }
}

IneqSystem build_S_system(LieType type, const Weight& lambda, const Weight& mu) {
  require_admissible(type, lambda, mu);
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0], n2 = mu[1];
  switch (type) {
    case LieType::A2: {
      IneqSystem s("S^A", {"a", "b", "c"});
      s.le_min({1, 0, 0}, m1, n1, "a <= min{m1,n1}")
          .le_min({0, 0, 1}, m2, n2, "c <= min{m2,n2}")
          .le_min({1, 1, 1}, m1 + m2, n1 + n2, "a+b+c <= min{m1+m2,n1+n2}")
          .le({2, 1, 0}, m1 + n1, "2a+b <= m1+n1")
          .le({0, 1, 2}, m2 + n2, "2c+b <= m2+n2");
      return s;
    }
    case LieType::C2: {
      IneqSystem s("S^C", {"a", "b", "c", "d"});
      s.le_min({1, 0, 0, 0}, m1, n1, "a <= min{m1,n1}")
          .le_min({0, 0, 0, 1}, m2, n2, "d <= min{m2,n2}")
          .le_min({1, 1, 1, 0}, m1 + m2, n1 + n2, "a+b+c <= min{m1+m2,n1+n2}")
          .le_min({1, 1, 0, 1}, m1 + m2, n1 + n2, "a+b+d <= min{m1+m2,n1+n2}")
          .le({2, 1, 0, 0}, m1 + n1, "2a+b <= m1+n1")
          .le({0, 1, 0, 2}, m2 + n2, "2d+b <= m2+n2")
          .le({2, 1, 2, -2}, m1 + n1, "2a+b+2(c-d) <= m1+n1");
      return s;
    }
    case LieType::G2: {
      IneqSystem s("S^G", {"a", "b", "c", "d", "e", "f"});
      s.le_min({1, 0, 0, 0, 0, 0}, m1, n1, "a <= min{m1,n1}")
          .le({0, 1, 0, 0, 0, 0}, m2 + n2, "b <= m2+n2")
          .le_min({0, 0, 0, 0, 0, 1}, m2, n2, "f <= min{m2,n2}")
          .le({-1, 1, 0, 0, 1, 0}, m2 + n2, "b+e-a <= m2+n2")
          .le_min({1, 0, 1, 1, 0, 0}, m1 + m2, n1 + n2, "a+c+d <= min{m1+m2,n1+n2}")
          .le_min({1, 1, 1, 0, 0, 0}, m1 + m2, n1 + n2, "a+b+c <= min{m1+m2,n1+n2}")
          .le_min({1, 1, 1, 1, 0, 0}, m1 + 2 * m2, n1 + 2 * n2, "a+b+c+d <= min{m1+2m2,n1+2n2}")
          .le_min({0, 1, 1, 1, 1, 0}, m1 + 2 * m2, n1 + 2 * n2, "b+c+d+e <= min{m1+2m2,n1+2n2}")
          .le({2, -1, 2, 3, 0, 0}, m1 + n1, "2(a+c)+3d-b <= m1+n1")
          .le({2, 1, 2, 1, 0, 0}, m1 + n1, "2(a+c)+b+d <= m1+n1");
      return s;
    }
  }
  throw HypothesisViolation("unknown Lie type");
}

std::vector<LatticePoint> enumerate_S(LieType type, const Weight& lambda, const Weight& mu) {
  return enumerate_lattice_points(build_S_system(type, lambda, mu));
}

Int degree(const LatticePoint& s) { return s.sum(); }

RootVector weight_statistic_root(LieType type, const LatticePoint& s) {
  if (s.size() != polytope_arity(type)) {
    throw HypothesisViolation("lattice point arity " + std::to_string(s.size()) + " does not match type " +
                              std::string(to_string(type)));
  }
  switch (type) {
    case LieType::A2:
      return {s(0) + s(1), s(1) + s(2)};
    case LieType::C2:
      return {s(0) + s(1) + 2 * s(2), s(1) + s(2) + s(3)};
    case LieType::G2:
      return {s(0) + s(1) + 2 * s(2) + 3 * s(3) + 3 * s(4), s(1) + s(2) + s(3) + 2 * s(4)};
  }
  return {};
}

Weight weight_statistic(LieType type, const LatticePoint& s) {
  return root_to_weight(type, weight_statistic_root(type, s));
}

}  // namespace rank2
