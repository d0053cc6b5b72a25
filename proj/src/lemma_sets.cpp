#include "rank2/lemma_sets.hpp"

#include <algorithm>

namespace rank2::lemma_sets {

namespace {

bool dominant_pair(const Weight& lambda, const Weight& mu) { return is_dominant(lambda) && is_dominant(mu); }

}  // namespace

namespace c2 {

Union T1(const Weight& lambda, const Weight& mu) {
  const std::vector<std::string> x{"a", "b", "c", "d"};
  if (!dominant_pair(lambda, mu)) return {IneqSystem::empty("^1T^C (a=0)", x), IneqSystem::empty("^1T^C (b=0)", x)};
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0], n2 = mu[1];
  IneqSystem p("^1T^C (a=0)", x);
  p.eq({1, 0, 0, 0}, 0, "a = 0")
      .le({0, 1, 1, 0}, m2, "c+b <= m2")
      .le({0, 0, 0, 1}, n2, "d <= n2")
      .le({0, 1, 0, 0}, n1, "b <= n1")
      .le({0, 1, 0, 1}, m2, "d+b <= m2")
      .le({0, 1, 2, -2}, n1, "b+2(c-d) <= n1");
  IneqSystem q("^1T^C (b=0)", x);
  q.eq({0, 1, 0, 0}, 0, "b = 0")
      .ge({1, 0, 0, 0}, 1, "a >= 1")
      .le({1, 0, 0, 0}, m1, "a <= m1")
      .le({0, 0, 1, 0}, m2, "c <= m2")
      .le({0, 0, 0, 1}, n2, "d <= n2")
      .le({-1, 0, 0, 1}, m2, "d-a <= m2")
      .le({1, 0, 2, -2}, n1, "a+2(c-d) <= n1");
  return {p, q};
}

Union T2(const Weight& lambda, const Weight& mu) {
  const std::vector<std::string> x{"a", "b", "c", "d"};
  if (!dominant_pair(lambda, mu)) {
    return {IneqSystem::empty("^2_1T^C", x), IneqSystem::empty("^2_2T^C", x), IneqSystem::empty("^2_3T^C", x),
            IneqSystem::empty("^2_4T^C", x)};
  }
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0], n2 = mu[1];
  IneqSystem t1("^2_1T^C", x);
  t1.eq({1, 0, 0, 0}, 0, "a = 0")
      .eq({0, 0, 1, 0}, 0, "c = 0")
      .le({0, 0, 0, 1}, n2, "d <= n2")
      .le({0, 1, 0, 0}, n1, "b <= n1")
      .le({0, 1, 0, 1}, m2, "d+b <= m2");
  IneqSystem t2("^2_2T^C", x);
  t2.eq({0, 1, 0, 0}, 0, "b = 0")
      .eq({0, 0, 1, 0}, 0, "c = 0")
      .ge({1, 0, 0, 0}, 1, "1 <= a")
      .le({1, 0, 0, 0}, m1, "a <= m1")
      .le({0, 0, 0, 1}, n2, "d <= n2")
      .le({-1, 0, 0, 1}, m2, "d-a <= m2")
      .le({1, 0, 0, -2}, n1, "a-2d <= n1");
  IneqSystem t3("^2_3T^C", x);
  t3.eq({1, 0, 0, 0}, 0, "a = 0")
      .eq({0, 0, 0, 1}, 0, "d = 0")
      .ge({0, 0, 1, 0}, 1, "c >= 1")
      .le({0, 1, 1, 0}, m2, "c+b <= m2")
      .le({0, 1, 2, 0}, n1, "b+2c <= n1");
  IneqSystem t4("^2_4T^C", x);
  t4.eq({0, 1, 0, 0}, 0, "b = 0")
      .eq({0, 0, 0, 1}, 0, "d = 0")
      .ge({1, 0, 0, 0}, 1, "1 <= a")
      .le({1, 0, 0, 0}, m1, "a <= m1")
      .ge({0, 0, 1, 0}, 1, "1 <= c")
      .le({0, 0, 1, 0}, m2, "c <= m2")
      .le({1, 0, 2, 0}, n1, "a+2c <= n1");
  return {t1, t2, t3, t4};
}

IneqSystem S1(const Weight& lambda, const Weight& mu) {
  const std::vector<std::string> x{"b", "c", "d"};
  if (!dominant_pair(lambda, mu)) return IneqSystem::empty("^1S^C", x);
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0], n2 = mu[1];
  IneqSystem s("^1S^C", x);
  s.le_min({0, 0, 1}, m2, n2, "d <= min{m2,n2}")
      .le_min({1, 0, 1}, m1 + m2, n1 + n2, "b+d <= min{m1+m2,n1+n2}")
      .le_min({1, 1, 0}, m1 + m2, n1 + n2, "b+c <= min{m1+m2,n1+n2}")
      .le({1, 0, 0}, m1 + n1, "b <= m1+n1")
      .le({1, 0, 2}, m2 + n2, "2d+b <= m2+n2")
      .le({1, 2, -2}, m1 + n1, "b+2c-2d <= m1+n1");
  return s;
}

Union S2(const Weight& lambda, const Weight& mu) {
  const std::vector<std::string> x{"b", "c", "d"};
  if (!dominant_pair(lambda, mu)) return {IneqSystem::empty("^2S^C (c=0)", x), IneqSystem::empty("^2S^C (d=0)", x)};
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0], n2 = mu[1];
  IneqSystem p("^2S^C (c=0)", x);
  p.eq({0, 1, 0}, 0, "c = 0")
      .le_min({0, 0, 1}, m2, n2, "d <= min{m2,n2}")
      .le_min({1, 0, 1}, m1 + m2, n1 + n2, "b+d <= min{m1+m2,n1+n2}")
      .le({1, 0, 0}, m1 + n1, "b <= m1+n1")
      .le({1, 0, 2}, m2 + n2, "2d+b <= m2+n2");
  IneqSystem q("^2S^C (d=0)", x);
  q.eq({0, 0, 1}, 0, "d = 0")
      .ge({0, 1, 0}, 1, "c >= 1")
      .le_min({1, 1, 0}, m1 + m2, n1 + n2, "b+c <= min{m1+m2,n1+n2}")
      .le({1, 0, 0}, m2 + n2, "b <= m2+n2")
      .le({1, 2, 0}, m1 + n1, "b+2c <= m1+n1");
  return {p, q};
}

IneqSystem S3(const Weight& lambda, const Weight& mu) {
  const std::vector<std::string> x{"b", "c"};
  if (!dominant_pair(lambda, mu)) return IneqSystem::empty("^3S^C", x);
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0], n2 = mu[1];
  IneqSystem s("^3S^C", x);
  s.le({1, 0}, 1, "b <= 1")
      .le_min({1, 1}, m1 + m2, n1 + n2, "b+c <= min{m1+m2,n1+n2}")
      .le({1, 2}, m1 + n1, "b+2c <= m1+n1");
  return s;
}

}  // namespace c2

namespace g2 {

namespace {
bool ok(const Weight& lambda, const Weight& mu) { return dominant_pair(lambda, mu) && mu[1] == 0; }
}  // namespace

IneqSystem T1(const Weight& lambda, const Weight& mu) {
  const std::vector<std::string> x{"a", "b", "c", "d", "e"};
  if (!ok(lambda, mu)) return IneqSystem::empty("^1T^G", x);
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0];
  IneqSystem t("^1T^G", x);
  t.le({1, 1, 1, 1, 1}, n1, "a+b+c+d+e <= n1")
      .le({0, 0, 1, 0, 0}, 1, "c <= 1")
      .le({0, 1, 0, -1, 1}, m2, "b+e-d <= m2")
      .le({0, 0, 0, 0, 1}, m2, "e <= m2")
      .le({1, -2, 0, 2, -1}, m1, "a-2b+2d-e <= m1")
      .le({0, 0, 1, 2, -1}, m1, "c+2d-e <= m1");
  return t;
}

IneqSystem T2(const Weight& lambda, const Weight& mu) {
  const std::vector<std::string> x{"a", "b", "c", "y"};
  if (!ok(lambda, mu)) return IneqSystem::empty("^2T^G", x);
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0];
  IneqSystem t("^2T^G", x);
  t.le({1, 2, 1, 1}, n1 + m2, "a+2b+c+y <= n1+m2")
      .le({0, 0, 1, 0}, 1, "c <= 1")
      .le({1, 0, 0, 2}, m1 + 2 * m2, "a+2y <= m1+2m2")
      .le({0, 2, 1, 2}, m1 + 2 * m2, "c+2b+2y <= m1+2m2")
      .ge({0, 1, 0, 1}, m2, "y+b >= m2");
  return t;
}

Union T3(const Weight& lambda, const Weight& mu) {
  IneqSystem base = T2(lambda, mu);
  const std::vector<std::string> x{"a", "b", "c", "y"};
  if (base.is_empty()) return {IneqSystem::empty("^3T^G (a=0)", x), IneqSystem::empty("^3T^G (a>0)", x)};
  const Int top = lambda[0] + 2 * lambda[1];
  IneqSystem p = base;
  IneqSystem q = base;
  p.eq({1, 0, 0, 0}, 0, "a = 0");
  q.ge({1, 0, 0, 0}, 1, "a >= 1").eq({0, 2, 1, 2}, top, "c+2b+2y = m1+2m2");
  return {p, q};
}

IneqSystem Y1(const Weight& lambda, const Weight& mu) {
  const std::vector<std::string> x{"b", "c", "y"};
  if (!ok(lambda, mu)) return IneqSystem::empty("Y^1", x);
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0];
  IneqSystem y("Y^1", x);
  y.le({2, 1, 1}, n1 + m2, "2b+c+y <= n1+m2")
      .le({0, 1, 0}, 1, "c <= 1")
      .le({2, 1, 2}, m1 + 2 * m2, "c+2b+2y <= m1+2m2")
      .ge({1, 0, 1}, m2, "y+b >= m2");
  return y;
}

IneqSystem Y2(const Weight& lambda, const Weight& mu) {
  const std::vector<std::string> x{"a", "y"};
  if (!ok(lambda, mu)) return IneqSystem::empty("Y^2", x);
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0];
  IneqSystem y("Y^2", x);
  y.lt({1, -1}, n1 - m2 - m1, "a-y < n1-m2-m1").lt({1, 2}, m1 + 2 * m2, "a+2y < m1+2m2");
  return y;
}

IneqSystem R1(const Weight& lambda, const Weight& mu) {
  const std::vector<std::string> x{"b", "c", "d", "e"};
  if (!ok(lambda, mu)) return IneqSystem::empty("R^1", x);
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0];
  IneqSystem r("R^1", x);
  r.le({1, 0, 0, 1}, m2, "b+e <= m2")
      .le({0, 1, 1, 0}, m1 + m2, "c+d <= m1+m2")
      .le({1, 1, 0, 0}, m1 + m2, "b+c <= m1+m2")
      .le({1, 1, 1, 1}, n1, "b+c+d+e <= n1")
      .le({-1, 2, 3, 0}, m1 + n1, "2c+3d-b <= m1+n1")
      .le({1, 2, 1, 0}, m1 + n1, "b+2c+d <= m1+n1");
  return r;
}

IneqSystem R2(const Weight& lambda, const Weight& mu) {
  const std::vector<std::string> x{"a", "b", "c", "d"};
  if (!ok(lambda, mu)) return IneqSystem::empty("R^2", x);
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0];
  IneqSystem r("R^2", x);
  r.lt({1, 0, 0, 0}, m1, "a < m1")
      .le({0, 1, 0, 0}, m2, "b <= m2")
      .lt({1, 0, 1, 1}, m1 + m2, "a+c+d < m1+m2")
      .lt({1, 1, 1, 0}, m1 + m2, "a+b+c < m1+m2")
      .lt({1, 1, 1, 1}, n1, "a+b+c+d < n1")
      .lt({2, -1, 2, 3}, m1 + n1 - 1, "2a+2c+3d-b < m1+n1-1")
      .lt({2, 1, 2, 1}, m1 + n1 - 1, "2a+b+2c+d < m1+n1-1");
  return r;
}

IneqSystem Q1(const Weight& lambda, const Weight& mu) {
  const std::vector<std::string> x{"a", "c", "d"};
  if (!ok(lambda, mu)) return IneqSystem::empty("Q^1", x);
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0];
  IneqSystem q("Q^1", x);
  q.le({1, 0, 0}, m1, "a <= m1")
      .le_min({1, 1, 1}, m1 + m2, n1, "a+c+d <= min{m1+m2,n1}")
      .le({2, 2, 3}, m1 + n1, "2(a+c)+3d <= m1+n1");
  return q;
}

IneqSystem Q2(const Weight& lambda, const Weight& mu) {
  const std::vector<std::string> x{"a", "b", "c"};
  if (!ok(lambda, mu)) return IneqSystem::empty("Q^2", x);
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0];
  IneqSystem q("Q^2", x);
  q.le({1, 0, 0}, m1, "a <= m1")
      .le_min({1, 1, 1}, m1 + m2 - 1, n1 - 1, "a+b+c <= min{m1+m2-1,n1-1}")
      .le({0, 1, 0}, m2 - 1, "b <= m2-1")
      .le({2, 1, 2}, m1 + n1 - 1, "2(a+c)+b <= m1+n1-1");
  return q;
}

Union S3(const Weight& lambda, const Weight& mu) {
  if (!ok(lambda, mu)) {
    return {IneqSystem::empty("^3S^G (c,d)", {"c", "d"}), IneqSystem::empty("^3S^G (b,c)", {"b", "c"})};
  }
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0];
  IneqSystem p("^3S^G (c,d)", {"c", "d"});
  p.le_min({1, 1}, m1 + m2, n1, "c+d <= min{m1+m2,n1}").le({2, 3}, m1 + n1, "2c+3d <= m1+n1");
  IneqSystem q("^3S^G (b,c)", {"b", "c"});
  q.lt({1, 1}, std::min(m1 + m2, n1), "b+c < min{m1+m2,n1}")
      .lt({1, 0}, m2, "b < m2")
      .lt({1, 2}, m1 + n1, "2c+b < m1+n1");
  return {p, q};
}

IneqSystem Z1(const Weight& lambda, const Weight& mu) {
  const std::vector<std::string> x{"c", "d"};
  if (!ok(lambda, mu)) return IneqSystem::empty("Z^1", x);
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0];
  IneqSystem z("Z^1", x);
  z.le({2, 3}, m1 + n1, "2c+3d <= m1+n1")
      .gt({1, 1}, std::min(m1 + m2 - 1, n1), "min{m1+m2-1,n1} < c+d")
      .le_min({1, 1}, m1 + m2, n1, "c+d <= min{m1+m2,n1}");
  return z;
}

IneqSystem Z2(const Weight& lambda, const Weight& mu) {
  const std::vector<std::string> x{"b", "c"};
  if (!ok(lambda, mu)) return IneqSystem::empty("Z^2", x);
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0];
  IneqSystem z("Z^2", x);
  z.lt({1, 2}, m1 + n1, "2c+b < m1+n1")
      .lt({1, 0}, m2 - 1, "b < m2-1")
      .ge({1, 1}, std::min(m1 + m2 - 1, n1), "min{m1+m2-1,n1} <= b+c")
      .lt({1, 1}, std::min(m1 + m2, n1), "b+c < min{m1+m2,n1}");
  return z;
}

IneqSystem Z3(const Weight& lambda, const Weight& mu) {
  const std::vector<std::string> x{"c"};
  if (!ok(lambda, mu)) return IneqSystem::empty("Z^3", x);
  IneqSystem z("Z^3", x);
  z.le_min({1}, lambda[0], mu[0] - lambda[1], "c <= min{m1,n1-m2}");
  return z;
}

Union M(const Weight& lambda, const Weight& mu) {
  if (!ok(lambda, mu)) return {IneqSystem::empty("M^1", {"b", "c"}), IneqSystem::empty("M^2", {"a"})};
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0];
  IneqSystem p("M^1", {"b", "c"});
  p.le_min({2, 1}, m2 + n1, m1 + 2 * m2, "2b+c <= min{m2+n1,m1+2m2}")
      .le({0, 1}, 1, "c <= 1")
      .ge({1, 0}, m2, "b >= m2");
  IneqSystem q("M^2", {"a"});
  q.lt({1}, std::min(n1 - m2 - m1, m1 + 2 * m2), "a < min{n1-m2-m1,m1+2m2}");
  return {p, q};
}

}  // namespace g2

}  // namespace rank2::lemma_sets
