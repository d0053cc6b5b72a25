#include <algorithm>

#include "lemma_support.hpp"
#include "rank2/lemma_verifier.hpp"

namespace rank2 {

using namespace detail;
namespace sets = lemma_sets::c2;

namespace {

Weight shifted(const Weight& w, const Weight& by) { return w - by; }

}  // namespace

LemmaReport check_C2_recursions(const Weight& lambda, const Weight& mu) {
  require_dominant(lambda, "lambda");
  require_dominant(mu, "mu");
  LemmaReport report{"C2 recursions", LieType::C2, lambda, mu, {}, {}, {}};
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0], n2 = mu[1];
  const Weight w1 = fundamental(1), w2 = fundamental(2);
  const Weight l1 = shifted(lambda, w1), u1 = shifted(mu, w1);  // (lambda-w1, mu-w1)
  const Weight l2 = shifted(lambda, w2), u2 = shifted(mu, w2);  // (lambda-w2, mu-w2)
  const Int gap = std::min({2 * (m1 + m2), 2 * (n1 + n2), m1 + n1}) + 1;
  const bool regime_a = std::min(m2, n2) > 0;
  const bool regime_b = std::min(m2, n2) == 0 && std::min(m1, n1) > 0;

  // T side.
  const Points T = T_points(LieType::C2, lambda, mu);
  const Points S = S_points(LieType::C2, lambda, mu);
  report.expect("|S^C| = |T^C|", count(T), count(S));

  const Points T_1 = T_points(LieType::C2, l1, u1);
  expect_injection(report, "T^C(l-w1,m-w1) -> T^C, (a+1,b+1,c,d)", T_1,
                   [](const LatticePoint& p) { return pt({p[0] + 1, p[1] + 1, p[2], p[3]}); }, T,
                   [](const LatticePoint& p) { return p[0] > 0 && p[1] > 0; });
  const Points T1 = union_points(report, sets::T1(lambda, mu), "^1T^C");
  expect_same_set(report, "^1T^C = T^C minus the image", T1,
                  filter(T, [](const LatticePoint& p) { return !(p[0] > 0 && p[1] > 0); }));
  report.expect("|T^C| = |T^C(l-w1,m-w1)| + |^1T^C|", count(T), count(T_1) + count(T1));

  const Points T1_2 = union_points(report, sets::T1(l2, u2), "^1T^C(l-w2,m-w2)");
  const auto cd_shift = [](const LatticePoint& p) { return pt({p[0], p[1], p[2] + 1, p[3] + 1}); };
  expect_injection(report, "^1T^C(l-w2,m-w2) -> ^1T^C, (a,b,c+1,d+1)", T1_2, cd_shift, T1);
  const Points T2 = union_points(report, sets::T2(lambda, mu), "^2T^C");
  {
    const PointSet img = to_set(map_points(T1_2, cd_shift));
    expect_same_set(report, "^2T^C = ^1T^C minus the image", T2,
                    filter(T1, [&](const LatticePoint& p) { return !img.count(p); }));
  }
  report.expect("|^1T^C| = |^1T^C(l-w2,m-w2)| + |^2T^C|", count(T1), count(T1_2) + count(T2));
  report.expect("|T^C| = |T^C(l-w1,m-w1)| + |^1T^C(l-w2,m-w2)| + |^2T^C|", count(T),
                count(T_1) + count(T1_2) + count(T2));

  // S side.
  const Points S_1 = S_points(LieType::C2, l1, u1);
  expect_injection(report, "S^C(l-w1,m-w1) -> S^C, (a+1,b,c,d)", S_1,
                   [](const LatticePoint& p) { return pt({p[0] + 1, p[1], p[2], p[3]}); }, S,
                   [](const LatticePoint& p) { return p[0] > 0; });
  const Points S1 = points(sets::S1(lambda, mu));
  expect_same_set(report, "^1S^C = {(b,c,d) : (0,b,c,d) in S^C}", S1,
                  map_points(filter(S, [](const LatticePoint& p) { return p[0] == 0; }),
                        [](const LatticePoint& p) { return pt({p[1], p[2], p[3]}); }));
  report.expect("|S^C| = |S^C(l-w1,m-w1)| + |^1S^C|", count(S), count(S_1) + count(S1));

  const Points S1_2 = points(sets::S1(l2, u2));
  const auto s_cd_shift = [](const LatticePoint& p) { return pt({p[0], p[1] + 1, p[2] + 1}); };
  expect_injection(report, "^1S^C(l-w2,m-w2) -> ^1S^C, (b,c+1,d+1)", S1_2, s_cd_shift, S1);
  const Points S2 = union_points(report, sets::S2(lambda, mu), "^2S^C");
  {
    const PointSet img = to_set(map_points(S1_2, s_cd_shift));
    expect_same_set(report, "^2S^C = ^1S^C minus the image", S2,
                    filter(S1, [&](const LatticePoint& p) { return !img.count(p); }));
  }
  report.expect("|^1S^C| = |^1S^C(l-w2,m-w2)| + |^2S^C|", count(S1), count(S1_2) + count(S2));
  report.expect("|S^C| = |S^C(l-w1,m-w1)| + |^1S^C(l-w2,m-w2)| + |^2S^C|", count(S),
                count(S_1) + count(S1_2) + count(S2));

  if (regime_a) {
    // Difference formulas with min{m2,n2} > 0.
    const Points T2_2 = union_points(report, sets::T2(l2, u2), "^2T^C(l-w2,m-w2)");
    report.expect("|^2T^C| - |^2T^C(l-w2,m-w2)| = min{2(m1+m2),2(n1+n2),m1+n1}+1", gap, count(T2) - count(T2_2));

    const auto piece_diff = [&](std::size_t i) {
      return static_cast<Int>(count_lattice_points(sets::T2(lambda, mu)[i])) -
             static_cast<Int>(count_lattice_points(sets::T2(l2, u2)[i]));
    };
    const auto pos = [](Int x) { return std::max<Int>(x, 0); };
    report.expect("A1 = 1 + min{n1,m2}", 1 + std::min(n1, m2), piece_diff(0));
    report.expect("A2 = (min{m1,n1+2n2} - (n2-m2)+)+ + min{m1,n2-m2}+",
                  pos(std::min(m1, n1 + 2 * n2) - pos(n2 - m2)) + pos(std::min(m1, n2 - m2)), piece_diff(1));
    report.expect("A3 = min{n1-m2,m2}+", pos(std::min(n1 - m2, m2)), piece_diff(2));
    report.expect("A4 = min{m1,n1-2m2}+", pos(std::min(m1, n1 - 2 * m2)), piece_diff(3));
    const Int a134 = piece_diff(0) + piece_diff(2) + piece_diff(3);
    const Int a134_printed = n1 < 2 * m2 ? n1 : std::min(n1, m1 + 2 * m2);
    report.expect("A1+A3+A4 = (n1 if n1<2m2, else min{n1,m1+2m2}) + 1", a134_printed + 1, a134);
    report.observe("A1+A3+A4 = n1 if n1<2m2, else min{n1,m1+2m2}", a134_printed, a134);
    report.expect("A2 = m1 if m1<n2-m2, else min{m1,n1+2n2}", m1 < n2 - m2 ? m1 : std::min(m1, n1 + 2 * n2),
                  piece_diff(1));

    const Points S2_2 = union_points(report, sets::S2(l2, u2), "^2S^C(l-w2,m-w2)");
    const auto s_map = [](const LatticePoint& p) {
      return p[1] == 0 ? pt({p[0], 0, p[2] + 1}) : pt({p[0] + 2, p[1] - 1, 0});
    };
    expect_injection(report, "^2S^C(l-w2,m-w2) -> ^2S^C, (b,0,d)->(b,0,d+1), (b,c,0)->(b+2,c-1,0)", S2_2, s_map, S2,
                     [](const LatticePoint& p) { return !(p[2] == 0 && p[0] <= 1); });
    const Points S3 = points(sets::S3(lambda, mu));
    expect_same_set(report, "^3S^C = {(b,c) : (b,c,0) in ^2S^C, b <= 1}", S3,
                    map_points(filter(S2, [](const LatticePoint& p) { return p[2] == 0 && p[0] <= 1; }),
                          [](const LatticePoint& p) { return pt({p[0], p[1]}); }));
    report.expect("|^3S^C| = min{2(m1+m2),2(n1+n2),m1+n1}+1", gap, count(S3));
    report.expect("|^2S^C| - |^2S^C(l-w2,m-w2)| = min{2(m1+m2),2(n1+n2),m1+n1}+1", gap, count(S2) - count(S2_2));
  }
  if (regime_b) {
    // With min{m2,n2} = 0 < min{m1,n1} the difference is taken along w1.
    const Int value = std::min(n1, m2) + std::min(m1, n2) + 1;
    const Points T2_1 = union_points(report, sets::T2(l1, u1), "^2T^C(l-w1,m-w1)");
    report.expect("|^2T^C| - |^2T^C(l-w1,m-w1)| = min{n1,m2}+min{m1,n2}+1", value, count(T2) - count(T2_1));
    const Points S2_1 = union_points(report, sets::S2(l1, u1), "^2S^C(l-w1,m-w1)");
    report.expect("^2S^C has only points (b,c,0) (points with d > 0)", 0,
                  count(filter(S2, [](const LatticePoint& p) { return p[2] > 0; })));
    expect_injection(report, "^2S^C(l-w1,m-w1) -> ^2S^C, (b,c,0)->(b,c+1,0)", S2_1,
                     [](const LatticePoint& p) { return pt({p[0], p[1] + 1, p[2]}); }, S2);
    report.expect("|^2S^C| - |^2S^C(l-w1,m-w1)| = min{n1,m2}+min{m1,n2}+1", value, count(S2) - count(S2_1));
  }
  if (std::min(m1, n1) == 0 && std::min(m2, n2) == 0) {
    report.expect("|^2T^C| = |^2S^C| with min{m1,n1} = min{m2,n2} = 0", count(T2), count(S2));
  }
  if (m2 == 0 && n1 == 0 && n2 > 0) {
    const Weight u = mu - w2;
    const Int value = std::max<Int>(std::min(n2, m1 - n2) + 1, 0);
    report.expect("|S^C| - |S^C(l,m-w2)| = (min{n2,m1-n2}+1)+", value,
                  count(S) - count(S_points(LieType::C2, lambda, u)));
    report.expect("|T^C| - |T^C(l,m-w2)| = (min{n2,m1-n2}+1)+", value,
                  count(T) - count(T_points(LieType::C2, lambda, u)));
  }
  return report;
}

}  // namespace rank2
