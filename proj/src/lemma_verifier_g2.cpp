#include <algorithm>
#include <utility>

#include "lemma_support.hpp"
#include "rank2/errors.hpp"
#include "rank2/lemma_verifier.hpp"

namespace rank2 {

using namespace detail;
namespace sets = lemma_sets::g2;

namespace {

using P = const LatticePoint&;

// |^3S^G| for m2 = 0 as a closed sum over i in [0, M], M = min{m1, n1}.
Int base_step_sum(Int m1, Int n1) {
  const Int M = std::min(m1, n1);
  Int total = 0;
  for (Int i = 0; i <= M; ++i) total += std::min(M + 1 - i, (m1 + n1 - 2 * i) / 3 + 1);
  return total;
}

// Y^1 and Y^2 of (lambda, mu) stored side by side as a union keyed by arity.
struct YSets {
  Points y1, y2;
  Int size() const { return count(y1) + count(y2); }
};

YSets y_sets(const Weight& lambda, const Weight& mu) {
  return {points(sets::Y1(lambda, mu)), points(sets::Y2(lambda, mu))};
}

// The printed injection of ^3T^G sets, realized on Y^1 and Y^2 as y -> y+1.
void expect_y_injection(LemmaReport& report, const std::string& from, const YSets& source, const YSets& target) {
  expect_injection(report, "Y^1" + from + " -> Y^1, (b,c,y+1)", source.y1, [](P p) { return pt({p[0], p[1], p[2] + 1}); },
                   target.y1);
  expect_injection(report, "Y^2" + from + " -> Y^2, (a,y+1)", source.y2, [](P p) { return pt({p[0], p[1] + 1}); },
                   target.y2);
}

}  // namespace

LemmaReport check_G2_recursions(const Weight& lambda_in, const Weight& mu_in) {
  require_admissible(LieType::G2, lambda_in, mu_in);
  LemmaReport report{"G2 recursions", LieType::G2, lambda_in, mu_in, {}, {}, {}};
  Weight lambda = lambda_in, mu = mu_in;
  if (mu[1] > 0) {
    std::swap(lambda, mu);
    report.notes.push_back("lambda and mu swapped so that n2 = 0");
  }
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0];
  const Int top = m1 + 2 * m2;
  const Weight w1 = fundamental(1), w2 = fundamental(2);
  const Weight l1 = lambda - w1, u1 = mu - w1;       // (lambda-w1, mu-w1)
  const Weight lsh = lambda + w1 - w2, ush = mu - w1;  // (lambda+w1-w2, mu-w1)

  // T side.
  const Points T = T_points(LieType::G2, lambda, mu);
  const Points S = S_points(LieType::G2, lambda, mu);
  report.expect("|S^G| = |T^G|", count(T), count(S));
  report.expect("|T^G| = standard dominant tableaux", count(T), littelmann_tableau_count(lambda, mu));

  const Points T_1 = T_points(LieType::G2, l1, u1);
  expect_injection(report, "T^G(l-w1,m-w1) -> T^G, f+1", T_1, [](P p) { return pt({p[0], p[1], p[2], p[3], p[4], p[5] + 1}); },
                   T, [](P p) { return p[5] > 0; });
  const Points T1 = points(sets::T1(lambda, mu));
  expect_same_set(report, "^1T^G = {(a,b,c,d,e) : (a,b,c,d,e,0) in T^G}", T1,
                  map_points(filter(T, [](P p) { return p[5] == 0; }), [](P p) { return pt({p[0], p[1], p[2], p[3], p[4]}); }));
  report.expect("|T^G| = |T^G(l-w1,m-w1)| + |^1T^G|", count(T), count(T_1) + count(T1));

  const Points T1sh = points(sets::T1(lsh, ush));
  expect_injection(report, "^1T^G(l+w1-w2,m-w1) -> ^1T^G, e+1", T1sh, [](P p) { return pt({p[0], p[1], p[2], p[3], p[4] + 1}); },
                   T1, [](P p) { return p[4] > 0; });
  const Points T2 = points(sets::T2(lambda, mu));
  expect_same_set(report, "^2T^G = {(a,b,c,m2-b+d) : e = 0 in ^1T^G}", T2,
                  map_points(filter(T1, [](P p) { return p[4] == 0; }), [m2](P p) { return pt({p[0], p[1], p[2], m2 - p[1] + p[3]}); }));
  report.expect("|^1T^G| = |^1T^G(l+w1-w2,m-w1)| + |^2T^G|", count(T1), count(T1sh) + count(T2));

  const Points T2_1 = points(sets::T2(l1, u1));
  const auto on_wall = [top](P p) { return p[2] + 2 * p[1] + 2 * p[3] == top; };
  expect_injection(report, "^2T^G(l-w1,m-w1) -> ^2T^G, a+1", T2_1, [](P p) { return pt({p[0] + 1, p[1], p[2], p[3]}); }, T2,
                   [&](P p) { return p[0] > 0 && !on_wall(p); });
  const Points T3 = union_points(report, sets::T3(lambda, mu), "^3T^G");
  expect_same_set(report, "^3T^G = points of ^2T^G with a = 0 or c+2b+2y = m1+2m2", T3,
                  filter(T2, [&](P p) { return p[0] == 0 || on_wall(p); }));
  report.expect("|^2T^G| = |^2T^G(l-w1,m-w1)| + |^3T^G|", count(T2), count(T2_1) + count(T3));
  report.expect("|T^G| = |T^G(l-w1,m-w1)| + |^1T^G(l+w1-w2,m-w1)| + |^2T^G(l-w1,m-w1)| + |^3T^G|", count(T),
                count(T_1) + count(T1sh) + count(T2_1) + count(T3));

  const YSets Y = y_sets(lambda, mu);
  report.expect("|^3T^G| = |Y^1| + |Y^2|", count(T3), Y.size());
  expect_same_set(report, "Y^1 = {(b,c,y) : a = 0 in ^3T^G}", Y.y1,
                  map_points(filter(T3, [](P p) { return p[0] == 0; }), [](P p) { return pt({p[1], p[2], p[3]}); }));
  report.expect("|Y^2| = |{a > 0 in ^3T^G}|", count(filter(T3, [](P p) { return p[0] > 0; })), count(Y.y2));

  // S side.
  const Points S_1 = S_points(LieType::G2, l1, u1);
  expect_injection(report, "S^G(l-w1,m-w1) -> S^G, (a+1,b,c,d,e+1,f)", S_1,
                   [](P p) { return pt({p[0] + 1, p[1], p[2], p[3], p[4] + 1, p[5]}); }, S,
                   [](P p) { return p[0] > 0 && p[4] > 0; });
  const Points R1 = points(sets::R1(lambda, mu));
  const Points R2 = points(sets::R2(lambda, mu));
  report.expect("points of S^G with f > 0", 0, count(filter(S, [](P p) { return p[5] > 0; })));
  expect_same_set(report, "R^1 = {(b,c,d,e) : a = 0 in S^G}", R1,
                  map_points(filter(S, [](P p) { return p[0] == 0; }), [](P p) { return pt({p[1], p[2], p[3], p[4]}); }));
  expect_same_set(report, "R^2 = {(a-1,b,c,d) : a > 0, e = 0 in S^G}", R2,
                  map_points(filter(S, [](P p) { return p[0] > 0 && p[4] == 0; }),
                        [](P p) { return pt({p[0] - 1, p[1], p[2], p[3]}); }));
  report.expect("|S^G| = |S^G(l-w1,m-w1)| + |R^1| + |R^2|", count(S), count(S_1) + count(R1) + count(R2));

  const Points R1sh = points(sets::R1(lsh, ush));
  const Points R2sh = points(sets::R2(lsh, ush));
  expect_injection(report, "R^1(l+w1-w2,m-w1) -> R^1, e+1", R1sh, [](P p) { return pt({p[0], p[1], p[2], p[3] + 1}); }, R1,
                   [](P p) { return p[3] > 0; });
  expect_injection(report, "R^2(l+w1-w2,m-w1)(a>0) -> R^2, (a-1,b+1,c,d+1)", filter(R2sh, [](P p) { return p[0] > 0; }),
                   [](P p) { return pt({p[0] - 1, p[1] + 1, p[2], p[3] + 1}); }, R2,
                   [](P p) { return p[1] > 0 && p[3] > 0; });
  const Points R1_e0 = filter(R1, [](P p) { return p[3] == 0; });
  expect_injection(report, "R^2(l+w1-w2,m-w1)(a=0) -> R^1(e=0), (b+1,c,d+1)", filter(R2sh, [](P p) { return p[0] == 0; }),
                   [](P p) { return pt({p[1] + 1, p[2], p[3] + 1, 0}); }, R1_e0,
                   [](P p) { return p[0] > 0 && p[2] > 0; });

  const Points Q1 = points(sets::Q1(lambda, mu));
  const Points Q2 = points(sets::Q2(lambda, mu));
  {
    Points from_r = map_points(filter(R1_e0, [](P p) { return p[0] == 0; }), [](P p) { return pt({0, p[1], p[2]}); });
    const Points r2 = map_points(filter(R2, [](P p) { return p[1] == 0; }), [](P p) { return pt({p[0] + 1, p[2], p[3]}); });
    from_r.insert(from_r.end(), r2.begin(), r2.end());
    expect_same_set(report, "Q^1 = R^1(e=0,b=0) u R^2(b=0) with a shifted by one", Q1, from_r);
  }
  {
    Points from_r = map_points(filter(R1_e0, [](P p) { return p[2] == 0 && p[0] > 0; }),
                          [](P p) { return pt({0, p[0] - 1, p[1]}); });
    const Points r2 = map_points(filter(R2, [](P p) { return p[3] == 0 && p[1] > 0; }),
                            [](P p) { return pt({p[0] + 1, p[1] - 1, p[2]}); });
    from_r.insert(from_r.end(), r2.begin(), r2.end());
    expect_same_set(report, "Q^2 = R^1(e=0,d=0,b>0) u R^2(d=0,b>0) with a, b shifted by one", Q2, from_r);
  }
  const Int s2_size = count(filter(R2, [](P p) { return p[1] * p[3] == 0; })) +
                      count(filter(R1_e0, [](P p) { return p[0] * p[2] == 0; }));
  report.expect("|R^2(bd=0)| + |R^1(e=0,bd=0)| = |Q^1| + |Q^2|", s2_size, count(Q1) + count(Q2));
  report.expect("|^1S^G| = |^1S^G(l+w1-w2,m-w1)| + |^2S^G|", count(R1) + count(R2),
                count(R1sh) + count(R2sh) + count(Q1) + count(Q2));

  const Points Q1_1 = points(sets::Q1(l1, u1));
  const Points Q2_1 = points(sets::Q2(l1, u1));
  const auto a_shift = [](P p) { return pt({p[0] + 1, p[1], p[2]}); };
  const auto a_positive = [](P p) { return p[0] > 0; };
  expect_injection(report, "Q^1(l-w1,m-w1) -> Q^1, a+1", Q1_1, a_shift, Q1, a_positive);
  expect_injection(report, "Q^2(l-w1,m-w1) -> Q^2, a+1", Q2_1, a_shift, Q2, a_positive);
  const auto s3_pieces = sets::S3(lambda, mu);
  const Points S3a = points(s3_pieces[0]);
  const Points S3b = points(s3_pieces[1]);
  const auto drop_a = [](P p) { return pt({p[1], p[2]}); };
  const auto a_zero = [](P p) { return p[0] == 0; };
  expect_same_set(report, "^3S^G (c,d) = {a = 0 in Q^1}", S3a, map_points(filter(Q1, a_zero), drop_a));
  expect_same_set(report, "^3S^G (b,c) = {a = 0 in Q^2}", S3b, map_points(filter(Q2, a_zero), drop_a));
  const Int S3 = count(S3a) + count(S3b);
  report.expect("|^2S^G| = |^2S^G(l-w1,m-w1)| + |^3S^G|", count(Q1) + count(Q2), count(Q1_1) + count(Q2_1) + S3);
  report.expect("|S^G| = |S^G(l-w1,m-w1)| + |^1S^G(l+w1-w2,m-w1)| + |^2S^G(l-w1,m-w1)| + |^3S^G|", count(S),
                count(S_1) + count(R1sh) + count(R2sh) + count(Q1_1) + count(Q2_1) + S3);
  report.expect("|^3S^G| = |^3T^G|", count(T3), S3);

  if (m2 == 0) {
    const Int M = std::min(m1, n1);
    const Int sum = base_step_sum(m1, n1);
    report.expect("base step: |^3S^G| = sum_i min{M+1-i, floor((m1+n1-2i)/3)+1}", sum, S3);
    report.expect("base step: |^3T^G| = sum_i min{M+1-i, floor((m1+n1-2i)/3)+1}", sum, count(T3));
    if (M == 1) report.expect("base step, M = 1: |^3T^G| = 2 if m1 = n1 = 1, else 3", m1 == 1 && n1 == 1 ? 2 : 3, count(T3));
    if (M >= 2) {
      const Weight lb = lambda - Int{2} * w1, ub = mu - w1;
      const YSets Yb = y_sets(lb, ub);
      expect_y_injection(report, "(l-2w1,m-w1)", Yb, Y);
      const Points T3b = union_points(report, sets::T3(lb, ub), "^3T^G(l-2w1,m-w1)");
      report.expect("base step: |^3T^G| - |^3T^G(l-2w1,m-w1)| = min{n1,2m1}+1", std::min(n1, 2 * m1) + 1,
                    count(T3) - count(T3b));
      report.expect("base step: points of ^3T^G with y = 0", std::min(n1, 2 * m1) + 1,
                    count(filter(T3, [](P p) { return p[3] == 0; })));
    }
  } else {
    const Weight l2 = lambda - w2;
    const auto s3_prev = sets::S3(l2, mu);
    const Int k = S3 - static_cast<Int>(count_lattice_points(s3_prev[0]) + count_lattice_points(s3_prev[1]));
    const Int z1 = static_cast<Int>(count_lattice_points(sets::Z1(lambda, mu)));
    const Int z2 = static_cast<Int>(count_lattice_points(sets::Z2(lambda, mu)));
    const Int z3 = static_cast<Int>(count_lattice_points(sets::Z3(lambda, mu)));
    report.expect("k = |^3S^G| - |^3S^G(l-w2,m)| = |Z^1|+|Z^2|+|Z^3|", z1 + z2 + z3, k);
    const Int z1f = n1 < m1 + 2 * m2 ? 0 : (n1 < 2 * m1 + 3 * m2 ? n1 - m1 - 2 * m2 + 1 : m1 + m2 + 1);
    const Int z2f = n1 < m1 + m2 ? 0 : (n1 < m1 + 2 * m2 ? n1 - m1 - m2 : m2 - 1);
    const Int z3f = n1 < m2 ? 0 : std::min(m1, n1 - m2) + 1;
    const Int kf = n1 < m2 ? 0 : (n1 < 2 * m1 + 3 * m2 ? n1 - m2 + 1 : 2 * (m1 + m2) + 1);
    report.expect("|Z^1| case formula", z1f, z1);
    report.expect("|Z^2| case formula", z2f, z2);
    report.expect("|Z^3| case formula", z3f, z3);
    report.expect("k case formula", kf, k);

    const YSets Yp = y_sets(l2, mu);
    expect_y_injection(report, "(l-w2,m)", Yp, Y);
    const Points T3p = union_points(report, sets::T3(l2, mu), "^3T^G(l-w2,m)");
    const Int m = count(T3) - count(T3p);
    const auto m_sets = sets::M(lambda, mu);
    const Int s1 = static_cast<Int>(count_lattice_points(m_sets[0]));
    const Int s2 = static_cast<Int>(count_lattice_points(m_sets[1]));
    report.expect("m = |^3T^G| - |^3T^G(l-w2,m)| = cardinality of the two m-sets", s1 + s2, m);
    report.expect("first m-set: 0 if n1<m2, else min{n1-m2,m1}+1", n1 < m2 ? 0 : std::min(n1 - m2, m1) + 1, s1);
    report.expect("second m-set: 0 if n1<m1+m2, else min{n1-m2-m1,m1+2m2}",
                  n1 < m1 + m2 ? 0 : std::min(n1 - m2 - m1, m1 + 2 * m2), s2);
    report.expect("k = m", k, m);
  }
  return report;
}

}  // namespace rank2
