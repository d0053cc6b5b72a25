#include "rank2/lr_oracle.hpp"

#include <array>
#include <string>
#include <utility>

#include "rank2/checked.hpp"
#include "rank2/errors.hpp"

namespace rank2 {

Int TensorDecomposition::total_multiplicity() const {
  Int s = 0;
  for (const auto& [nu, m] : entries) s = checked::add(s, m);
  return s;
}

TensorDecomposition klimyk_decompose(LieType type, const Weight& lambda, const Weight& mu) {
  require_dominant(lambda, "lambda");
  require_dominant(mu, "mu");
  std::map<Weight, Int> signed_sum;
  for (const auto& [eta, m] : weight_multiplicities(type, mu)) {
    const auto [xi, sign] = dominant_conjugate_signed(type, lambda + eta + kRho);
    if (sign == 0) continue;
    auto& slot = signed_sum[xi - kRho];
    slot = checked::add(slot, sign * m);
  }
  TensorDecomposition out;
  for (const auto& [nu, m] : signed_sum) {
    if (m < 0) throw InvariantViolation("Klimyk sum produced a negative multiplicity");
    if (!is_dominant(nu)) throw InvariantViolation("Klimyk sum produced a non-dominant highest weight");
    if (m > 0) out.entries[nu] = m;
  }
  return out;
}

IneqSystem build_T_A_system(const Weight& lambda, const Weight& mu) {
  require_dominant(lambda, "lambda");
  require_dominant(mu, "mu");
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0], n2 = mu[1];
  IneqSystem t("T^A", {"a", "b", "c"});
  t.le({1, 0, 0}, m1, "a <= m1")
      .le_min({0, 1, 0}, m2, n1, "b <= min{m2,n1}")
      .le({0, 0, 1}, n2, "c <= n2")
      .le({1, 1, -1}, n1, "a+b-c <= n1")
      .le({-1, 1, 1}, m2, "b+c-a <= m2")
      .le({2, 1, -1}, m1 + n1, "2a+b-c <= m1+n1")
      .le({-1, 1, 2}, m2 + n2, "2c+b-a <= m2+n2");
  return t;
}

IneqSystem build_T_C_system(const Weight& lambda, const Weight& mu) {
  require_dominant(lambda, "lambda");
  require_dominant(mu, "mu");
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0], n2 = mu[1];
  IneqSystem t("T^C", {"a", "b", "c", "d"});
  t.le({1, 0, 0, 0}, m1, "a <= m1")
      .le({0, 0, 1, 0}, m2, "c <= m2")
      .le({0, 0, 0, 1}, n2, "d <= n2")
      .le({0, 1, 0, 0}, n1, "b <= n1")
      .le({-1, 1, 1, 0}, m2, "c+b-a <= m2")
      .le({-1, 1, 0, 1}, m2, "d+b-a <= m2")
      .le({1, 0, 2, -2}, n1, "a+2(c-d) <= n1")
      .le({0, 1, 2, -2}, n1, "b+2(c-d) <= n1");
  return t;
}

IneqSystem build_T_G_system(const Weight& lambda, const Weight& mu) {
  require_dominant(lambda, "lambda");
  require_dominant(mu, "mu");
  if (mu[1] != 0) throw HypothesisViolation("the G2 tableau model requires n2 = 0");
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0];
  IneqSystem t("T^G", {"a", "b", "c", "d", "e", "f"});
  t.le({1, 1, 1, 1, 1, 1}, n1, "a+b+c+d+e+f <= n1")
      .le({0, 0, 1, 0, 0, 0}, 1, "c <= 1")
      .le({0, 1, 0, -1, 1, 0}, m2, "b+e-d <= m2")
      .le({0, 0, 0, 0, 0, 1}, m1, "f <= m1")
      .le({0, 0, 0, 0, 1, 0}, m2, "e <= m2")
      .le({1, -2, 0, 2, -1, 1}, m1, "a-2b+2d-e+f <= m1")
      .le({0, 0, 1, 2, -1, 1}, m1, "c+f+2d-e <= m1");
  return t;
}

std::vector<LatticePoint> enumerate_T_A(const Weight& lambda, const Weight& mu) {
  return enumerate_lattice_points(build_T_A_system(lambda, mu));
}

std::vector<LatticePoint> enumerate_T_C(const Weight& lambda, const Weight& mu) {
  return enumerate_lattice_points(build_T_C_system(lambda, mu));
}

std::vector<LatticePoint> enumerate_T_G(const Weight& lambda, const Weight& mu) {
  require_dominant(lambda, "lambda");
  require_dominant(mu, "mu");
  if (std::min(lambda[1], mu[1]) > 0) {
    throw HypothesisViolation("the G2 tableau model requires min{m2,n2}=0");
  }
  if (mu[1] != 0) return enumerate_lattice_points(build_T_G_system(mu, lambda));
  return enumerate_lattice_points(build_T_G_system(lambda, mu));
}

std::vector<LatticePoint> enumerate_T(LieType type, const Weight& lambda, const Weight& mu) {
  switch (type) {
    case LieType::A2: return enumerate_T_A(lambda, mu);
    case LieType::C2: return enumerate_T_C(lambda, mu);
    case LieType::G2: return enumerate_T_G(lambda, mu);
  }
  return {};
}

namespace {

// Row values in order Q1, Q2, Q3, Q34, Q4, Q5, Q6.
constexpr std::array<std::array<int, 6>, 7> kRows{{
    {1, 1, 1, 1, 1, 1},
    {2, 2, 2, 2, 2, 2},
    {3, 3, 3, 3, 3, 3},
    {3, 3, 3, 4, 4, 4},
    {4, 4, 4, 4, 4, 4},
    {5, 5, 5, 5, 5, 5},
    {6, 6, 6, 6, 6, 6},
}};

struct Scan {
  bool all_prefixes;
  bool critical;
  bool printed_indices;
};

struct Probe {
  Int index;
  int functional;  // 1 or 2
};

// Builds the column from the block counts y (indexed like kRows) and scans
// its suffixes T_i from the bottom, tracking both dominance functionals.
Scan scan_column(const std::array<Int, 7>& y, Int m1, Int m2) {
  std::vector<int> column;
  for (std::size_t q = 0; q < kRows.size(); ++q) {
    for (Int k = 0; k < y[q]; ++k) column.insert(column.end(), kRows[q].begin(), kRows[q].end());
  }
  const Int y2 = y[1], y3 = y[2], y34 = y[3], y4 = y[4], y5 = y[5], y6 = y[6];
  // Suffixes realizing d1 = 6(m1-y6), d2 = 6(m2-y5), d2 = 6(m2-y5-y3+y4),
  // d1 = 6(m1-y34-2y4-y6+y5) and d1 = 6(m1-2y4-y2-y6+2y3+y5).
  const std::array<Probe, 5> critical{{{6 * y6, 1},
                                       {6 * (y6 + y5), 2},
                                       {6 * (y3 + y34 + y4 + y5 + y6), 2},
                                       {6 * (y4 + y5 + y6) + 3 * y34, 1},
                                       {6 * (y2 + y3 + y34 + y4 + y5 + y6), 1}}};
  // The index expressions exactly as printed alongside those values.
  const std::array<Probe, 5> printed{{{6 * y6, 1},
                                      {6 * (y6 + y5), 2},
                                      {6 * (y6 + y5 + y4 + y3), 2},
                                      {6 * (y3 + y34 + y4 + y5 + y6), 1},
                                      {6 * (y34 + y4 + y5 + y6), 1}}};

  std::vector<Int> d1(column.size() + 1), d2(column.size() + 1);
  std::array<Int, 7> count{};  // count[j] = number of j's in the suffix
  d1[0] = 6 * m1;
  d2[0] = 6 * m2;
  Scan result{true, true, true};
  const Int len = static_cast<Int>(column.size());
  for (Int i = 1; i <= len; ++i) {
    ++count[static_cast<std::size_t>(column[static_cast<std::size_t>(len - i)])];
    d1[static_cast<std::size_t>(i)] =
        count[1] + 2 * count[3] + count[5] - count[2] - count[6] - 2 * count[4] + 6 * m1;
    d2[static_cast<std::size_t>(i)] = count[2] + count[4] - count[5] - count[3] + 6 * m2;
    if (d1[static_cast<std::size_t>(i)] < 0 || d2[static_cast<std::size_t>(i)] < 0) result.all_prefixes = false;
  }
  auto probe_ok = [&](const Probe& p) {
    const auto i = static_cast<std::size_t>(p.index);
    return (p.functional == 1 ? d1[i] : d2[i]) >= 0;
  };
  for (const auto& p : critical) result.critical &= probe_ok(p);
  for (const auto& p : printed) result.printed_indices &= probe_ok(p);
  return result;
}

template <class Visit>
void for_each_block_tuple(Int n1, Visit&& visit) {
  // y1 is determined by the column length 6 n1.
  std::array<Int, 7> y{};
  for (y[1] = 0; y[1] <= n1; ++y[1])
    for (y[2] = 0; y[1] + y[2] <= n1; ++y[2])
      for (y[3] = 0; y[3] <= 1 && y[1] + y[2] + y[3] <= n1; ++y[3])
        for (y[4] = 0; y[1] + y[2] + y[3] + y[4] <= n1; ++y[4])
          for (y[5] = 0; y[1] + y[2] + y[3] + y[4] + y[5] <= n1; ++y[5])
            for (y[6] = 0; y[1] + y[2] + y[3] + y[4] + y[5] + y[6] <= n1; ++y[6]) {
              y[0] = n1 - (y[1] + y[2] + y[3] + y[4] + y[5] + y[6]);
              visit(y);
            }
}

IneqSystem reduced_tableau_system(Int m1, Int m2, Int n1) {
  IneqSystem t("standard dominant tableaux", {"y2", "y3", "y34", "y4", "y5", "y6"});
  t.le({0, 0, 1, 0, 0, 0}, 1, "y34 <= 1")
      .le({1, 1, 1, 1, 1, 1}, n1, "y2+y3+y34+y4+y5+y6 <= n1")
      .le({0, 0, 0, 0, 0, 1}, m1, "y6 <= m1")
      .le({0, 0, 0, 0, 1, 0}, m2, "y5 <= m2")
      .ge({0, -1, 0, 1, -1, 0}, -m2, "m2-y5-y3+y4 >= 0")
      .ge({0, 0, -1, -2, 1, -1}, -m1, "m1-y34-2y4-y6+y5 >= 0")
      .ge({-1, 2, 0, -2, 1, -1}, -m1, "m1-2y4-y2-y6+2y3+y5 >= 0");
  return t;
}

void require_tableau_domain(const Weight& lambda, const Weight& mu) {
  require_dominant(lambda, "lambda");
  require_dominant(mu, "mu");
  if (mu[1] != 0) throw HypothesisViolation("the tableau count requires n2 = 0");
}

}  // namespace

TableauCounts littelmann_tableau_counts(const Weight& lambda, const Weight& mu) {
  require_tableau_domain(lambda, mu);
  TableauCounts c{0, 0, 0, 0};
  c.reduced = static_cast<Int>(count_lattice_points(reduced_tableau_system(lambda[0], lambda[1], mu[0])));
  for_each_block_tuple(mu[0], [&](const std::array<Int, 7>& y) {
    const Scan s = scan_column(y, lambda[0], lambda[1]);
    c.prefix_scan += s.all_prefixes;
    c.critical_scan += s.critical;
    c.printed_index_scan += s.printed_indices;
  });
  return c;
}

Int littelmann_tableau_count(const Weight& lambda, const Weight& mu) {
  const TableauCounts c = littelmann_tableau_counts(lambda, mu);
  if (c.reduced != c.prefix_scan || c.prefix_scan != c.critical_scan) {
    throw InvariantViolation("tableau counts disagree: reduced " + std::to_string(c.reduced) + ", prefix scan " +
                             std::to_string(c.prefix_scan) + ", critical scan " +
                             std::to_string(c.critical_scan));
  }
  return c.reduced;
}

std::vector<LatticePoint> standard_dominant_tableau_tuples(const Weight& lambda, const Weight& mu) {
  require_tableau_domain(lambda, mu);
  std::vector<LatticePoint> out;
  for_each_block_tuple(mu[0], [&](const std::array<Int, 7>& y) {
    if (scan_column(y, lambda[0], lambda[1]).all_prefixes) {
      out.push_back(make_point({y[1], y[2], y[3], y[4], y[5], y[6]}));
    }
  });
  return out;
}

}  // namespace rank2
