#include "rank2/lemma_verifier.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "lemma_support.hpp"
#include "rank2/errors.hpp"

namespace rank2 {

LemmaCheck& LemmaReport::expect(std::string label, Int expected, Int actual) {
  return checks.emplace_back(LemmaCheck{std::move(label), expected, actual, {}});
}

LemmaCheck& LemmaReport::observe(std::string label, Int expected, Int actual) {
  return observations.emplace_back(LemmaCheck{std::move(label), expected, actual, {}});
}

bool LemmaReport::pass() const { return first_failure() == nullptr; }

std::size_t LemmaReport::failure_count() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed(); }));
}

const LemmaCheck* LemmaReport::first_failure() const {
  const auto it = std::find_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed(); });
  return it == checks.end() ? nullptr : &*it;
}

LemmaReport check_lemmas(LieType type, const Weight& lambda, const Weight& mu) {
  switch (type) {
    case LieType::A2: return check_A2_class_bijection(lambda, mu);
    case LieType::C2: return check_C2_recursions(lambda, mu);
    case LieType::G2: return check_G2_recursions(lambda, mu);
  }
  throw InvariantViolation("unknown Lie type");
}

namespace {

using detail::Points;

struct ClassMembers {
  std::vector<Int> s;  // class parameter l of the S points
  std::vector<Int> t;
};

// Class of (a,b,c) under (a+l, b-l, c+l), keyed by the invariants (a+b, b+c).
// Classes with a+b <= b+c are parametrized by a (representative (0,b,c)),
// the others by c (representative (a,b,0)).
using ClassKey = std::pair<Int, Int>;

ClassKey class_key(const LatticePoint& p) { return {p[0] + p[1], p[1] + p[2]}; }
bool a_family(const ClassKey& k) { return k.first <= k.second; }
Int class_parameter(const ClassKey& k, const LatticePoint& p) { return a_family(k) ? p[0] : p[2]; }

struct Ranges {
  Int r, R1, R2;
};

// Formulas for the class of (0,b,c).
Ranges class_ranges(Int m1, Int m2, Int n1, Int n2, Int b, Int c) {
  const Int r = std::min({b, m1, n2 - c});
  const Int R1 = std::max({b - std::min(m2, n1), b - c - n1, b + c - m2});
  const Int R2 = std::min({std::min(m1, n1), std::min(m2, n2) - c, std::min(m1 + m2, n1 + n2) - b - c, m1 + n1 - b,
                           m2 + n2 - 2 * c - b, b});
  return {r, R1, R2};
}

// Mismatches between a sorted parameter list and the interval [lo, hi].
Int interval_mismatches(const std::vector<Int>& got, Int lo, Int hi) {
  Int mismatches = 0;
  for (Int l : got) mismatches += (l < lo || l > hi);
  const Int width = std::max<Int>(hi - lo + 1, 0);
  return mismatches + std::abs(width - (static_cast<Int>(got.size()) - mismatches));
}

std::string class_name(const ClassKey& k) {
  return "class (a+b,b+c)=(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")";
}

}  // namespace

LemmaReport check_A2_class_bijection(const Weight& lambda, const Weight& mu) {
  require_dominant(lambda, "lambda");
  require_dominant(mu, "mu");
  LemmaReport report{"A2 class bijection", LieType::A2, lambda, mu, {}, {}, {}};
  const Int m1 = lambda[0], m2 = lambda[1], n1 = mu[0], n2 = mu[1];
  const Points S = enumerate_S(LieType::A2, lambda, mu);
  const Points T = enumerate_T_A(lambda, mu);
  report.expect("|S^A| = |T^A|", detail::count(S), detail::count(T));

  std::map<ClassKey, ClassMembers> classes;
  for (const auto& p : S) {
    const auto k = class_key(p);
    classes[k].s.push_back(class_parameter(k, p));
  }
  for (const auto& p : T) {
    const auto k = class_key(p);
    classes[k].t.push_back(class_parameter(k, p));
  }

  for (auto& [key, members] : classes) {
    std::sort(members.s.begin(), members.s.end());
    std::sort(members.t.begin(), members.t.end());
    const std::string name = class_name(key);
    report.expect(name + ": |M cap S| = |M cap T|", static_cast<Int>(members.s.size()),
                  static_cast<Int>(members.t.size()));

    const bool has_rep = !members.s.empty() && members.s.front() == 0;
    if (a_family(key)) {
      // Representative (0, b, c).
      const Int b = key.first, c = key.second - key.first;
      if (members.s.empty()) continue;
      report.expect(name + ": contains the S-point (0,b,c)", 1, has_rep ? 1 : 0);
      const auto [r, R1, R2] = class_ranges(m1, m2, n1, n2, b, c);
      report.expect(name + ": M cap S = {l : 0 <= l <= R2} (mismatches)", 0, interval_mismatches(members.s, 0, R2));
      report.expect(name + ": M cap T = {l : R1 <= l <= r} (mismatches)", 0,
                    interval_mismatches(members.t, std::max<Int>(R1, 0), r));
      report.expect(name + ": R1 = b - min{n1, m2-c}", b - std::min(n1, m2 - c), R1);
      report.expect(name + ": min{r, r-R1} = R2", std::min(r, r - R1), R2);
      report.expect(name + ": R2+1 = r-max(R1,0)+1", r - std::max<Int>(R1, 0) + 1, R2 + 1);
      report.observe(name + ": R2+1 = r-R1+1 as printed", r - R1 + 1, R2 + 1);
    }
    if (!a_family(key) || key.first == key.second) {
      // Representative (a, b, 0): the formulas under a <-> c with
      // (m1, m2, n1, n2) -> (n2, n1, m2, m1).
      if (members.s.empty()) continue;
      const Int b = key.second, a = key.first - key.second;
      const auto [r, R1, R2] = class_ranges(n2, n1, m2, m1, b, a);
      report.observe(name + ": mirrored S-range [0, R2] (mismatches)", 0, interval_mismatches(members.s, 0, R2));
      report.observe(name + ": mirrored T-range [max(R1,0), r] (mismatches)", 0,
                     interval_mismatches(members.t, std::max<Int>(R1, 0), r));
      report.observe(name + ": mirrored R2+1 = r-max(R1,0)+1", r - std::max<Int>(R1, 0) + 1, R2 + 1);
    }
  }
  return report;
}

}  // namespace rank2
