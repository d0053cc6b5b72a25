#include "rank2/verification.hpp"

#include <algorithm>
#include <sstream>

#include "rank2/fusion_polytope.hpp"

namespace rank2 {

namespace {

std::string show(const Weight& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

LemmaReport report_for(const PairData& d, std::string name) { return {std::move(name), d.type, d.lambda, d.mu, {}, {}, {}}; }

Int freudenthal_dim(LieType type, const Weight& w) {
  Int total = 0;
  for (const auto& [eta, m] : weight_multiplicities(type, w)) total += m;
  return total;
}

void merge(LemmaReport& into, const LemmaReport& from) {
  into.checks.insert(into.checks.end(), from.checks.begin(), from.checks.end());
  into.observations.insert(into.observations.end(), from.observations.begin(), from.observations.end());
  into.notes.insert(into.notes.end(), from.notes.begin(), from.notes.end());
}

}  // namespace

std::vector<WeightPair> sweep_pairs(LieType type, Int max) {
  std::vector<WeightPair> pairs;
  for (Int m1 = 0; m1 <= max; ++m1) {
    for (Int m2 = 0; m2 <= max; ++m2) {
      for (Int n1 = 0; n1 <= max; ++n1) {
        for (Int n2 = 0; n2 <= max; ++n2) {
          if (type == LieType::G2 && std::min(m2, n2) > 0) continue;
          pairs.emplace_back(Weight{m1, m2}, Weight{n1, n2});
        }
      }
    }
  }
  return pairs;
}

PairData compute_pair(LieType type, const Weight& lambda, const Weight& mu) {
  require_admissible(type, lambda, mu);
  return {type, lambda, mu, enumerate_S(type, lambda, mu), graded_decompose(type, lambda, mu),
          klimyk_decompose(type, lambda, mu)};
}

LemmaReport check_oracle_equality(const PairData& d) {
  LemmaReport r = report_for(d, "oracle equality");
  const TensorDecomposition at_one = at_q_equals_one(d.graded);
  Int mismatches = 0;
  std::string detail;
  auto note = [&](const Weight& nu, Int graded, Int oracle) {
    if (graded != oracle && mismatches++ == 0) {
      detail = "nu = " + show(nu) + ": graded " + std::to_string(graded) + ", oracle " + std::to_string(oracle);
    }
  };
  for (const auto& [nu, m] : d.oracle.entries) {
    const auto it = at_one.entries.find(nu);
    note(nu, it == at_one.entries.end() ? 0 : it->second, m);
  }
  for (const auto& [nu, m] : at_one.entries) {
    if (!d.oracle.entries.count(nu)) note(nu, m, 0);
  }
  r.expect("graded at q=1 = Klimyk (mismatched keys)", 0, mismatches).detail = detail;
  return r;
}

LemmaReport check_cardinalities(const PairData& d) {
  LemmaReport r = report_for(d, "cardinalities");
  const auto T = enumerate_T(d.type, d.lambda, d.mu);
  const Int total = d.oracle.total_multiplicity();
  r.expect("|S| = sum of Klimyk multiplicities", total, static_cast<Int>(d.S.size()));
  r.expect("|T| = sum of Klimyk multiplicities", total, static_cast<Int>(T.size()));
  return r;
}

LemmaReport check_dimensions(const PairData& d, bool with_freudenthal) {
  LemmaReport r = report_for(d, "dimensions");
  Int weyl_sum = 0, freudenthal_sum = 0;
  for (const auto& [nu, poly] : d.graded.entries) {
    weyl_sum += poly.at_one() * weyl_dim(d.type, nu);
    if (with_freudenthal) freudenthal_sum += poly.at_one() * freudenthal_dim(d.type, nu);
  }
  r.expect("sum mult(nu) dim V(nu) = dim V(lambda) dim V(mu) (Weyl)",
           weyl_dim(d.type, d.lambda) * weyl_dim(d.type, d.mu), weyl_sum);
  r.expect("dimension_check", 1, dimension_check(d.graded) ? 1 : 0);
  if (with_freudenthal) {
    r.expect("sum mult(nu) dim V(nu) = dim V(lambda) dim V(mu) (Freudenthal)",
             freudenthal_dim(d.type, d.lambda) * freudenthal_dim(d.type, d.mu), freudenthal_sum);
  }
  return r;
}

LemmaReport check_structure(const PairData& d) {
  LemmaReport r = report_for(d, "structure");
  const Weight top = d.lambda + d.mu;
  Int degree_zero_total = 0, top_in_degree_zero = 0;
  for (const auto& [nu, poly] : d.graded.entries) {
    degree_zero_total += poly.coeff(0);
    if (nu == top) top_in_degree_zero = poly.coeff(0);
  }
  r.expect("degree 0: total multiplicity", 1, degree_zero_total);
  r.expect("degree 0: multiplicity of V(lambda+mu)", 1, top_in_degree_zero);

  const GradedDecomposition swapped = graded_decompose(d.type, d.mu, d.lambda);
  r.expect("graded decomposition symmetric under lambda <-> mu", 1, swapped.entries == d.graded.entries ? 1 : 0);

  Int bad = 0;
  std::string detail;
  for (const auto& s : d.S) {
    const Weight nu = top - weight_statistic(d.type, s);
    if (!is_dominant(nu) && bad++ == 0) detail = "lambda+mu-wt(s) = " + show(nu);
  }
  r.expect("lambda+mu-wt(s) dominant (points violating)", 0, bad).detail = detail;
  return r;
}

LemmaReport verify_pair(LieType type, const Weight& lambda, const Weight& mu) {
  const PairData d = compute_pair(type, lambda, mu);
  LemmaReport r = report_for(d, "verify");
  merge(r, check_oracle_equality(d));
  merge(r, check_cardinalities(d));
  const bool small = std::max({lambda[0], lambda[1], mu[0], mu[1]}) <= 3;
  merge(r, check_dimensions(d, small));
  merge(r, check_structure(d));
  merge(r, check_lemmas(type, lambda, mu));
  return r;
}

}  // namespace rank2
