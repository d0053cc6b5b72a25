#ifndef RANK2_VERIFICATION_HPP
#define RANK2_VERIFICATION_HPP

#include <utility>
#include <vector>

#include "rank2/graded_fusion.hpp"
#include "rank2/lemma_verifier.hpp"

namespace rank2 {

using WeightPair = std::pair<Weight, Weight>;

/// All dominant (lambda, mu) with every coordinate <= max, in lexicographic
/// order of (m1, m2, n1, n2). For G2 only pairs with min{m2, n2} = 0.
std::vector<WeightPair> sweep_pairs(LieType type, Int max);

/// Everything computed once per pair and shared by the checks below.
struct PairData {
  LieType type;
  Weight lambda;
  Weight mu;
  std::vector<LatticePoint> S;
  GradedDecomposition graded;
  TensorDecomposition oracle;
};

PairData compute_pair(LieType type, const Weight& lambda, const Weight& mu);

/// Graded decomposition at q = 1 against the Klimyk oracle, key by key.
LemmaReport check_oracle_equality(const PairData& d);
/// |S| = |T| = sum of oracle multiplicities.
LemmaReport check_cardinalities(const PairData& d);
/// sum_nu mult(nu) dim V(nu) = dim V(lambda) dim V(mu) with Weyl dimensions,
/// and with Freudenthal weight-multiplicity sums when `with_freudenthal`.
LemmaReport check_dimensions(const PairData& d, bool with_freudenthal);
/// Degree-0 part is V(lambda+mu) once, lambda <-> mu symmetry of the graded
/// decomposition, lambda+mu-wt(s) dominant for every point.
LemmaReport check_structure(const PairData& d);

/// Every check above plus check_lemmas, merged into one report.
LemmaReport verify_pair(LieType type, const Weight& lambda, const Weight& mu);

}  // namespace rank2

#endif  // RANK2_VERIFICATION_HPP
