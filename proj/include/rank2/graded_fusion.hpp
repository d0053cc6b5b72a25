#ifndef RANK2_GRADED_FUSION_HPP
#define RANK2_GRADED_FUSION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rank2/lr_oracle.hpp"
#include "rank2/root_system.hpp"

namespace rank2 {

/// Graded multiplicity: coeffs()[r] is the multiplicity in degree r.
/// Always normalized (no trailing zeros); the zero polynomial is empty.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Int> coeffs);

  void add(std::size_t degree, Int count = 1);
  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Int at_one() const;
  Int coeff(std::size_t degree) const { return degree < coeffs_.size() ? coeffs_[degree] : 0; }
  /// Coefficientwise <=.
  bool dominated_by(const QPolynomial& other) const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

std::string to_string(const QPolynomial& p);

struct GradedDecomposition {
  LieType type;
  Weight lambda;
  Weight mu;
  std::map<Weight, QPolynomial, WeightDescending> entries;

  friend bool operator==(const GradedDecomposition&, const GradedDecomposition&) = default;
};

/// Graded decomposition of the fusion product V(lambda) * V(mu), read off the
/// degree and weight statistics of the lattice points of build_S_system.
GradedDecomposition graded_decompose(LieType type, const Weight& lambda, const Weight& mu);

/// The decomposition evaluated at q = 1.
TensorDecomposition at_q_equals_one(const GradedDecomposition& d);

/// sum_nu P_nu(1) dim V(nu) == dim V(lambda) dim V(mu).
bool dimension_check(const GradedDecomposition& d);

struct SchurRow {
  Weight nu;
  Int lhs;  ///< multiplicity in V(lambda1) (x) V(lambda2)
  Int rhs;  ///< multiplicity in V(mu1) (x) V(mu2)
};

struct SchurComparison {
  bool dominated;
  std::vector<SchurRow> rows;  ///< union of supports, descending in nu
};

/// Reason the pair-of-pairs hypothesis fails, or nullopt when it holds.
std::optional<std::string> schur_hypothesis_failure(LieType type, const Weight& lambda1, const Weight& lambda2,
                                                    const Weight& mu1, const Weight& mu2);

/// Pointwise comparison of ungraded multiplicities; throws
/// HypothesisViolation (naming the failing root) if the hypothesis fails.
SchurComparison schur_compare(LieType type, const Weight& lambda1, const Weight& lambda2, const Weight& mu1,
                              const Weight& mu2);

bool schur_positivity_check(LieType type, const Weight& lambda1, const Weight& lambda2, const Weight& mu1,
                            const Weight& mu2);

/// Exploratory: whether every graded multiplicity of V(lambda1) * V(lambda2)
/// is coefficientwise at most that of V(mu1) * V(mu2). Not a claimed
/// identity; nullopt when either pair is outside the graded domain.
std::optional<bool> graded_schur_domination(LieType type, const Weight& lambda1, const Weight& lambda2,
                                            const Weight& mu1, const Weight& mu2);

}  // namespace rank2

#endif  // RANK2_GRADED_FUSION_HPP
