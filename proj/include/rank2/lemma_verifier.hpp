#ifndef RANK2_LEMMA_VERIFIER_HPP
#define RANK2_LEMMA_VERIFIER_HPP

#include <string>
#include <vector>

#include "rank2/root_system.hpp"

namespace rank2 {

/// One compared quantity. `expected` is the closed form (or 0 for a count of
/// structural violations), `actual` the enumerated twin.
struct LemmaCheck {
  std::string label;
  Int expected = 0;
  Int actual = 0;
  std::string detail;  ///< first offending point, filled on failure

  bool passed() const { return expected == actual; }
};

struct LemmaReport {
  std::string lemma;
  LieType type = LieType::A2;
  Weight lambda;
  Weight mu;
  std::vector<LemmaCheck> checks;        ///< asserted
  std::vector<LemmaCheck> observations;  ///< recorded, never asserted
  std::vector<std::string> notes;

  LemmaCheck& expect(std::string label, Int expected, Int actual);
  LemmaCheck& observe(std::string label, Int expected, Int actual);
  bool pass() const;
  std::size_t failure_count() const;
  /// nullptr when every check passes.
  const LemmaCheck* first_failure() const;
};

/// Equivalence classes (a+l, b-l, c+l) of the A2 models: per-class counts,
/// the S- and T-ranges [0, R2] and [max(R1,0), r] of classes with an
/// S-representative (0,b,c), and the identity R2 + 1 = r - max(R1,0) + 1.
/// Requires dominant weights.
LemmaReport check_A2_class_bijection(const Weight& lambda, const Weight& mu);

/// Three-term recursions of the C2 models, their injection images, and the
/// difference formulas in both regimes. Requires dominant weights.
LemmaReport check_C2_recursions(const Weight& lambda, const Weight& mu);

/// Four-term recursions of the G2 models, the identification of the
/// third-level sets and the closed-form counts of the m2-induction. Requires
/// dominant weights with min{m2, n2} = 0; swaps lambda and mu when
/// m2 = 0 < n2.
LemmaReport check_G2_recursions(const Weight& lambda, const Weight& mu);

/// Dispatches on type.
LemmaReport check_lemmas(LieType type, const Weight& lambda, const Weight& mu);

}  // namespace rank2

#endif  // RANK2_LEMMA_VERIFIER_HPP
