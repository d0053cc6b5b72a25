#ifndef RANK2_ROOT_SYSTEM_HPP
#define RANK2_ROOT_SYSTEM_HPP

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "rank2/types.hpp"

namespace rank2 {

/// The three rank-two types. alpha_1 is the short simple root for C2 and G2.
enum class LieType { A2, C2, G2 };

std::string_view to_string(LieType type);
/// Parses "A2", "C2" or "G2"; throws HypothesisViolation otherwise.
LieType parse_lie_type(std::string_view name);

/// Cartan data for one type. cartan(i, j) = alpha_j(h_i), so the j-th column
/// is alpha_j in fundamental-weight coordinates. symmetrizer(i) * cartan(i, j)
/// is symmetric.
struct RootSystem {
  LieType type;
  Matrix2 cartan;
  Vector2 symmetrizer;
  std::vector<RootVector> positive_roots;
  /// coroots[k] gives lambda(h_alpha) = coroots[k].dot(lambda) for the k-th
  /// positive root.
  std::vector<Vector2> coroots;
  int weyl_order;
};

/// Validated, immutable data for `type`.
const RootSystem& root_system(LieType type);

Weight root_to_weight(LieType type, const RootVector& v);
/// Inverse of root_to_weight; nullopt when `w` is not in the root lattice.
std::optional<RootVector> weight_to_root(LieType type, const Weight& w);

/// sum_j w_j r_j d_j: the invariant form with short roots of squared length 2.
Int bilinear(LieType type, const Weight& w, const RootVector& v);

/// lambda(h_alpha) for a positive root alpha.
Int coroot_pairing(LieType type, const Weight& lambda, const RootVector& alpha);

/// Weyl dimension formula. Throws HypothesisViolation for non-dominant input.
Int weyl_dim(LieType type, const Weight& nu);

/// s_i(w) = w - w_i alpha_i, i in {1, 2}.
Weight simple_reflection(LieType type, int i, const Weight& w);

struct SignedConjugate {
  Weight weight;
  int sign;  ///< det of the Weyl element, or 0 when the orbit meets a wall
};

/// Strictly dominant Weyl conjugate of xi with the sign of the conjugating
/// element; (xi, 0) when xi has a non-trivial stabilizer.
SignedConjugate dominant_conjugate_signed(LieType type, const Weight& xi);

/// Full Weyl orbit of w, sorted.
std::vector<Weight> weyl_orbit(LieType type, const Weight& w);

using WeightMultiplicities = std::map<Weight, Int>;

/// Weight multiplicities of V(lambda) via Freudenthal's recursion.
WeightMultiplicities weight_multiplicities(LieType type, const Weight& lambda);

/// Throws HypothesisViolation naming `what` if w is not dominant.
void require_dominant(const Weight& w, std::string_view what);

}  // namespace rank2

#endif  // RANK2_ROOT_SYSTEM_HPP
