#ifndef RANK2_LR_ORACLE_HPP
#define RANK2_LR_ORACLE_HPP

#include <map>
#include <vector>

#include "rank2/ineq_system.hpp"
#include "rank2/root_system.hpp"

namespace rank2 {

/// Ungraded tensor-product multiplicities of V(lambda) (x) V(mu).
struct TensorDecomposition {
  std::map<Weight, Int, WeightDescending> entries;

  Int total_multiplicity() const;
  friend bool operator==(const TensorDecomposition&, const TensorDecomposition&) = default;
};

/// Brauer-Klimyk: sum of signed, rho-shifted dominant conjugates of
/// lambda + eta over the weights eta of V(mu).
TensorDecomposition klimyk_decompose(LieType type, const Weight& lambda, const Weight& mu);

// Alternative lattice-point models, one per type. Each counts
// sum_nu [V(lambda) (x) V(mu) : V(nu)].

IneqSystem build_T_A_system(const Weight& lambda, const Weight& mu);
IneqSystem build_T_C_system(const Weight& lambda, const Weight& mu);
/// Requires n2 = 0.
IneqSystem build_T_G_system(const Weight& lambda, const Weight& mu);

std::vector<LatticePoint> enumerate_T_A(const Weight& lambda, const Weight& mu);
std::vector<LatticePoint> enumerate_T_C(const Weight& lambda, const Weight& mu);
/// Swaps lambda and mu first when m2 = 0 < n2; rejects min{m2, n2} > 0.
std::vector<LatticePoint> enumerate_T_G(const Weight& lambda, const Weight& mu);

/// The T-model of `type` (A2, C2 or G2).
std::vector<LatticePoint> enumerate_T(LieType type, const Weight& lambda, const Weight& mu);

/// Counts of standard dominant G2 tableaux, obtained three ways.
struct TableauCounts {
  Int reduced;         ///< points of the reduced (y2, y3, y34, y4, y5, y6) system
  Int prefix_scan;     ///< tableaux whose every suffix T_i is dominant
  Int critical_scan;   ///< tableaux dominant at the five critical suffixes
  /// tableaux dominant at the five index expressions as originally printed;
  /// reported only, these do not all realize the stated functionals
  Int printed_index_scan;
};

TableauCounts littelmann_tableau_counts(const Weight& lambda, const Weight& mu);

/// Number of standard dominant tableaux; throws InvariantViolation unless
/// all three counts agree. Requires n2 = 0.
Int littelmann_tableau_count(const Weight& lambda, const Weight& mu);

/// Tuples (y2, y3, y34, y4, y5, y6) of the tableaux accepted by the full
/// prefix scan, lexicographically ordered.
std::vector<LatticePoint> standard_dominant_tableau_tuples(const Weight& lambda, const Weight& mu);

}  // namespace rank2

#endif  // RANK2_LR_ORACLE_HPP
