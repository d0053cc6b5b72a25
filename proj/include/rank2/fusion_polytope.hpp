#ifndef RANK2_FUSION_POLYTOPE_HPP
#define RANK2_FUSION_POLYTOPE_HPP

#include <vector>

#include "rank2/ineq_system.hpp"
#include "rank2/root_system.hpp"

namespace rank2 {

/// Number of coordinates of a lattice point: 3, 4 or 6.
int polytope_arity(LieType type);

/// True when (lambda, mu) is in the domain of the graded decomposition:
/// both dominant, and min{m2, n2} = 0 for G2.
bool is_admissible(LieType type, const Weight& lambda, const Weight& mu);

/// Throws HypothesisViolation unless is_admissible(type, lambda, mu).
void require_admissible(LieType type, const Weight& lambda, const Weight& mu);

/// The inequality system whose lattice points parametrize the highest weight
/// vectors of V(lambda) * V(mu).
IneqSystem build_S_system(LieType type, const Weight& lambda, const Weight& mu);

/// Lattice points of build_S_system, lexicographically ordered.
std::vector<LatticePoint> enumerate_S(LieType type, const Weight& lambda, const Weight& mu);

Int degree(const LatticePoint& s);

/// The weight statistic in simple-root coordinates.
RootVector weight_statistic_root(LieType type, const LatticePoint& s);

/// The weight statistic in fundamental-weight coordinates.
Weight weight_statistic(LieType type, const LatticePoint& s);

}  // namespace rank2

#endif  // RANK2_FUSION_POLYTOPE_HPP
