#ifndef RANK2_LEMMA_SETS_HPP
#define RANK2_LEMMA_SETS_HPP

#include <vector>

#include "rank2/ineq_system.hpp"

/// Intermediate point sets of the C2 and G2 counting recursions. Each builder
/// returns the empty system when its weights are not dominant. Sets printed as
/// unions are returned as one system per piece.
namespace rank2::lemma_sets {

using Union = std::vector<IneqSystem>;

namespace c2 {
/// ^1T: the points of T^C with a = 0 or b = 0; pieces (0,b,c,d), (a>=1,0,c,d).
Union T1(const Weight& lambda, const Weight& mu);
/// ^2T: the four pieces (0,b,0,d), (a,0,0,d), (0,b,c,0), (a,0,c,0).
Union T2(const Weight& lambda, const Weight& mu);
/// ^1S over (b, c, d).
IneqSystem S1(const Weight& lambda, const Weight& mu);
/// ^2S over (b, c, d): pieces (b,0,d) and (b,c>=1,0).
Union S2(const Weight& lambda, const Weight& mu);
/// ^3S over (b, c).
IneqSystem S3(const Weight& lambda, const Weight& mu);
}  // namespace c2

// G2 sets assume n2 = 0.
namespace g2 {
/// ^1T over (a, b, c, d, e).
IneqSystem T1(const Weight& lambda, const Weight& mu);
/// ^2T over (a, b, c, y) with y = m2 - b + d.
IneqSystem T2(const Weight& lambda, const Weight& mu);
/// ^3T over (a, b, c, y): pieces a = 0 and (a >= 1, c+2b+2y = m1+2m2).
Union T3(const Weight& lambda, const Weight& mu);
IneqSystem Y1(const Weight& lambda, const Weight& mu);  ///< (b, c, y)
IneqSystem Y2(const Weight& lambda, const Weight& mu);  ///< (a, y)
IneqSystem R1(const Weight& lambda, const Weight& mu);  ///< (b, c, d, e)
IneqSystem R2(const Weight& lambda, const Weight& mu);  ///< (a, b, c, d)
IneqSystem Q1(const Weight& lambda, const Weight& mu);  ///< (a, c, d)
IneqSystem Q2(const Weight& lambda, const Weight& mu);  ///< (a, b, c)
/// ^3S: pieces over (c, d) and (b, c).
Union S3(const Weight& lambda, const Weight& mu);
IneqSystem Z1(const Weight& lambda, const Weight& mu);  ///< (c, d)
IneqSystem Z2(const Weight& lambda, const Weight& mu);  ///< (b, c)
IneqSystem Z3(const Weight& lambda, const Weight& mu);  ///< (c)
/// The two sets counted by the T-side inductive step: (b, c) and (a).
Union M(const Weight& lambda, const Weight& mu);
}  // namespace g2

}  // namespace rank2::lemma_sets

#endif  // RANK2_LEMMA_SETS_HPP
