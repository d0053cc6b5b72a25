#ifndef RANK2_INEQ_SYSTEM_HPP
#define RANK2_INEQ_SYSTEM_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rank2/types.hpp"

namespace rank2 {

using CoeffMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CoeffVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

/// A finite set of non-negative integer points cut out by linear constraints
/// `coeffs.row(k) * x <= bounds(k)` (or `<` when strict(k) is set).
///
/// Constraints keep the label they were written with so that a failing
/// lemma check can name the inequality responsible.
class IneqSystem {
 public:
  IneqSystem(std::string name, std::vector<std::string> coordinate_names);

  /// A system with no points, used for polytopes whose parameters are not
  /// dominant.
  static IneqSystem empty(std::string name, std::vector<std::string> coordinate_names);

  IneqSystem& le(std::initializer_list<Int> coeffs, Int bound, std::string label = {});
  IneqSystem& lt(std::initializer_list<Int> coeffs, Int bound, std::string label = {});
  IneqSystem& ge(std::initializer_list<Int> coeffs, Int bound, std::string label = {});
  IneqSystem& gt(std::initializer_list<Int> coeffs, Int bound, std::string label = {});
  IneqSystem& eq(std::initializer_list<Int> coeffs, Int bound, std::string label = {});
  /// coeffs * x <= min{x, y}, stored as two constraints.
  IneqSystem& le_min(std::initializer_list<Int> coeffs, Int x, Int y, std::string label = {});

  int arity() const { return static_cast<int>(names_.size()); }
  Eigen::Index size() const { return coeffs_.rows(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& coordinate_names() const { return names_; }
  const CoeffMatrix& coeffs() const { return coeffs_; }
  const CoeffVector& bounds() const { return bounds_; }
  bool strict(Eigen::Index k) const { return strict_[static_cast<std::size_t>(k)]; }
  const std::string& label(Eigen::Index k) const { return labels_[static_cast<std::size_t>(k)]; }
  bool is_empty() const { return empty_; }

  /// Effective right-hand sides with strict constraints tightened by one.
  CoeffVector effective_bounds() const;
  bool contains(const LatticePoint& x) const;

 private:
  IneqSystem& add(std::initializer_list<Int> coeffs, Int bound, bool strict, bool negate,
                  std::string label);

  std::string name_;
  std::vector<std::string> names_;
  CoeffMatrix coeffs_;
  CoeffVector bounds_;
  std::vector<bool> strict_;
  std::vector<std::string> labels_;
  bool empty_ = false;
};

/// All non-negative integer points of `sys`, lexicographically ordered.
/// Throws HypothesisViolation naming the first coordinate without a derivable
/// upper bound.
std::vector<LatticePoint> enumerate_lattice_points(const IneqSystem& sys);

std::size_t count_lattice_points(const IneqSystem& sys);

}  // namespace rank2

#endif  // RANK2_INEQ_SYSTEM_HPP
