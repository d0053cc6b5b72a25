#include "rank2/ineq_system.hpp"

#include <algorithm>
#include <limits>

#include "rank2/checked.hpp"
#include "rank2/errors.hpp"

namespace rank2 {

LatticePoint make_point(std::initializer_list<Int> coords) {
  LatticePoint p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (Int c : coords) p(i++) = c;
  return p;
}

IneqSystem::IneqSystem(std::string name, std::vector<std::string> coordinate_names)
    : name_(std::move(name)), names_(std::move(coordinate_names)), coeffs_(0, names_.size()) {
  if (names_.empty() || names_.size() > 6) {
    throw HypothesisViolation("inequality system '" + name_ + "' must have 1 to 6 coordinates");
  }
}

IneqSystem IneqSystem::empty(std::string name, std::vector<std::string> coordinate_names) {
  IneqSystem s(std::move(name), std::move(coordinate_names));
  s.empty_ = true;
  return s;
}

IneqSystem& IneqSystem::add(std::initializer_list<Int> coeffs, Int bound, bool strict, bool negate,
                            std::string label) {
  if (static_cast<int>(coeffs.size()) != arity()) {
    throw HypothesisViolation("constraint arity mismatch in '" + name_ + "'");
  }
  const Eigen::Index row = coeffs_.rows();
  coeffs_.conservativeResize(row + 1, Eigen::NoChange);
  bounds_.conservativeResize(row + 1);
  Eigen::Index j = 0;
  for (Int c : coeffs) coeffs_(row, j++) = negate ? -c : c;
  bounds_(row) = negate ? -bound : bound;
  strict_.push_back(strict);
  labels_.push_back(std::move(label));
  return *this;
}

IneqSystem& IneqSystem::le(std::initializer_list<Int> c, Int b, std::string l) {
  return add(c, b, false, false, std::move(l));
}
IneqSystem& IneqSystem::lt(std::initializer_list<Int> c, Int b, std::string l) {
  return add(c, b, true, false, std::move(l));
}
IneqSystem& IneqSystem::ge(std::initializer_list<Int> c, Int b, std::string l) {
  return add(c, b, false, true, std::move(l));
}
IneqSystem& IneqSystem::gt(std::initializer_list<Int> c, Int b, std::string l) {
  return add(c, b, true, true, std::move(l));
}
IneqSystem& IneqSystem::eq(std::initializer_list<Int> c, Int b, std::string l) {
  add(c, b, false, false, l);
  return add(c, b, false, true, std::move(l));
}
IneqSystem& IneqSystem::le_min(std::initializer_list<Int> c, Int x, Int y, std::string l) {
  add(c, x, false, false, l);
  return add(c, y, false, false, std::move(l));
}

CoeffVector IneqSystem::effective_bounds() const {
  CoeffVector b = bounds_;
  for (Eigen::Index k = 0; k < b.size(); ++k) {
    if (strict(k)) b(k) -= 1;
  }
  return b;
}

bool IneqSystem::contains(const LatticePoint& x) const {
  if (empty_ || x.size() != arity() || (x.array() < 0).any()) return false;
  if (coeffs_.rows() == 0) return true;
  return ((coeffs_ * x) - effective_bounds()).maxCoeff() <= 0;
}

namespace {

struct Plan {
  // for each level, the constraints that bound that coordinate from above
  // once the earlier coordinates are fixed
  std::vector<std::vector<Eigen::Index>> bounding;
};

Plan make_plan(const IneqSystem& sys) {
  Plan plan;
  const auto& a = sys.coeffs();
  const int n = sys.arity();
  plan.bounding.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (a(r, k) <= 0) continue;
      bool tail_nonneg = true;
      for (int j = k + 1; j < n; ++j) tail_nonneg &= a(r, j) >= 0;
      if (tail_nonneg) plan.bounding[static_cast<std::size_t>(k)].push_back(r);
    }
    if (plan.bounding[static_cast<std::size_t>(k)].empty()) {
      throw HypothesisViolation("inequality system '" + sys.name() + "' is unbounded in coordinate '" +
                                sys.coordinate_names()[static_cast<std::size_t>(k)] + "'");
    }
  }
  return plan;
}

// Rough magnitude guard: every |partial sum| stays below max|A| * n * max
// coordinate, and coordinates never exceed the largest effective bound.
void guard_magnitudes(const IneqSystem& sys, const CoeffVector& eff) {
  if (sys.size() == 0) return;
  const Int amax = sys.coeffs().cwiseAbs().maxCoeff();
  const Int bmax = eff.cwiseAbs().maxCoeff();
  const Int limit = std::numeric_limits<Int>::max() / 8;
  Int worst = checked::mul(checked::mul(std::max<Int>(amax, 1), sys.arity()), std::max<Int>(bmax, 1));
  if (worst > limit) throw InvariantViolation("inequality system '" + sys.name() + "' too large for exact enumeration");
}

template <class Visit>
void walk(const IneqSystem& sys, Visit&& visit) {
  if (sys.is_empty()) return;
  const Plan plan = make_plan(sys);
  const CoeffVector eff = sys.effective_bounds();
  guard_magnitudes(sys, eff);
  const auto& a = sys.coeffs();
  const int n = sys.arity();

  LatticePoint x = LatticePoint::Zero(n);
  CoeffVector partial = CoeffVector::Zero(a.rows());
  std::vector<Int> upper(static_cast<std::size_t>(n), -1);

  auto bound_at = [&](int k) {
    Int ub = std::numeric_limits<Int>::max();
    for (Eigen::Index r : plan.bounding[static_cast<std::size_t>(k)]) {
      ub = std::min(ub, checked::floor_div(eff(r) - partial(r), a(r, k)));
    }
    return ub;
  };

  int k = 0;
  upper[0] = bound_at(0);
  x(0) = 0;
  while (k >= 0) {
    const auto uk = static_cast<std::size_t>(k);
    if (x(k) > upper[uk]) {
      // exhausted this level: undo and backtrack
      partial -= a.col(k) * (x(k));
      x(k) = 0;
      --k;
      if (k >= 0) {
        partial += a.col(k);
        ++x(k);
      }
      continue;
    }
    if (k == n - 1) {
      if ((partial - eff).maxCoeff() <= 0) visit(x);
      partial += a.col(k);
      ++x(k);
      continue;
    }
    ++k;
    upper[static_cast<std::size_t>(k)] = bound_at(k);
    x(k) = 0;
  }
}

}  // namespace

std::vector<LatticePoint> enumerate_lattice_points(const IneqSystem& sys) {
  std::vector<LatticePoint> out;
  walk(sys, [&](const LatticePoint& x) { out.push_back(x); });
  return out;
}

std::size_t count_lattice_points(const IneqSystem& sys) {
  std::size_t n = 0;
  walk(sys, [&](const LatticePoint&) { ++n; });
  return n;
}

}  // namespace rank2
