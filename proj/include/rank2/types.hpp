#ifndef RANK2_TYPES_HPP
#define RANK2_TYPES_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

#include <Eigen/Core>

namespace rank2 {

using Int = std::int64_t;
using Vector2 = Eigen::Matrix<Int, 2, 1>;
using Matrix2 = Eigen::Matrix<Int, 2, 2>;

/// Coordinates of a lattice point (a, b, c[, d[, e, f]]); at most six entries,
/// stored inline.
using LatticePoint = Eigen::Matrix<Int, Eigen::Dynamic, 1, Eigen::ColMajor, 6, 1>;

struct FundamentalBasis;
struct SimpleRootBasis;

/// A rank-two integer vector tagged with the basis it is expressed in, so that
/// fundamental-weight and simple-root coordinates cannot be mixed silently.
template <class Basis>
class Coords2 {
 public:
  Coords2() = default;
  Coords2(Int x1, Int x2) : v_(x1, x2) {}
  explicit Coords2(const Vector2& v) : v_(v) {}

  Int operator[](int i) const { return v_(i); }
  Int& operator[](int i) { return v_(i); }
  const Vector2& vec() const { return v_; }

  Coords2 operator+(const Coords2& o) const { return Coords2(Vector2(v_ + o.v_)); }
  Coords2 operator-(const Coords2& o) const { return Coords2(Vector2(v_ - o.v_)); }
  Coords2 operator-() const { return Coords2(Vector2(-v_)); }
  Coords2& operator+=(const Coords2& o) {
    v_ += o.v_;
    return *this;
  }
  friend Coords2 operator*(Int k, const Coords2& c) { return Coords2(Vector2(k * c.v_)); }

  friend bool operator==(const Coords2& a, const Coords2& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Coords2& a, const Coords2& b) {
    if (auto c = a.v_(0) <=> b.v_(0); c != 0) return c;
    return a.v_(1) <=> b.v_(1);
  }

  friend std::ostream& operator<<(std::ostream& os, const Coords2& c) {
    return os << '(' << c.v_(0) << ',' << c.v_(1) << ')';
  }

 private:
  Vector2 v_ = Vector2::Zero();
};

/// Integral weight in fundamental-weight coordinates: w[i] = value on coroot h_i.
using Weight = Coords2<FundamentalBasis>;
/// Element of the root lattice in simple-root coordinates.
using RootVector = Coords2<SimpleRootBasis>;

inline bool is_dominant(const Weight& w) { return w[0] >= 0 && w[1] >= 0; }

inline const Weight kRho{1, 1};
inline Weight fundamental(int i) { return i == 1 ? Weight{1, 0} : Weight{0, 1}; }

/// Map ordering with the lexicographically largest weight first.
struct WeightDescending {
  bool operator()(const Weight& a, const Weight& b) const { return b < a; }
};

struct LexLess {
  bool operator()(const LatticePoint& a, const LatticePoint& b) const {
    Eigen::Index n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) {
      if (a(i) != b(i)) return a(i) < b(i);
    }
    return a.size() < b.size();
  }
};

LatticePoint make_point(std::initializer_list<Int> coords);

}  // namespace rank2

#endif  // RANK2_TYPES_HPP
