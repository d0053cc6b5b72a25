#ifndef RANK2_LEMMA_SUPPORT_HPP
#define RANK2_LEMMA_SUPPORT_HPP

#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rank2/fusion_polytope.hpp"
#include "rank2/lemma_sets.hpp"
#include "rank2/lemma_verifier.hpp"
#include "rank2/lr_oracle.hpp"

namespace rank2::detail {

using Points = std::vector<LatticePoint>;
using PointSet = std::set<LatticePoint, LexLess>;
using PointMap = std::function<LatticePoint(const LatticePoint&)>;
using PointPredicate = std::function<bool(const LatticePoint&)>;

inline bool dominant(const Weight& lambda, const Weight& mu) { return is_dominant(lambda) && is_dominant(mu); }

inline std::string show(const LatticePoint& p) {
  std::ostringstream out;
  out << '(';
  for (Eigen::Index i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
  out << ')';
  return out.str();
}

inline Int count(const Points& p) { return static_cast<Int>(p.size()); }

inline PointSet to_set(const Points& p) { return {p.begin(), p.end()}; }

inline Points filter(const Points& p, const PointPredicate& keep) {
  Points out;
  for (const auto& x : p) {
    if (keep(x)) out.push_back(x);
  }
  return out;
}

inline Points map_points(const Points& p, const PointMap& f) {
  Points out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(f(x));
  return out;
}

/// S-model points, empty off the dominant cone.
inline Points S_points(LieType type, const Weight& lambda, const Weight& mu) {
  return dominant(lambda, mu) ? enumerate_S(type, lambda, mu) : Points{};
}

inline Points T_points(LieType type, const Weight& lambda, const Weight& mu) {
  return dominant(lambda, mu) ? enumerate_T(type, lambda, mu) : Points{};
}

inline Points points(const IneqSystem& sys) { return enumerate_lattice_points(sys); }

/// Points of a printed disjoint union; asserts the pieces are disjoint.
inline Points union_points(LemmaReport& report, const lemma_sets::Union& pieces, const std::string& name) {
  Points all;
  for (const auto& piece : pieces) {
    auto p = points(piece);
    all.insert(all.end(), p.begin(), p.end());
  }
  const PointSet distinct = to_set(all);
  report.expect(name + ": pieces are disjoint", count(all), static_cast<Int>(distinct.size()));
  return {distinct.begin(), distinct.end()};
}

/// Asserts `actual` and `stated` are the same set, recording the first
/// point in their symmetric difference.
inline void expect_same_set(LemmaReport& report, const std::string& label, const Points& actual,
                            const Points& stated) {
  const PointSet a = to_set(actual);
  const PointSet s = to_set(stated);
  Int mismatches = 0;
  std::string detail;
  for (const auto& x : a) {
    if (!s.count(x)) {
      if (mismatches++ == 0) detail = show(x) + " only on the enumerated side";
    }
  }
  for (const auto& x : s) {
    if (!a.count(x)) {
      if (mismatches++ == 0) detail = show(x) + " only on the stated side";
    }
  }
  report.expect(label + " (mismatched points)", 0, mismatches).detail = detail;
}

/// A shift map `f` from `domain` into `codomain`: asserts injectivity,
/// that the image lies in the codomain and, when `stated_image` is given,
/// that it is exactly the codomain points satisfying it.
inline void expect_injection(LemmaReport& report, const std::string& label, const Points& domain, const PointMap& f,
                             const Points& codomain, const PointPredicate& stated_image = {}) {
  const Points img = map_points(domain, f);
  const PointSet img_set = to_set(img);
  report.expect(label + ": injective", count(domain), static_cast<Int>(img_set.size()));
  const PointSet target = to_set(codomain);
  Int outside = 0;
  std::string detail;
  for (const auto& x : img_set) {
    if (!target.count(x) && outside++ == 0) detail = show(x) + " not in the codomain";
  }
  report.expect(label + ": lands in codomain (points outside)", 0, outside).detail = detail;
  if (stated_image) expect_same_set(report, label + ": image is the stated subset", img, filter(codomain, stated_image));
}

inline LatticePoint pt(std::initializer_list<Int> c) { return make_point(c); }

}  // namespace rank2::detail

#endif  // RANK2_LEMMA_SUPPORT_HPP
