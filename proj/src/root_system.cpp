#include "rank2/root_system.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "rank2/checked.hpp"
#include "rank2/errors.hpp"

namespace rank2 {

namespace {

RootSystem make_root_system(LieType type) {
  RootSystem rs;
  rs.type = type;
  switch (type) {
    case LieType::A2:
      rs.cartan << 2, -1, -1, 2;
      rs.symmetrizer << 1, 1;
      rs.positive_roots = {{1, 0}, {0, 1}, {1, 1}};
      rs.coroots = {Vector2(1, 0), Vector2(0, 1), Vector2(1, 1)};
      rs.weyl_order = 6;
      break;
    case LieType::C2:
      rs.cartan << 2, -2, -1, 2;
      rs.symmetrizer << 1, 2;
      rs.positive_roots = {{1, 0}, {0, 1}, {1, 1}, {2, 1}};
      rs.coroots = {Vector2(1, 0), Vector2(0, 1), Vector2(1, 2), Vector2(1, 1)};
      rs.weyl_order = 8;
      break;
    case LieType::G2:
      rs.cartan << 2, -3, -1, 2;
      rs.symmetrizer << 1, 3;
      rs.positive_roots = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
      rs.coroots = {Vector2(1, 0), Vector2(0, 1), Vector2(1, 3),
                    Vector2(2, 3), Vector2(1, 1), Vector2(1, 2)};
      rs.weyl_order = 12;
      break;
  }
  return rs;
}

Weight to_weight(const RootSystem& rs, const RootVector& v) {
  return Weight(Vector2(rs.cartan * v.vec()));
}

Int form(const RootSystem& rs, const Weight& w, const RootVector& v) {
  Int s = 0;
  for (int j = 0; j < 2; ++j) {
    s = checked::add(s, checked::mul(checked::mul(w[j], v[j]), rs.symmetrizer(j)));
  }
  return s;
}

// Startup validation: symmetrizability, closure of the root list under the
// simple reflections, and consistency of the coroot table with the form.
void validate(const RootSystem& rs) {
  const std::string name(to_string(rs.type));
  Matrix2 dc = rs.symmetrizer.asDiagonal() * rs.cartan;
  if (dc != dc.transpose() || rs.cartan(0, 0) != 2 || rs.cartan(1, 1) != 2) {
    throw InvariantViolation(name + ": Cartan matrix is not symmetrizable by the stored symmetrizer");
  }
  std::set<RootVector> roots;
  for (const auto& a : rs.positive_roots) {
    roots.insert(a);
    roots.insert(-a);
  }
  for (const auto& a : roots) {
    Weight aw = to_weight(rs, a);
    for (int i = 0; i < 2; ++i) {
      RootVector simple = i == 0 ? RootVector{1, 0} : RootVector{0, 1};
      RootVector img = a - aw[i] * simple;
      if (!roots.count(img)) {
        throw InvariantViolation(name + ": positive root list not closed under simple reflections");
      }
    }
  }
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
    const RootVector& a = rs.positive_roots[k];
    Int len2 = form(rs, to_weight(rs, a), a);
    Int d = len2 / 2;
    for (int j = 0; j < 2; ++j) {
      if (rs.coroots[k](j) * d != a[j] * rs.symmetrizer(j)) {
        throw InvariantViolation(name + ": coroot table disagrees with the invariant form");
      }
    }
    if (rs.coroots[k].dot(to_weight(rs, a).vec()) != 2) {
      throw InvariantViolation(name + ": alpha(h_alpha) != 2");
    }
  }
  if (rs.weyl_order != 2 * static_cast<int>(rs.positive_roots.size())) {
    throw InvariantViolation(name + ": Weyl group order inconsistent with root count");
  }
}

std::size_t index_of(LieType type) { return static_cast<std::size_t>(type); }

struct Folded {
  Weight weight;
  int sign;
};

// Reflect negative coordinates away until dominant.
Folded fold(LieType type, const Weight& xi) {
  const int cap = root_system(type).weyl_order;
  Folded f{xi, 1};
  for (int steps = 0;; ++steps) {
    int i = f.weight[0] < 0 ? 1 : (f.weight[1] < 0 ? 2 : 0);
    if (i == 0) return f;
    if (steps == cap) {
      throw InvariantViolation("dominant conjugation did not terminate within |W| reflections");
    }
    f.weight = simple_reflection(type, i, f.weight);
    f.sign = -f.sign;
  }
}

}  // namespace

std::string_view to_string(LieType type) {
  switch (type) {
    case LieType::A2: return "A2";
    case LieType::C2: return "C2";
    case LieType::G2: return "G2";
  }
  return "?";
}

LieType parse_lie_type(std::string_view name) {
  if (name == "A2") return LieType::A2;
  if (name == "C2") return LieType::C2;
  if (name == "G2") return LieType::G2;
  throw HypothesisViolation("unknown Lie type '" + std::string(name) + "' (expected A2, C2 or G2)");
}

const RootSystem& root_system(LieType type) {
  static const std::array<RootSystem, 3> systems = [] {
    std::array<RootSystem, 3> s{make_root_system(LieType::A2), make_root_system(LieType::C2),
                                make_root_system(LieType::G2)};
    for (const auto& rs : s) validate(rs);
    return s;
  }();
  return systems[index_of(type)];
}

Weight root_to_weight(LieType type, const RootVector& v) {
  const auto& rs = root_system(type);
  Weight w;
  for (int i = 0; i < 2; ++i) {
    w[i] = checked::add(checked::mul(rs.cartan(i, 0), v[0]), checked::mul(rs.cartan(i, 1), v[1]));
  }
  return w;
}

std::optional<RootVector> weight_to_root(LieType type, const Weight& w) {
  const Matrix2& c = root_system(type).cartan;
  const Int det = c(0, 0) * c(1, 1) - c(0, 1) * c(1, 0);
  Matrix2 adj;
  adj << c(1, 1), -c(0, 1), -c(1, 0), c(0, 0);
  Vector2 num = adj * w.vec();
  if (num(0) % det != 0 || num(1) % det != 0) return std::nullopt;
  return RootVector(Vector2(num / det));
}

Int bilinear(LieType type, const Weight& w, const RootVector& v) {
  return form(root_system(type), w, v);
}

Int coroot_pairing(LieType type, const Weight& lambda, const RootVector& alpha) {
  const auto& rs = root_system(type);
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
    if (rs.positive_roots[k] == alpha) {
      return checked::add(checked::mul(rs.coroots[k](0), lambda[0]),
                          checked::mul(rs.coroots[k](1), lambda[1]));
    }
  }
  throw HypothesisViolation("not a positive root of " + std::string(to_string(type)));
}

void require_dominant(const Weight& w, std::string_view what) {
  if (!is_dominant(w)) {
    throw HypothesisViolation(std::string(what) + " = (" + std::to_string(w[0]) + "," +
                              std::to_string(w[1]) + ") is not dominant");
  }
}

Int weyl_dim(LieType type, const Weight& nu) {
  require_dominant(nu, "weight");
  Int num = 1;
  Int den = 1;
  for (const auto& a : root_system(type).positive_roots) {
    num = checked::mul(num, bilinear(type, nu + kRho, a));
    den = checked::mul(den, bilinear(type, kRho, a));
  }
  return checked::exact_div(num, den, "Weyl dimension formula");
}

Weight simple_reflection(LieType type, int i, const Weight& w) {
  if (i != 1 && i != 2) throw HypothesisViolation("simple reflection index must be 1 or 2");
  const auto& rs = root_system(type);
  Vector2 alpha = rs.cartan.col(i - 1);
  return Weight(Vector2(w.vec() - w[i - 1] * alpha));
}

SignedConjugate dominant_conjugate_signed(LieType type, const Weight& xi) {
  Folded f = fold(type, xi);
  if (f.weight[0] == 0 || f.weight[1] == 0) return {xi, 0};
  return {f.weight, f.sign};
}

std::vector<Weight> weyl_orbit(LieType type, const Weight& w) {
  std::set<Weight> seen{w};
  std::vector<Weight> frontier{w};
  while (!frontier.empty()) {
    Weight x = frontier.back();
    frontier.pop_back();
    for (int i = 1; i <= 2; ++i) {
      Weight y = simple_reflection(type, i, x);
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

WeightMultiplicities weight_multiplicities(LieType type, const Weight& lambda) {
  require_dominant(lambda, "highest weight");
  const auto& rs = root_system(type);

  // Dominant weights of V(lambda) are lambda - beta with beta in Q+, bounded
  // coordinatewise by the root coordinates of lambda (inverse Cartan >= 0).
  const Matrix2& c = rs.cartan;
  const Int det = c(0, 0) * c(1, 1) - c(0, 1) * c(1, 0);
  Matrix2 adj;
  adj << c(1, 1), -c(0, 1), -c(1, 0), c(0, 0);
  Vector2 top = adj * lambda.vec();
  const Int r1max = checked::floor_div(top(0), det);
  const Int r2max = checked::floor_div(top(1), det);

  std::vector<RootVector> depths;
  for (Int r1 = 0; r1 <= r1max; ++r1) {
    for (Int r2 = 0; r2 <= r2max; ++r2) {
      RootVector beta{r1, r2};
      if (is_dominant(lambda - root_to_weight(type, beta))) depths.push_back(beta);
    }
  }
  std::stable_sort(depths.begin(), depths.end(), [](const RootVector& x, const RootVector& y) {
    return x[0] + x[1] < y[0] + y[1];
  });

  std::map<Weight, Int> dominant;
  auto lookup = [&](const Weight& w) -> Int {
    auto it = dominant.find(fold(type, w).weight);
    return it == dominant.end() ? 0 : it->second;
  };

  const Weight lr = lambda + kRho;
  for (const auto& beta : depths) {
    const Weight eta = lambda - root_to_weight(type, beta);
    if (beta[0] == 0 && beta[1] == 0) {
      dominant[eta] = 1;
      continue;
    }
    Int rhs = 0;
    for (const auto& alpha : rs.positive_roots) {
      const Weight aw = root_to_weight(type, alpha);
      for (Int k = 1;; ++k) {
        Weight up = eta + k * aw;
        Int m = lookup(up);
        if (m == 0) break;
        rhs = checked::add(rhs, checked::mul(m, bilinear(type, up, alpha)));
      }
    }
    rhs = checked::mul(2, rhs);
    const Int lhs = bilinear(type, lr + eta + kRho, beta);
    if (lhs <= 0) throw InvariantViolation("Freudenthal denominator is not positive");
    dominant[eta] = checked::exact_div(rhs, lhs, "Freudenthal recursion");
  }

  WeightMultiplicities all;
  for (const auto& [eta, m] : dominant) {
    if (m == 0) continue;
    for (const auto& w : weyl_orbit(type, eta)) all[w] = m;
  }
  return all;
}

}  // namespace rank2
