#include "rank2/graded_fusion.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rank2/checked.hpp"
#include "rank2/errors.hpp"
#include "rank2/fusion_polytope.hpp"

namespace rank2 {

QPolynomial::QPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  for (Int c : coeffs_) {
    if (c < 0) throw HypothesisViolation("graded multiplicities are non-negative");
  }
  normalize();
}

void QPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void QPolynomial::add(std::size_t degree, Int count) {
  if (coeffs_.size() <= degree) coeffs_.resize(degree + 1, 0);
  coeffs_[degree] = checked::add(coeffs_[degree], count);
  if (coeffs_[degree] < 0) throw InvariantViolation("graded multiplicity became negative");
  normalize();
}

Int QPolynomial::at_one() const {
  Int s = 0;
  for (Int c : coeffs_) s = checked::add(s, c);
  return s;
}

bool QPolynomial::dominated_by(const QPolynomial& other) const {
  for (std::size_t r = 0; r < coeffs_.size(); ++r) {
    if (coeffs_[r] > other.coeff(r)) return false;
  }
  return true;
}

std::string to_string(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t r = 0; r < p.coeffs().size(); ++r) {
    const Int c = p.coeffs()[r];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (r == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'q';
    if (r > 1) os << '^' << r;
  }
  return os.str();
}

GradedDecomposition graded_decompose(LieType type, const Weight& lambda, const Weight& mu) {
  GradedDecomposition d{type, lambda, mu, {}};
  const Weight top = lambda + mu;
  for (const auto& s : enumerate_S(type, lambda, mu)) {
    const Weight nu = top - weight_statistic(type, s);
    if (!is_dominant(nu)) {
      std::ostringstream os;
      os << "lattice point of degree " << degree(s) << " gives non-dominant weight " << nu;
      throw InvariantViolation(os.str());
    }
    d.entries[nu].add(static_cast<std::size_t>(degree(s)));
  }
  return d;
}

TensorDecomposition at_q_equals_one(const GradedDecomposition& d) {
  TensorDecomposition t;
  for (const auto& [nu, p] : d.entries) {
    if (p.is_zero()) throw InvariantViolation("empty graded multiplicity in decomposition");
    t.entries[nu] = p.at_one();
  }
  return t;
}

bool dimension_check(const GradedDecomposition& d) {
  Int total = 0;
  for (const auto& [nu, p] : d.entries) {
    total = checked::add(total, checked::mul(p.at_one(), weyl_dim(d.type, nu)));
  }
  return total == checked::mul(weyl_dim(d.type, d.lambda), weyl_dim(d.type, d.mu));
}

std::optional<std::string> schur_hypothesis_failure(LieType type, const Weight& lambda1, const Weight& lambda2,
                                                    const Weight& mu1, const Weight& mu2) {
  auto show = [](const Weight& w) {
    std::ostringstream os;
    os << w;
    return os.str();
  };
  const std::pair<const char*, const Weight*> all[] = {
      {"lambda1", &lambda1}, {"lambda2", &lambda2}, {"mu1", &mu1}, {"mu2", &mu2}};
  for (const auto& [name, w] : all) {
    if (!is_dominant(*w)) return std::string(name) + " = " + show(*w) + " is not dominant";
  }
  if (lambda1 + lambda2 != mu1 + mu2) {
    return "lambda1+lambda2 = " + show(lambda1 + lambda2) + " differs from mu1+mu2 = " + show(mu1 + mu2);
  }
  if (type == LieType::G2 && (lambda2[1] != 0 || mu2[1] != 0)) {
    return std::string("G2 requires lambda2 and mu2 to be multiples of the fundamental weight w1");
  }
  for (const auto& alpha : root_system(type).positive_roots) {
    const Int lhs = std::min(coroot_pairing(type, lambda1, alpha), coroot_pairing(type, lambda2, alpha));
    const Int rhs = std::min(coroot_pairing(type, mu1, alpha), coroot_pairing(type, mu2, alpha));
    if (lhs > rhs) {
      std::ostringstream os;
      os << "min-pairing hypothesis fails at positive root alpha = " << alpha << " (simple-root coordinates): "
         << lhs << " > " << rhs;
      return os.str();
    }
  }
  return std::nullopt;
}

SchurComparison schur_compare(LieType type, const Weight& lambda1, const Weight& lambda2, const Weight& mu1,
                              const Weight& mu2) {
  if (auto why = schur_hypothesis_failure(type, lambda1, lambda2, mu1, mu2)) throw HypothesisViolation(*why);
  const TensorDecomposition left = klimyk_decompose(type, lambda1, lambda2);
  const TensorDecomposition right = klimyk_decompose(type, mu1, mu2);
  std::set<Weight, WeightDescending> support;
  for (const auto& [nu, m] : left.entries) support.insert(nu);
  for (const auto& [nu, m] : right.entries) support.insert(nu);
  SchurComparison cmp{true, {}};
  for (const auto& nu : support) {
    auto l = left.entries.find(nu);
    auto r = right.entries.find(nu);
    SchurRow row{nu, l == left.entries.end() ? 0 : l->second, r == right.entries.end() ? 0 : r->second};
    cmp.dominated &= row.lhs <= row.rhs;
    cmp.rows.push_back(row);
  }
  return cmp;
}

bool schur_positivity_check(LieType type, const Weight& lambda1, const Weight& lambda2, const Weight& mu1,
                            const Weight& mu2) {
  return schur_compare(type, lambda1, lambda2, mu1, mu2).dominated;
}

std::optional<bool> graded_schur_domination(LieType type, const Weight& lambda1, const Weight& lambda2,
                                            const Weight& mu1, const Weight& mu2) {
  if (!is_admissible(type, lambda1, lambda2) || !is_admissible(type, mu1, mu2)) return std::nullopt;
  const GradedDecomposition left = graded_decompose(type, lambda1, lambda2);
  const GradedDecomposition right = graded_decompose(type, mu1, mu2);
  for (const auto& [nu, p] : left.entries) {
    auto it = right.entries.find(nu);
    if (it == right.entries.end() || !p.dominated_by(it->second)) return false;
  }
  return true;
}

}  // namespace rank2
