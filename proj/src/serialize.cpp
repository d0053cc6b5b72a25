#include "rank2/serialize.hpp"

#include <sstream>

#include "rank2/errors.hpp"

namespace rank2 {

namespace {

Json pair(const Weight& w) { return Json::array({w[0], w[1]}); }

Weight weight_from(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw HypothesisViolation(std::string("expected ") + what + " as [int,int]");
  }
  return Weight{j[0].get<Int>(), j[1].get<Int>()};
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw HypothesisViolation(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

void csv_prefix(std::ostream& os, LieType type, const Weight& lambda, const Weight& mu, const Weight& nu) {
  os << to_string(type) << ',' << lambda[0] << ',' << lambda[1] << ',' << mu[0] << ',' << mu[1] << ',' << nu[0] << ','
     << nu[1];
}

}  // namespace

Json to_json(const GradedDecomposition& d) {
  Json entries = Json::array();
  for (const auto& [nu, poly] : d.entries) entries.push_back(Json{{"nu", pair(nu)}, {"poly", poly.coeffs()}});
  return Json{{"type", std::string(to_string(d.type))}, {"lambda", pair(d.lambda)}, {"mu", pair(d.mu)}, {"entries", entries}};
}

GradedDecomposition graded_from_json(const Json& j) {
  const Json& type = field(j, "type");
  if (!type.is_string()) throw HypothesisViolation("JSON field 'type' must be a string");
  GradedDecomposition d{parse_lie_type(type.get<std::string>()), weight_from(field(j, "lambda"), "lambda"),
                        weight_from(field(j, "mu"), "mu"), {}};
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw HypothesisViolation("JSON field 'entries' must be an array");
  for (const auto& e : entries) {
    const Json& poly = field(e, "poly");
    if (!poly.is_array()) throw HypothesisViolation("JSON field 'poly' must be an array");
    std::vector<Int> coeffs;
    for (const auto& c : poly) {
      if (!c.is_number_integer() || c.get<Int>() < 0) throw HypothesisViolation("poly coefficients must be non-negative integers");
      coeffs.push_back(c.get<Int>());
    }
    if (!d.entries.emplace(weight_from(field(e, "nu"), "nu"), QPolynomial(std::move(coeffs))).second) {
      throw HypothesisViolation("duplicate nu in entries");
    }
  }
  return d;
}

Json to_json(LieType type, const Weight& lambda, const Weight& mu, const TensorDecomposition& d) {
  Json entries = Json::array();
  for (const auto& [nu, m] : d.entries) entries.push_back(Json{{"nu", pair(nu)}, {"multiplicity", m}});
  return Json{{"type", std::string(to_string(type))}, {"lambda", pair(lambda)}, {"mu", pair(mu)}, {"entries", entries}};
}

Json to_json(const LemmaCheck& c) {
  Json j{{"label", c.label}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.passed()}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json to_json(const LemmaReport& r) {
  Json checks = Json::array(), observations = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  for (const auto& c : r.observations) observations.push_back(to_json(c));
  return Json{{"lemma", r.lemma},           {"type", std::string(to_string(r.type))},
              {"lambda", pair(r.lambda)},   {"mu", pair(r.mu)},
              {"pass", r.pass()},           {"checks", checks},
              {"observations", observations}, {"notes", r.notes}};
}

std::string dump_line(const Json& j) { return j.dump() + "\n"; }

std::string to_csv(const GradedDecomposition& d, bool header) {
  std::ostringstream os;
  if (header) os << "type,lambda1,lambda2,mu1,mu2,nu1,nu2,degree,multiplicity\n";
  for (const auto& [nu, poly] : d.entries) {
    for (std::size_t r = 0; r < poly.coeffs().size(); ++r) {
      if (poly.coeff(r) == 0) continue;
      csv_prefix(os, d.type, d.lambda, d.mu, nu);
      os << ',' << r << ',' << poly.coeff(r) << '\n';
    }
  }
  return os.str();
}

std::string to_csv(LieType type, const Weight& lambda, const Weight& mu, const TensorDecomposition& d, bool header) {
  std::ostringstream os;
  if (header) os << "type,lambda1,lambda2,mu1,mu2,nu1,nu2,multiplicity\n";
  for (const auto& [nu, m] : d.entries) {
    csv_prefix(os, type, lambda, mu, nu);
    os << ',' << m << '\n';
  }
  return os.str();
}

std::string to_text(const GradedDecomposition& d) {
  std::ostringstream os;
  os << to_string(d.type) << ": V" << d.lambda << " * V" << d.mu << '\n';
  for (const auto& [nu, poly] : d.entries) os << "  V" << nu << "  " << to_string(poly) << '\n';
  return os.str();
}

std::string to_text(LieType type, const Weight& lambda, const Weight& mu, const TensorDecomposition& d) {
  std::ostringstream os;
  os << to_string(type) << ": V" << lambda << " (x) V" << mu << '\n';
  for (const auto& [nu, m] : d.entries) os << "  V" << nu << "  " << m << '\n';
  return os.str();
}

}  // namespace rank2
