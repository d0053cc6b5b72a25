#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rank2/errors.hpp"
#include "rank2/fusion_polytope.hpp"
#include "rank2/graded_fusion.hpp"
#include "rank2/lr_oracle.hpp"
#include "rank2/parallel.hpp"
#include "rank2/serialize.hpp"
#include "rank2/verification.hpp"

namespace {

using namespace rank2;

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::string type_name;
  std::string lambda, mu, lambda2, mu2;
  std::optional<Int> max;
  std::string format = "text";
  unsigned jobs = default_jobs();
  std::string out;

  LieType type() const { return parse_lie_type(type_name); }
  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Text;
  }
};

Weight parse_weight(const std::string& text, const char* flag) {
  std::istringstream in(text);
  Int a = 0, b = 0;
  char comma = 0;
  if (!(in >> a >> comma >> b) || comma != ',' || !(in >> std::ws).eof()) {
    throw HypothesisViolation(std::string("--") + flag + " expects two comma-separated integers, got '" + text + "'");
  }
  return Weight{a, b};
}

Weight required_weight(const std::string& text, const char* flag) {
  if (text.empty()) throw HypothesisViolation(std::string("--") + flag + " is required");
  return parse_weight(text, flag);
}

// Writes to --out when given, else standard output.
void emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out.empty()) {
    std::cout << payload << std::flush;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw HypothesisViolation("cannot open '" + cfg.out + "' for writing");
  file << payload;
}

int cmd_decompose(const RunConfig& cfg) {
  const LieType type = cfg.type();
  const GradedDecomposition d =
      graded_decompose(type, required_weight(cfg.lambda, "lambda"), required_weight(cfg.mu, "mu"));
  switch (cfg.fmt()) {
    case Format::Json: emit(cfg, dump_line(to_json(d))); break;
    case Format::Csv: emit(cfg, to_csv(d)); break;
    case Format::Text: emit(cfg, to_text(d)); break;
  }
  return 0;
}

int cmd_oracle(const RunConfig& cfg) {
  const LieType type = cfg.type();
  const Weight lambda = required_weight(cfg.lambda, "lambda"), mu = required_weight(cfg.mu, "mu");
  const TensorDecomposition d = klimyk_decompose(type, lambda, mu);
  switch (cfg.fmt()) {
    case Format::Json: emit(cfg, dump_line(to_json(type, lambda, mu, d))); break;
    case Format::Csv: emit(cfg, to_csv(type, lambda, mu, d)); break;
    case Format::Text: emit(cfg, to_text(type, lambda, mu, d)); break;
  }
  return 0;
}

int cmd_count(const RunConfig& cfg) {
  const LieType type = cfg.type();
  const Weight lambda = required_weight(cfg.lambda, "lambda"), mu = required_weight(cfg.mu, "mu");
  const Int s = static_cast<Int>(enumerate_S(type, lambda, mu).size());
  const Int t = static_cast<Int>(enumerate_T(type, lambda, mu).size());
  const Int k = klimyk_decompose(type, lambda, mu).total_multiplicity();
  Json j{{"type", std::string(to_string(type))}, {"lambda", {lambda[0], lambda[1]}}, {"mu", {mu[0], mu[1]}},
         {"S", s}, {"T", t}, {"klimyk", k}};
  if (type == LieType::G2) {
    const Weight l = mu[1] > 0 ? mu : lambda, m = mu[1] > 0 ? lambda : mu;
    j["tableaux"] = littelmann_tableau_count(l, m);
  }
  switch (cfg.fmt()) {
    case Format::Json: emit(cfg, dump_line(j)); break;
    case Format::Csv: {
      std::ostringstream os;
      os << "type,lambda1,lambda2,mu1,mu2,S,T,klimyk\n"
         << to_string(type) << ',' << lambda[0] << ',' << lambda[1] << ',' << mu[0] << ',' << mu[1] << ',' << s << ','
         << t << ',' << k << '\n';
      emit(cfg, os.str());
      break;
    }
    case Format::Text: {
      std::ostringstream os;
      os << "|S| = " << s << "\n|T| = " << t << "\nKlimyk total = " << k << '\n';
      if (j.contains("tableaux")) os << "standard dominant tableaux = " << j["tableaux"].get<Int>() << '\n';
      emit(cfg, os.str());
      break;
    }
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const LieType type = cfg.type();
  std::vector<WeightPair> pairs;
  if (!cfg.lambda.empty() || !cfg.mu.empty()) {
    pairs.emplace_back(required_weight(cfg.lambda, "lambda"), required_weight(cfg.mu, "mu"));
    require_admissible(type, pairs.front().first, pairs.front().second);
  } else {
    if (!cfg.max) throw HypothesisViolation("verify needs --max or --lambda/--mu");
    if (*cfg.max < 0) throw HypothesisViolation("--max must be non-negative");
    pairs = sweep_pairs(type, *cfg.max);
  }
  const auto reports = parallel_map(pairs.size(), cfg.jobs, [&](std::size_t i) {
    return verify_pair(type, pairs[i].first, pairs[i].second);
  });

  std::size_t checks = 0, observations = 0, differing = 0, failed_pairs = 0;
  const LemmaReport* first = nullptr;
  for (const auto& r : reports) {
    checks += r.checks.size();
    observations += r.observations.size();
    for (const auto& o : r.observations) differing += !o.passed();
    if (!r.pass()) {
      ++failed_pairs;
      if (!first) first = &r;
    }
  }

  if (cfg.fmt() == Format::Json) {
    if (pairs.size() == 1) {
      emit(cfg, dump_line(to_json(reports.front())));
    } else {
      Json j{{"type", std::string(to_string(type))}, {"max", *cfg.max},     {"pairs", pairs.size()},
             {"checks", checks},                     {"failed_pairs", failed_pairs},
             {"observations", observations},         {"observations_differing", differing}};
      j["first_failure"] = first ? to_json(*first) : Json(nullptr);
      emit(cfg, dump_line(j));
    }
  } else {
    std::ostringstream os;
    os << pairs.size() << (pairs.size() == 1 ? " pair, " : " pairs, ");
    if (!first) {
      os << "all checks pass\n";
    } else {
      const LemmaCheck& c = *first->first_failure();
      os << failed_pairs << " failing\nfirst failure: " << first->lemma << " at lambda=" << first->lambda
         << ", mu=" << first->mu << ": " << c.label << ": expected " << c.expected << ", got " << c.actual;
      if (!c.detail.empty()) os << " [" << c.detail << "]";
      os << '\n';
    }
    os << checks << " checks asserted; " << observations << " observations recorded, " << differing
       << " differ from the printed form\n";
    emit(cfg, os.str());
  }
  return first ? 1 : 0;
}

void print_schur_table(std::ostream& os, const SchurComparison& cmp) {
  os << "nu        lhs  rhs\n";
  for (const auto& row : cmp.rows) {
    std::ostringstream nu;
    nu << row.nu;
    os << nu.str() << std::string(nu.str().size() < 10 ? 10 - nu.str().size() : 1, ' ') << row.lhs << "    "
       << row.rhs << (row.lhs > row.rhs ? "  <-- fails" : "") << '\n';
  }
  os << "verdict: " << (cmp.dominated ? "true" : "false") << '\n';
}

int cmd_schur_sweep(const RunConfig& cfg, LieType type, Int max) {
  if (max < 0) throw HypothesisViolation("--max must be non-negative");
  std::map<WeightPair, TensorDecomposition> cache;
  auto product = [&](const Weight& a, const Weight& b) -> const TensorDecomposition& {
    auto [it, fresh] = cache.try_emplace({a, b});
    if (fresh) it->second = klimyk_decompose(type, a, b);
    return it->second;
  };
  std::size_t tested = 0, failed = 0;
  std::string first_failure;
  for (Int s1 = 0; s1 <= max; ++s1) {
    for (Int s2 = 0; s2 <= max; ++s2) {
      const Weight sigma{s1, s2};
      std::vector<WeightPair> splits;
      for (Int a = 0; a <= s1; ++a) {
        for (Int b = 0; b <= s2; ++b) splits.emplace_back(Weight{a, b}, sigma - Weight{a, b});
      }
      for (const auto& [l1, l2] : splits) {
        for (const auto& [u1, u2] : splits) {
          if (schur_hypothesis_failure(type, l1, l2, u1, u2)) continue;
          ++tested;
          const auto& left = product(l1, l2);
          const auto& right = product(u1, u2);
          for (const auto& [nu, m] : left.entries) {
            const auto it = right.entries.find(nu);
            if (m > (it == right.entries.end() ? 0 : it->second)) {
              if (failed++ == 0) {
                std::ostringstream os;
                os << "(" << l1 << "," << l2 << ") vs (" << u1 << "," << u2 << ") at nu=" << nu;
                first_failure = os.str();
              }
              break;
            }
          }
        }
      }
    }
  }
  if (cfg.fmt() == Format::Json) {
    Json j{{"type", std::string(to_string(type))}, {"max", max}, {"quadruples", tested}, {"failed", failed}};
    j["first_failure"] = failed ? Json(first_failure) : Json(nullptr);
    emit(cfg, dump_line(j));
  } else {
    std::ostringstream os;
    os << tested << " hypothesized quadruples, ";
    if (failed == 0) {
      os << "all dominated\n";
    } else {
      os << failed << " not dominated; first: " << first_failure << '\n';
    }
    emit(cfg, os.str());
  }
  return failed ? 1 : 0;
}

int cmd_schur(const RunConfig& cfg) {
  const LieType type = cfg.type();
  if (cfg.lambda.empty() && cfg.mu.empty()) {
    if (!cfg.max) throw HypothesisViolation("schur needs --max or all of --lambda, --lambda2, --mu, --mu2");
    return cmd_schur_sweep(cfg, type, *cfg.max);
  }
  const Weight l1 = required_weight(cfg.lambda, "lambda"), l2 = required_weight(cfg.lambda2, "lambda2");
  const Weight u1 = required_weight(cfg.mu, "mu"), u2 = required_weight(cfg.mu2, "mu2");
  const SchurComparison cmp = schur_compare(type, l1, l2, u1, u2);
  if (cfg.fmt() == Format::Json) {
    Json rows = Json::array();
    for (const auto& r : cmp.rows) rows.push_back(Json{{"nu", {r.nu[0], r.nu[1]}}, {"lhs", r.lhs}, {"rhs", r.rhs}});
    emit(cfg, dump_line(Json{{"type", std::string(to_string(type))}, {"dominated", cmp.dominated}, {"rows", rows}}));
  } else if (cfg.fmt() == Format::Csv) {
    std::ostringstream os;
    os << "nu1,nu2,lhs,rhs\n";
    for (const auto& r : cmp.rows) os << r.nu[0] << ',' << r.nu[1] << ',' << r.lhs << ',' << r.rhs << '\n';
    emit(cfg, os.str());
  } else {
    std::ostringstream os;
    print_schur_table(os, cmp);
    emit(cfg, os.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded fusion products for A2, C2 and G2"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type_name, "A2, C2 or G2")->required();
    sub->add_option("--format", cfg.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", cfg.out, "output file (default: standard output)");
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto pair = [&](CLI::App* sub) {
    sub->add_option("--lambda", cfg.lambda, "first weight, e.g. 2,1");
    sub->add_option("--mu", cfg.mu, "second weight");
  };

  auto* decompose = app.add_subcommand("decompose", "graded decomposition of V(lambda) * V(mu)");
  auto* oracle = app.add_subcommand("oracle", "ungraded Klimyk decomposition");
  auto* count = app.add_subcommand("count", "|S|, |T| and the Klimyk total");
  auto* verify = app.add_subcommand("verify", "oracle, cardinality, dimension and lemma checks");
  auto* schur = app.add_subcommand("schur", "compare V(lambda)(x)V(lambda2) with V(mu)(x)V(mu2)");
  for (auto* sub : {decompose, oracle, count, verify, schur}) {
    common(sub);
    pair(sub);
  }
  for (auto* sub : {verify, schur}) sub->add_option("--max", cfg.max, "sweep bound on every coordinate");
  schur->add_option("--lambda2", cfg.lambda2, "second weight of the left pair");
  schur->add_option("--mu2", cfg.mu2, "second weight of the right pair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*decompose) return cmd_decompose(cfg);
    if (*oracle) return cmd_oracle(cfg);
    if (*count) return cmd_count(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*schur) return cmd_schur(cfg);
  } catch (const HypothesisViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
