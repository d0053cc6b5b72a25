#ifndef RANK2_SERIALIZE_HPP
#define RANK2_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "rank2/graded_fusion.hpp"
#include "rank2/lemma_verifier.hpp"

namespace rank2 {

using Json = nlohmann::ordered_json;

/// {"type", "lambda", "mu", "entries": [{"nu", "poly"}]} with entries in
/// descending order of nu.
Json to_json(const GradedDecomposition& d);
/// Inverse of to_json; throws HypothesisViolation on malformed input.
GradedDecomposition graded_from_json(const Json& j);

Json to_json(LieType type, const Weight& lambda, const Weight& mu, const TensorDecomposition& d);
Json to_json(const LemmaCheck& c);
Json to_json(const LemmaReport& r);

/// Compact single-line JSON followed by a newline.
std::string dump_line(const Json& j);

/// One row per (nu, degree) with nonzero multiplicity.
std::string to_csv(const GradedDecomposition& d, bool header = true);
std::string to_csv(LieType type, const Weight& lambda, const Weight& mu, const TensorDecomposition& d,
                   bool header = true);

std::string to_text(const GradedDecomposition& d);
std::string to_text(LieType type, const Weight& lambda, const Weight& mu, const TensorDecomposition& d);

}  // namespace rank2

#endif  // RANK2_SERIALIZE_HPP
