#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "cyline/families.hpp"
#include "cyline/normal_bundle.hpp"
#include "cyline/schubert.hpp"

namespace cyline {

using json = nlohmann::json;

// Raised for JSON that parses but does not match a schema; the message starts with the
// path of the offending field, e.g. "polys[0].degree: missing field".
class SchemaError : public Error {
 public:
  using Error::Error;
};

json to_json(Complex z);
json to_json(const HomogeneousPoly& p);
json to_json(const Line& l);
json to_json(const CompleteIntersection& X);
json to_json(const SplittingType& s);
json to_json(const BigInt& n);

Complex complex_from_json(const json& j, const std::string& path = "");
HomogeneousPoly poly_from_json(const json& j, const std::string& path = "");
Line line_from_json(const json& j, const std::string& path = "");
CompleteIntersection variety_from_json(const json& j, const std::string& path = "");

json solution_to_json(const LineSolution33& s, Complex lambda);
json solution_to_json(const LineSolution2222& s, Complex lambda, Complex mu);

// Canonical Plücker vector rounded to 12 significant digits, as [[re, im], ...].
json canonical_to_json(const Line& l);

json analysis_to_json(const LineAnalysis& a);

// Reads a file and parses it; malformed JSON comes back as SchemaError with the parser's
// byte position.
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

double round_significant(double x, int digits);

}  // namespace cyline
