#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "sepcert/detectors.hpp"
#include "sepcert/table.hpp"
#include "sepcert/thermal.hpp"

namespace sepcert {

/// Raised on malformed input documents; message names the offending field or
/// entry index.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the matrix exchange document: `dims` (integer list) and `matrix`
/// (row-major list of rows, each entry a [re, im] pair; integer or decimal
/// literals accepted).
std::pair<Matrix, CompositeDims> parse_matrix_document(const nlohmann::json& doc);
std::pair<Matrix, CompositeDims> load_matrix_file(const std::string& path);

nlohmann::json matrix_document(const Matrix& m, const CompositeDims& dims);

nlohmann::json to_json(const DetectorReport& r);
nlohmann::json to_json(const ModulusEstimate& e);
nlohmann::json to_json(const TableEntry& e);
nlohmann::json to_json(const ThermalWindow& w);

std::string verdict_name(Verdict v);
std::string provenance_name(ThresholdProvenance p);
std::string method_name(ModulusMethod m);

}  // namespace sepcert
