#include "sepcert/io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace sepcert {

using nlohmann::json;

std::pair<Matrix, CompositeDims> parse_matrix_document(const json& doc) {
  if (!doc.is_object()) throw ParseError("document root must be an object");
  if (!doc.contains("dims") || !doc["dims"].is_array())
    throw ParseError("missing or malformed field 'dims'");
  if (!doc.contains("matrix") || !doc["matrix"].is_array())
    throw ParseError("missing or malformed field 'matrix'");

  std::vector<int> factors;
  for (const auto& f : doc["dims"]) {
    if (!f.is_number_integer()) throw ParseError("'dims' entries must be integers");
    factors.push_back(f.get<int>());
  }
  CompositeDims dims(factors);
  const int D = dims.total();

  const auto& rows = doc["matrix"];
  if (static_cast<int>(rows.size()) != D)
    throw ParseError("'matrix' has " + std::to_string(rows.size()) + " rows, expected " +
                     std::to_string(D));
  Matrix m(D, D);
  for (int r = 0; r < D; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != D)
      throw ParseError("row " + std::to_string(r) + " malformed, expected " + std::to_string(D) +
                       " entries");
    for (int c = 0; c < D; ++c) {
      const auto& ent = row[static_cast<std::size_t>(c)];
      if (!ent.is_array() || ent.size() != 2 || !ent[0].is_number() || !ent[1].is_number())
        throw ParseError("entry (" + std::to_string(r) + "," + std::to_string(c) +
                         ") malformed, expected [re, im]");
      m(r, c) = Complex(ent[0].get<double>(), ent[1].get<double>());
    }
  }
  return {m, dims};
}

std::pair<Matrix, CompositeDims> load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_matrix_document(doc);
}

json matrix_document(const Matrix& m, const CompositeDims& dims) {
  json doc;
  doc["dims"] = dims.factors();
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc;
}

std::string verdict_name(Verdict v) {
  return v == Verdict::certified_separable ? "certified-separable" : "inconclusive";
}

std::string provenance_name(ThresholdProvenance p) {
  switch (p) {
    case ThresholdProvenance::exact:
      return "exact";
    case ThresholdProvenance::lower_bound:
      return "lower-bound";
    case ThresholdProvenance::upper_bound:
      return "upper-bound";
  }
  return "?";
}

std::string method_name(ModulusMethod m) {
  switch (m) {
    case ModulusMethod::ppt_bisection:
      return "ppt-bisection";
    case ModulusMethod::convexity_bound:
      return "convexity-bound";
    case ModulusMethod::gap_bound:
      return "gap-bound";
    case ModulusMethod::l_floor:
      return "L-floor";
  }
  return "?";
}

json to_json(const DetectorReport& r) {
  json j;
  j["detector"] = r.detector_name;
  j["value"] = r.value;
  j["threshold"] = r.threshold;
  j["verdict"] = verdict_name(r.verdict);
  j["threshold_provenance"] = provenance_name(r.threshold_provenance);
  if (r.bracket) j["bracket"] = {r.bracket->first, r.bracket->second};
  if (r.conditional) j["conditional"] = true;
  return j;
}

json to_json(const ModulusEstimate& e) {
  json j;
  j["lower"] = e.lower;
  j["upper"] = e.upper;
  j["exact"] = e.exact;
  j["method"] = method_name(e.method);
  j["random_robustness"] = e.random_robustness();
  return j;
}

json to_json(const TableEntry& e) {
  json j;
  j["name"] = e.name;
  j["exact"] = e.exact;
  j["lower"] = e.lo;
  j["upper"] = e.hi;
  if (e.lo_rational) j["lower_fraction"] = e.lo_rational->str();
  if (e.hi_rational) j["upper_fraction"] = e.hi_rational->str();
  return j;
}

json to_json(const ThermalWindow& w) {
  json j;
  if (w.beta_o_infinite)
    j["beta_o"] = "infinity";
  else
    j["beta_o"] = w.beta_o;
  j["eta_minus"] = w.eta_minus;
  j["eta_plus"] = w.eta_plus;
  if (w.beta_minus_toth) j["beta_minus_toth"] = *w.beta_minus_toth;
  if (w.beta_plus_toth) j["beta_plus_toth"] = *w.beta_plus_toth;
  if (w.exact_beta_c_plus) j["exact_beta_c_plus"] = *w.exact_beta_c_plus;
  return j;
}

}  // namespace sepcert
