#include "fano/report_json.hpp"

#include <sstream>
#include <stdexcept>

namespace fano {

namespace {

mpz_class mpz_from_json_string(const nlohmann::json& v, const char* field) {
  if (!v.is_string())
    throw std::invalid_argument(std::string(field) + " must be a decimal string");
  return mpz_class(v.get<std::string>());
}

}  // namespace

nlohmann::ordered_json report_to_json(const InvariantsReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["degrees"] = report.degrees;
  j["k"] = report.k;
  j["r"] = static_cast<int>(report.degrees.size());
  j["delta"] = report.delta;
  j["hypothesis_ok"] = report.hypothesis_ok;
  j["hypothesis_reason"] = report.hypothesis_reason;
  j["degree"] = report.degree.get_str();
  if (report.genus)
    j["genus"] = report.genus->get_str();
  else
    j["genus"] = nullptr;
  j["canonical_coefficient"] = report.canonical_coefficient;
  j["oracle_checked"] = report.oracle_checked;
  if (include_timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

InvariantsReport report_from_json(const nlohmann::json& j) {
  InvariantsReport report;
  report.n = j.at("n").get<int>();
  report.degrees = j.at("degrees").get<std::vector<int>>();
  report.k = j.at("k").get<int>();
  if (j.at("r").get<int>() != static_cast<int>(report.degrees.size()))
    throw std::invalid_argument("field r disagrees with the degrees list length");
  report.delta = j.at("delta").get<long long>();
  report.hypothesis_ok = j.at("hypothesis_ok").get<bool>();
  report.hypothesis_reason = j.at("hypothesis_reason").get<std::string>();
  report.degree = mpz_from_json_string(j.at("degree"), "degree");
  if (!j.at("genus").is_null()) report.genus = mpz_from_json_string(j.at("genus"), "genus");
  report.canonical_coefficient = j.at("canonical_coefficient").get<long long>();
  report.oracle_checked = j.at("oracle_checked").get<bool>();
  report.elapsed_ms = j.value("elapsed_ms", 0.0);
  return report;
}

std::string render_text(const InvariantsReport& report, bool include_timing) {
  std::ostringstream os;
  os << "n: " << report.n << "\n";
  os << "degrees: ";
  for (std::size_t i = 0; i < report.degrees.size(); ++i) {
    if (i > 0) os << ",";
    os << report.degrees[i];
  }
  os << "\n";
  os << "k: " << report.k << "\n";
  os << "r: " << report.degrees.size() << "\n";
  os << "delta: " << report.delta << "\n";
  os << "hypothesis_ok: " << (report.hypothesis_ok ? "true" : "false") << "\n";
  os << "hypothesis_reason: " << report.hypothesis_reason << "\n";
  os << "canonical_coefficient: " << report.canonical_coefficient << "\n";
  os << "degree: " << report.degree.get_str() << "\n";
  if (report.genus) os << "genus: " << report.genus->get_str() << "\n";
  os << "oracle_checked: " << (report.oracle_checked ? "true" : "false") << "\n";
  if (include_timing) os << "elapsed_ms: " << report.elapsed_ms << "\n";
  return os.str();
}

}  // namespace fano
