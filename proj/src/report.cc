#include "gauss/report.h"

namespace gauss {

using nlohmann::ordered_json;

ordered_json report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["statement"] = report.statement;
  j["p"] = report.p;
  j["n"] = report.n;
  j["budget"] = report.budget;
  j["total_functions"] = report.total_functions;
  j["passing_spectral"] = report.passing_spectral;
  j["passing_oracle"] = report.passing_oracle;
  j["mismatch_count"] = report.mismatches.size();
  j["mismatches"] = ordered_json::array();
  for (const auto& exps : report.mismatches) j["mismatches"].push_back(exps);
  j["witnesses"] = ordered_json::array();
  for (const Witness& w : report.witnesses) {
    ordered_json entry;
    entry["exps"] = w.exps;
    entry["a"] = w.a ? ordered_json(*w.a) : ordered_json(nullptr);
    j["witnesses"].push_back(std::move(entry));
  }
  j["details"] = ordered_json::object();
  for (const auto& [key, value] : report.details) j["details"][key] = value;
  j["error"] = report.error ? ordered_json(*report.error) : ordered_json(nullptr);
  j["elapsed_ms"] = report.elapsed_ms;
  j["success"] = report.success;
  return j;
}

VerificationReport report_from_json(const ordered_json& j) {
  try {
    VerificationReport r;
    r.statement = j.at("statement").get<std::string>();
    r.p = j.at("p").get<std::int64_t>();
    r.n = j.at("n").get<std::int64_t>();
    r.budget = j.at("budget").get<std::uint64_t>();
    r.total_functions = j.at("total_functions").get<std::uint64_t>();
    r.passing_spectral = j.at("passing_spectral").get<std::uint64_t>();
    r.passing_oracle = j.at("passing_oracle").get<std::uint64_t>();
    for (const auto& m : j.at("mismatches")) r.mismatches.push_back(m.get<std::vector<std::int64_t>>());
    if (j.at("mismatch_count").get<std::size_t>() != r.mismatches.size()) {
      throw ParseError("mismatch_count disagrees with mismatches");
    }
    for (const auto& w : j.at("witnesses")) {
      Witness witness{w.at("exps").get<std::vector<std::int64_t>>(), std::nullopt};
      if (!w.at("a").is_null()) witness.a = w.at("a").get<std::int64_t>();
      r.witnesses.push_back(std::move(witness));
    }
    for (const auto& [key, value] : j.at("details").items()) r.details[key] = value.get<std::int64_t>();
    if (!j.at("error").is_null()) r.error = j.at("error").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    r.success = j.at("success").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string serialize_report(const VerificationReport& report) {
  return report_to_json(report).dump();
}

VerificationReport parse_report(const std::string& text) {
  try {
    return report_from_json(ordered_json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace gauss
