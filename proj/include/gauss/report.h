// JSON encoding of verification reports. Field order is fixed so that
// parse -> serialize reproduces the input byte for byte.

#ifndef GAUSS_REPORT_H_
#define GAUSS_REPORT_H_

#include <string>

#include <nlohmann/json.hpp>

#include "gauss/verify.h"

namespace gauss {

nlohmann::ordered_json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::ordered_json& j);

// Single-line JSON.
std::string serialize_report(const VerificationReport& report);
VerificationReport parse_report(const std::string& text);

}  // namespace gauss

#endif  // GAUSS_REPORT_H_
