#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace sumprod {

// Machine-readable outcome of one verification task. Serialization is
// canonical (sorted keys, fixed layout); elapsed_ms is the only field allowed
// to differ between reruns with identical inputs.
struct VerificationReport {
    std::string task;
    nlohmann::json input = nlohmann::json::object();
    std::string bound;     // exact value (canonical fraction/integer string)
    std::string measured;  // exact value
    bool pass = false;
    std::map<std::string, std::string> constants;
    double elapsed_ms = 0.0;
    std::vector<std::string> notes;
};

nlohmann::json report_json(const VerificationReport& rep);
std::string report_to_string(const VerificationReport& rep);

// One-line human summary: "PASS task: measured=... bound=...".
std::string report_line(const VerificationReport& rep);

// Deterministic shortest-round-trip double formatting (std::to_chars).
std::string format_double(double v);

}  // namespace sumprod
