#include "sumprod/report.hpp"

#include <charconv>

namespace sumprod {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

nlohmann::json report_json(const VerificationReport& rep) {
    nlohmann::json j;
    j["task"] = rep.task;
    j["input"] = rep.input;
    j["bound"] = rep.bound;
    j["measured"] = rep.measured;
    j["pass"] = rep.pass;
    j["constants"] = rep.constants;
    j["elapsed_ms"] = rep.elapsed_ms;
    j["notes"] = rep.notes;
    return j;
}

std::string report_to_string(const VerificationReport& rep) { return report_json(rep).dump(2); }

std::string report_line(const VerificationReport& rep) {
    std::string line = rep.pass ? "PASS " : "FAIL ";
    line += rep.task + ": measured=" + rep.measured + " bound=" + rep.bound;
    for (const auto& [k, v] : rep.constants) line += " " + k + "=" + v;
    return line;
}

}  // namespace sumprod
