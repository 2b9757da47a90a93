#include "specfactor/report.hpp"

#include <cstdio>

namespace specfactor {

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return buf;
}

nlohmann::ordered_json report_to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["theorem"] = r.theorem;
    j["verdict"] = r.verdict();
    j["params"] = r.params;
    j["checked"] = r.checked;
    j["counterexamples"] = r.counterexamples;
    j["extremal_attainers"] = r.extremal_attainers;
    if (r.has_threshold) j["threshold_rho"] = format_real(r.threshold_rho);
    j["ties"] = r.ties;
    j["sampled"] = r.sampled;
    if (r.sampled) j["samples"] = r.samples;
    j["notes"] = r.notes;
    j["wall_time_ms"] = format_real(r.wall_time_ms);
    return j;
}

std::string report_to_string(const VerificationReport& r) {
    return report_to_json(r).dump(2) + "\n";
}

}  // namespace specfactor
