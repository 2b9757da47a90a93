#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace specfactor {

// Eigenvalues and other reals rendered as fixed 12-decimal strings so report
// bytes match across platforms.
std::string format_real(double x);

struct VerificationReport {
    std::string theorem;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    long long checked = 0;
    std::vector<std::string> counterexamples;     // graph6
    std::vector<std::string> extremal_attainers;  // graph6
    double threshold_rho = 0.0;
    bool has_threshold = false;
    std::vector<std::string> ties;  // graph6, unresolved near-threshold cases
    bool sampled = false;
    long long samples = 0;
    std::vector<std::string> notes;
    double wall_time_ms = 0.0;

    bool pass() const { return counterexamples.empty(); }
    std::string verdict() const {
        if (!counterexamples.empty()) return "counterexample";
        return sampled ? "no_counterexample_in_samples" : "pass";
    }
};

nlohmann::ordered_json report_to_json(const VerificationReport& r);
std::string report_to_string(const VerificationReport& r);  // 2-space indent + newline

}  // namespace specfactor
