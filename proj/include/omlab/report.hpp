#pragma once

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <vector>

#include "omlab/diagnostics.hpp"
#include "omlab/orthomin.hpp"

namespace omlab {

inline constexpr const char* kVersion = "0.1.0";

struct KRunSummary {
    int k = 1;
    ConvergenceTrace trace;
    RateEstimate rate;            // trailing-window median of q_n
    double geometric_rate = 0.0;  // (||r_N|| / ||r_0||)^(1/N)
};

struct RunReport {
    nlohmann::json config;  // fully resolved configuration echo
    std::vector<KRunSummary> results;
    std::optional<BoundReport> bounds;
    double wall_seconds = 0.0;
};

// tidy layout, one row per (k, n):
// k,n,residual_norm,q,lambda_re,lambda_im,omega_re,omega_im
void write_trace_csv(std::ostream& out, const RunReport& report, int digits = 10);

// top-level keys: config, results, bounds, rates, version (+ wall_seconds)
nlohmann::json report_to_json(const RunReport& report);

} // namespace omlab
