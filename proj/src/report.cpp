#include "omlab/report.hpp"

#include <ostream>

#include "omlab/format.hpp"

namespace omlab {

void write_trace_csv(std::ostream& out, const RunReport& report, int digits) {
    out << "k,n,residual_norm,q,lambda_re,lambda_im,omega_re,omega_im\n";
    for (const KRunSummary& run : report.results) {
        for (const TraceRecord& rec : run.trace.records) {
            out << run.k << ',' << rec.n << ',' << fmt_g(rec.residual_norm, digits) << ',';
            if (rec.q) out << fmt_g(*rec.q, digits);
            out << ',';
            if (rec.lambda)
                out << fmt_g(rec.lambda->real(), digits) << ',' << fmt_g(rec.lambda->imag(), digits);
            else
                out << ',';
            out << ',';
            if (rec.omega)
                out << fmt_g(rec.omega->real(), digits) << ',' << fmt_g(rec.omega->imag(), digits);
            else
                out << ',';
            out << "\n";
        }
    }
}

nlohmann::json report_to_json(const RunReport& report) {
    nlohmann::json j;
    j["version"] = kVersion;
    j["config"] = report.config;
    j["results"] = nlohmann::json::array();
    j["rates"] = nlohmann::json::array();
    for (const KRunSummary& run : report.results) {
        nlohmann::json res;
        res["k"] = run.k;
        res["converged"] = run.trace.converged;
        res["breakdown"] = run.trace.breakdown;
        res["stagnated"] = run.trace.stagnated;
        res["iterations"] = static_cast<int>(run.trace.records.size()) - 1;
        res["final_residual_norm"] = run.trace.final_norm();
        nlohmann::json norms = nlohmann::json::array();
        nlohmann::json qs = nlohmann::json::array();
        for (const TraceRecord& rec : run.trace.records) {
            norms.push_back(rec.residual_norm);
            if (rec.q) qs.push_back(*rec.q);
        }
        res["residual_norms"] = std::move(norms);
        res["q"] = std::move(qs);
        j["results"].push_back(std::move(res));

        nlohmann::json rate;
        rate["k"] = run.k;
        rate["limit"] = run.rate.limit;
        rate["window"] = run.rate.window;
        rate["residual_spread"] = run.rate.residual_spread;
        rate["geometric"] = run.geometric_rate;
        j["rates"].push_back(std::move(rate));
    }
    if (report.bounds) {
        j["bounds"] = {{"fov_distance", report.bounds->fov_distance},
                       {"operator_norm", report.bounds->operator_norm},
                       {"eisenstat", report.bounds->eisenstat},
                       {"normal_bound", report.bounds->normal_bound},
                       {"classic_bound", report.bounds->classic_bound}};
    } else {
        j["bounds"] = nullptr;
    }
    j["wall_seconds"] = report.wall_seconds;
    return j;
}

} // namespace omlab
