#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include "omlab/diagnostics.hpp"
#include "omlab/orthomin.hpp"
#include "omlab/report.hpp"
#include "omlab/spectra.hpp"

using namespace omlab;

namespace {

RunReport sample_report() {
    LinearOperator A = roots_of_unity_system(13, 0.8);
    cvec b(13, cplx(1, 0));
    RunReport rep;
    rep.config = nlohmann::json{{"note", "test fixture"}};
    for (int k : {1, 3}) {
        KRunSummary s;
        s.k = k;
        s.trace = solve(A, b, cvec(13, cplx{}), k, {.max_iters = 30}).second;
        s.rate = estimate_rate(s.trace, 10);
        s.geometric_rate = geometric_rate(s.trace);
        rep.results.push_back(std::move(s));
    }
    rep.bounds = bound_report(A.diag, 0.8, 1.0);
    rep.wall_seconds = 0.015;
    return rep;
}

} // namespace

TEST_SUITE("report") {

TEST_CASE("trace CSV is tidy: one row per (k, n) under a fixed header") {
    RunReport rep = sample_report();
    std::ostringstream out;
    write_trace_csv(out, rep);
    std::istringstream in(out.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "k,n,residual_norm,q,lambda_re,lambda_im,omega_re,omega_im");

    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 7);
        CHECK((line.rfind("1,", 0) == 0 || line.rfind("3,", 0) == 0));
    }
    CHECK(rows == 2 * 31);  // two depths, 31 records each (n = 0 included)
}

TEST_CASE("JSON report carries the full result structure") {
    RunReport rep = sample_report();
    nlohmann::json j = report_to_json(rep);

    for (const char* key : {"config", "results", "rates", "bounds", "version", "wall_seconds"})
        CHECK(j.contains(key));
    CHECK(j["version"] == kVersion);
    CHECK(j["config"]["note"] == "test fixture");

    REQUIRE(j["results"].size() == 2);
    const auto& r0 = j["results"][0];
    CHECK(r0["k"] == 1);
    CHECK(r0["iterations"] == 30);
    CHECK(r0["residual_norms"].size() == 31);
    CHECK(r0["q"].size() == 30);
    CHECK(r0.contains("converged"));
    CHECK(r0.contains("breakdown"));
    CHECK(r0.contains("stagnated"));
    CHECK(r0.contains("final_residual_norm"));

    REQUIRE(j["rates"].size() == 2);
    CHECK(j["rates"][1]["k"] == 3);
    CHECK(j["rates"][1]["limit"].get<double>() == doctest::Approx(0.8).epsilon(0.01));
    CHECK(j["rates"][0].contains("geometric"));
    CHECK(j["rates"][0].contains("residual_spread"));

    CHECK(j["bounds"]["normal_bound"].get<double>() == doctest::Approx(0.8));

    // bounds are nullable, not omitted
    rep.bounds.reset();
    nlohmann::json bare = report_to_json(rep);
    CHECK(bare["bounds"].is_null());
}

} // TEST_SUITE
