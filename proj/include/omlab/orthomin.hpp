#pragma once

#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <utility>

#include "omlab/linop.hpp"

namespace omlab {

struct StoppingRule {
    int max_iters = 200;
    double rtol = 0.0;  // stop once ||r_n|| <= rtol * ||r_0||; 0 runs fixed-length
};

struct TraceRecord {
    int n = 0;
    double residual_norm = 0.0;
    // q_n-1 = ||r_n|| / ||r_{n-1}||, present from n >= 1
    std::optional<double> q;
    // line-search coefficient that produced this residual (lambda_{n-1})
    std::optional<cplx> lambda;
    // <U r_n, r_n> / <r_n, r_n> when a unitary diagonal was supplied
    std::optional<cplx> omega;
};

struct ConvergenceTrace {
    std::vector<TraceRecord> records;
    bool converged = false;   // stopping rtol reached
    bool breakdown = false;   // ||A p_n||^2 fell below the breakdown threshold
    bool stagnated = false;   // some lambda_n was exactly zero

    double final_norm() const { return records.empty() ? 0.0 : records.back().residual_norm; }
};

// Sliding window of A-orthogonalized directions, newest first.
struct OrthominState {
    int k = 1;
    int n = 0;  // completed iterations
    cvec x;
    cvec r;
    std::deque<std::pair<cvec, cvec>> dirs;  // (p, Ap), dirs.front() is p_n
    bool stagnated = false;
};

// ||A p||^2 below this is treated as breakdown (precedes floating underflow;
// a nonsingular A only gets here through r_n = 0).
inline constexpr double kBreakdownThreshold = 1e-290;

OrthominState make_state(const LinearOperator& A, const cvec& b, const cvec& x0, int k);

// One iteration: updates x, r, the direction window, and n. Returns lambda_n.
// Throws NumericalError on breakdown.
cplx step(OrthominState& s, const LinearOperator& A);

struct TraceOptions {
    // diagonal of the unitary factor; when set, omega_n is recorded per iterate
    const cvec* unitary_diag = nullptr;
    // called with (n, r_n) for every recorded residual, n = 0 included
    std::function<void(int, const cvec&)> on_residual;
};

std::pair<cvec, ConvergenceTrace> solve(const LinearOperator& A, const cvec& b, const cvec& x0,
                                        int k, const StoppingRule& stop = {},
                                        const TraceOptions& opts = {});

// r minus its orthogonal projection onto span(Aps), by explicit Gram-Schmidt.
// Independent of step(); used as its test oracle. Vectors whose orthogonalized
// norm falls below 1e-12 of the original are dropped (rank deficiency).
cvec residual_projection_oracle(const cvec& r, const std::vector<cvec>& Aps);

} // namespace omlab
