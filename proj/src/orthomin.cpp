#include "omlab/orthomin.hpp"

#include <cmath>

namespace omlab {

OrthominState make_state(const LinearOperator& A, const cvec& b, const cvec& x0, int k) {
    if (k < 1) throw std::invalid_argument("make_state: k must be >= 1");
    if (static_cast<int>(b.size()) != A.d || static_cast<int>(x0.size()) != A.d)
        throw std::invalid_argument("make_state: dimension mismatch");
    OrthominState s;
    s.k = k;
    s.n = 0;
    s.x = x0;
    // p_0 = r_0 = b - A x_0
    s.r = b;
    cvec Ax = omlab::apply(A, x0);
    for (std::size_t j = 0; j < s.r.size(); ++j) s.r[j] -= Ax[j];
    s.dirs.emplace_back(s.r, omlab::apply(A, s.r));
    return s;
}

cplx step(OrthominState& s, const LinearOperator& A) {
    const auto& [pn, Apn] = s.dirs.front();
    const double den = inner(Apn, Apn).real();
    if (!(den > kBreakdownThreshold))
        throw NumericalError("orthomin step: direction breakdown, ||Ap||^2 = " + std::to_string(den));

    // lambda_n = <r_n, A p_n> / <A p_n, A p_n>
    const cplx lambda = inner(s.r, Apn) / den;
    if (lambda == cplx{0.0, 0.0}) s.stagnated = true;

    s.x = axpy(lambda, pn, s.x);
    s.r = axpy(-lambda, Apn, s.r);

    // p_{n+1} = r_{n+1} - sum_{j=1}^{min(k-1, n+1)} nu_j p_{n-j+1},
    // nu_j chosen so A p_{n+1} is orthogonal to every buffered A p.
    // The loop bound is what makes the first k steps of depth k and k+1
    // bitwise identical: it saturates only from iteration k-1 on.
    cvec Ar = omlab::apply(A, s.r);
    cvec pnext = s.r;
    cvec Apnext = Ar;
    const int terms = std::min(s.k - 1, s.n + 1);
    for (int j = 1; j <= terms; ++j) {
        const auto& [pj, Apj] = s.dirs[static_cast<std::size_t>(j - 1)];
        const cplx nu = inner(Ar, Apj) / inner(Apj, Apj).real();
        pnext = axpy(-nu, pj, pnext);
        Apnext = axpy(-nu, Apj, Apnext);
    }
    s.dirs.emplace_front(std::move(pnext), std::move(Apnext));
    while (static_cast<int>(s.dirs.size()) > s.k) s.dirs.pop_back();

    ++s.n;
    return lambda;
}

namespace {
cplx measure_omega(const cvec& unitary_diag, const cvec& r, double rnorm) {
    // <U r, r> / <r, r>
    cplx num{0.0, 0.0};
    for (std::size_t j = 0; j < r.size(); ++j) num += unitary_diag[j] * r[j] * std::conj(r[j]);
    return num / (rnorm * rnorm);
}
} // namespace

std::pair<cvec, ConvergenceTrace> solve(const LinearOperator& A, const cvec& b, const cvec& x0,
                                        int k, const StoppingRule& stop, const TraceOptions& opts) {
    ConvergenceTrace trace;
    OrthominState s = make_state(A, b, x0, k);

    double rnorm = norm(s.r);
    const double r0norm = rnorm;

    TraceRecord rec0;
    rec0.n = 0;
    rec0.residual_norm = rnorm;
    if (opts.unitary_diag && rnorm > 0.0) rec0.omega = measure_omega(*opts.unitary_diag, s.r, rnorm);
    trace.records.push_back(rec0);
    if (opts.on_residual) opts.on_residual(0, s.r);

    if (r0norm == 0.0) {  // x0 already solves the system
        trace.converged = true;
        return {s.x, trace};
    }

    for (int it = 0; it < stop.max_iters; ++it) {
        if (rnorm <= stop.rtol * r0norm) {
            trace.converged = true;
            break;
        }
        cplx lambda;
        try {
            lambda = step(s, A);
        } catch (const NumericalError&) {
            trace.breakdown = true;
            break;
        }
        const double next = norm(s.r);
        TraceRecord rec;
        rec.n = s.n;
        rec.residual_norm = next;
        rec.q = next / rnorm;
        rec.lambda = lambda;
        if (opts.unitary_diag && next > 0.0) rec.omega = measure_omega(*opts.unitary_diag, s.r, next);
        trace.records.push_back(rec);
        if (opts.on_residual) opts.on_residual(s.n, s.r);
        rnorm = next;
    }
    if (!trace.converged && stop.rtol > 0.0 && rnorm <= stop.rtol * r0norm) trace.converged = true;
    trace.stagnated = s.stagnated;
    return {s.x, trace};
}

cvec residual_projection_oracle(const cvec& r, const std::vector<cvec>& Aps) {
    if (Aps.empty()) throw std::invalid_argument("residual_projection_oracle: empty basis");
    // orthonormalize the Aps (modified Gram-Schmidt), dropping degenerate ones
    std::vector<cvec> basis;
    for (const cvec& a : Aps) {
        const double orig = norm(a);
        if (orig == 0.0) throw std::invalid_argument("residual_projection_oracle: zero basis vector");
        cvec w = a;
        for (const cvec& e : basis) w = axpy(-inner(w, e), e, w);
        const double wn = norm(w);
        if (wn < 1e-12 * orig) continue;  // numerically inside the current span
        for (cplx& z : w) z /= wn;
        basis.push_back(std::move(w));
    }
    cvec out = r;
    for (const cvec& e : basis) out = axpy(-inner(out, e), e, out);
    return out;
}

} // namespace omlab
