#pragma once

#include <iosfwd>

#include "omlab/exact.hpp"
#include "omlab/linop.hpp"

namespace omlab {

// Quantities the first moment determines in closed form:
// lambda = (1 + rho conj(omega)) / (1 + rho^2 + 2 rho Re omega)
// T      = (omega + rho) / (rho conj(omega) + 1)
// q      = rho sqrt((1 - |omega|^2) / (1 + rho^2 + 2 rho Re omega))
struct ClosedForms {
    cplx lambda;
    cplx T;
    double q;
};
ClosedForms closed_forms(cplx omega, double rho);

struct MomentRow {
    int n = 0;
    std::vector<cplx> omega;  // finite mode: indices 0..d-1 (periodic); haar: 0..J_n
    cplx T;
    cplx lambda;
    cplx beta;  // 1 - lambda
    double q = 0.0;
};

// Moment table of the depth-1 iteration's residual measure. Two modes:
// finite (weights live on d unit-modulus points zeta_j, indices wrap mod d)
// and haar (truncated moment vector of a circle measure; the recurrence
// consumes the top index each step).
struct MomentSequence {
    enum class Mode { finite, haar };
    Mode mode = Mode::finite;
    double rho = 0.0;
    cvec zeta;  // finite mode spectrum of the unitary factor
    std::vector<MomentRow> rows;

    int top_index() const { return static_cast<int>(rows.back().omega.size()) - 1; }
};

// omega_{0,j} = sum_i zeta_i^j |r0_i|^2 / sum_i |r0_i|^2, j = 0..d-1
MomentSequence finite_moments_start(const cvec& zeta, const cvec& r0, double rho);

// uniform circle measure: omega_{0,0} = 1, omega_{0,j} = 0 for 1 <= j <= J
MomentSequence haar_moments_start(int J, double rho);

// appends row n+1:
// omega_{n+1,j} = [(1+|T|^2) omega_{n,j} - T omega_{n,j-1} - conj(T) omega_{n,j+1}]
//                 / [1+|T|^2 - 2 Re(conj(T) omega_{n,1})]
// finite mode wraps indices mod d; haar mode drops the top index
void advance(MomentSequence& seq);

// runs the depth-1 solver on the d-th-roots-of-unity system and the moment
// recurrence side by side; returns the max absolute moment deviation over
// n <= steps, all indices
double moments_match_solver(int d, double rho, const cvec& r0, int steps);

// exact-rational evolution of the residual polynomial for the uniform circle
// measure; returns T_0..T_{n_max}. When step_ok is null, any step with
// T_n != rho^{2n+1} throws; otherwise per-step verdicts are recorded and the
// evolution continues with the computed T
std::vector<Rational> haar_exact_Tn(const Rational& rho, int n_max,
                                    std::vector<bool>* step_ok = nullptr);

struct LadderReport {
    int steps_checked = 0;
    // max over checked n of |beta_n| / rho^{n+2}; must stay <= 1
    double worst_beta_ratio = 0.0;
    double worst_u = 0.0;       // max |u_n|, to compare with rho + 3 rho^2
    double worst_v = 0.0;       // max |v_n|, to compare with 3 rho^2
    double final_q_gap = 0.0;   // |q - rho| at the last checked step
};

// Certifies the inequality ladder |beta_n| <= rho^{n+2}, |u_n| <= rho + 3 rho^2,
// |v_n| <= 3 rho^2 (u = omega_{n,1}, v = omega_{n,2}) for 1 <= n until rho^{n+2}
// drops below the double-precision minimum or n_max is hit. Runs the residual
// measure dynamics w <- |zeta - T_n|^2 w in ~400-digit floating point: the
// quantities fall through double's cancellation floor long before the claimed
// range ends. Requires 0 < rho < 0.1, d >= 4, and r0 = ones (the hypotheses).
bool ladder_check(int d, double rho, int n_max, LadderReport* report = nullptr);

// haar-mode omega_{n,k} for k = 0..k_max after n steps (truncation k_max + n);
// compare against the limit (-1)^k rho^{k^2}
std::vector<cplx> limit_moments(double rho, int k_max, int n);

// columns: n, T_re, T_im, lambda_re, lambda_im, beta_abs, q,
// then omega_j_re, omega_j_im for j = 0..J
void write_moments_csv(std::ostream& out, const MomentSequence& seq, int J, int digits = 10);

} // namespace omlab
