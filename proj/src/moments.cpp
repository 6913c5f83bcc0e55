#include "omlab/moments.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "omlab/format.hpp"
#include "omlab/orthomin.hpp"
#include "omlab/qseries.hpp"
#include "omlab/spectra.hpp"

namespace omlab {

ClosedForms closed_forms(cplx omega, double rho) {
    if (!(rho > 0.0 && rho < 1.0))
        throw std::domain_error("closed_forms: rho must lie in (0, 1)");
    // denominator = ||r||^2-normalized <(U + rho) r, (U + rho) r> scale; for a
    // probability measure on the unit circle it is >= (1 - rho)^2 > 0
    double denom = 1.0 + rho * rho + 2.0 * rho * omega.real();
    if (!(denom > 0.0))
        throw NumericalError("closed_forms: nonpositive denominator, |omega| exceeds 1");
    ClosedForms cf;
    cf.lambda = (1.0 + rho * std::conj(omega)) / denom;
    cf.T = (omega + rho) / (rho * std::conj(omega) + 1.0);
    double disc = (1.0 - std::norm(omega)) / denom;
    // roundoff can push 1 - |omega|^2 a hair negative at |omega| = 1
    cf.q = rho * std::sqrt(std::max(disc, 0.0));
    return cf;
}

namespace {

MomentRow make_row(int n, std::vector<cplx> omega, double rho) {
    MomentRow row;
    row.n = n;
    row.omega = std::move(omega);
    cplx om1 = row.omega.size() > 1 ? row.omega[1] : row.omega[0];
    ClosedForms cf = closed_forms(om1, rho);
    row.T = cf.T;
    row.lambda = cf.lambda;
    row.beta = 1.0 - cf.lambda;
    row.q = cf.q;
    return row;
}

} // namespace

MomentSequence finite_moments_start(const cvec& zeta, const cvec& r0, double rho) {
    const int d = static_cast<int>(zeta.size());
    if (d < 1) throw std::invalid_argument("finite_moments_start: empty spectrum");
    if (r0.size() != zeta.size())
        throw std::invalid_argument("finite_moments_start: r0 length must match spectrum");
    double mass = 0.0;
    for (const cplx& c : r0) mass += std::norm(c);
    if (!(mass > 0.0))
        throw std::invalid_argument("finite_moments_start: r0 has no mass");

    std::vector<cplx> omega(d);
    for (int j = 0; j < d; ++j) {
        cplx acc = 0.0;
        for (int i = 0; i < d; ++i) {
            // zeta_i^j accumulated per weight; d stays small here so the
            // direct power is cheaper to read than a running product table
            acc += std::pow(zeta[i], j) * std::norm(r0[i]);
        }
        omega[j] = acc / mass;
    }
    MomentSequence seq;
    seq.mode = MomentSequence::Mode::finite;
    seq.rho = rho;
    seq.zeta = zeta;
    seq.rows.push_back(make_row(0, std::move(omega), rho));
    return seq;
}

MomentSequence haar_moments_start(int J, double rho) {
    if (J < 1) throw std::invalid_argument("haar_moments_start: need J >= 1");
    std::vector<cplx> omega(J + 1, cplx(0.0));
    omega[0] = 1.0;
    MomentSequence seq;
    seq.mode = MomentSequence::Mode::haar;
    seq.rho = rho;
    seq.rows.push_back(make_row(0, std::move(omega), rho));
    return seq;
}

void advance(MomentSequence& seq) {
    const MomentRow& cur = seq.rows.back();
    const std::vector<cplx>& om = cur.omega;
    const cplx T = cur.T;
    const double t2 = std::norm(T);
    const cplx om1 = om.size() > 1 ? om[1] : om[0];
    const double denom = 1.0 + t2 - 2.0 * (std::conj(T) * om1).real();
    if (!(denom > 1e-300))
        throw NumericalError("advance: measure collapsed onto T, recurrence denominator vanished");

    std::vector<cplx> next;
    if (seq.mode == MomentSequence::Mode::finite) {
        const int d = static_cast<int>(om.size());
        next.resize(d);
        // For the normalized measure omega_0 = 1 and omega_{d-j} = conj(omega_j)
        // hold exactly; pin both instead of recomputing them, because rounding
        // residue in either direction is re-amplified step over step at d = 2.
        next[0] = 1.0;
        for (int j = 1; j < d; ++j) {
            const cplx& lo = om[j - 1];
            const cplx& hi = om[(j + 1) % d];
            next[j] = ((1.0 + t2) * om[j] - T * lo - std::conj(T) * hi) / denom;
        }
        for (int j = 1; 2 * j <= d; ++j) {
            const cplx sym = 0.5 * (next[j] + std::conj(next[d - j]));
            next[j] = sym;
            next[d - j] = std::conj(sym);
        }
    } else {
        const int top = static_cast<int>(om.size()) - 1;
        if (top < 2)
            throw NumericalError(
                "advance: truncated moment vector exhausted, restart with a larger J");
        next.resize(top);  // indices 0..top-1; omega_{n, top} is the last input consumed
        for (int j = 0; j < top; ++j) {
            // the measure is conjugate symmetric, so omega_{-1} = conj(omega_1)
            const cplx lo = j == 0 ? std::conj(om[1]) : om[j - 1];
            next[j] = ((1.0 + t2) * om[j] - T * lo - std::conj(T) * om[j + 1]) / denom;
        }
    }
    seq.rows.push_back(make_row(cur.n + 1, std::move(next), seq.rho));
}

double moments_match_solver(int d, double rho, const cvec& r0, int steps) {
    if (d < 1) throw std::invalid_argument("moments_match_solver: need d >= 1");
    if (!(rho > 0.0 && rho < 1.0))
        throw std::invalid_argument("moments_match_solver: rho must lie in (0, 1)");
    if (static_cast<int>(r0.size()) != d)
        throw std::invalid_argument("moments_match_solver: r0 length must match d");

    SpectrumSpec spec;
    spec.kind = SpectrumSpec::Kind::unit_circle_roots;
    spec.d = d;
    spec.rho = rho;
    spec.z0 = 1.0;
    LinearOperator A = build(spec);
    cvec zeta = unitary_part(spec);

    // x0 = 0 makes the initial residual exactly r0
    cvec x0(d, cplx(0.0));
    std::vector<std::vector<cplx>> direct;  // direct[n][j], j = 0..d-1
    TraceOptions opts;
    opts.on_residual = [&](int n, const cvec& r) {
        if (n > steps) return;
        double mass = 0.0;
        for (const cplx& c : r) mass += std::norm(c);
        if (!(mass > 0.0)) return;  // exact convergence, nothing left to compare
        std::vector<cplx> row(d);
        for (int j = 0; j < d; ++j) {
            cplx acc = 0.0;
            for (int i = 0; i < d; ++i) acc += std::pow(zeta[i], j) * std::norm(r[i]);
            row[j] = acc / mass;
        }
        direct.push_back(std::move(row));
    };
    StoppingRule rule;
    rule.max_iters = steps;
    solve(A, r0, x0, 1, rule, opts);

    MomentSequence seq = finite_moments_start(zeta, r0, rho);
    for (int n = 0; n < static_cast<int>(direct.size()) - 1; ++n) advance(seq);

    double worst = 0.0;
    for (std::size_t n = 0; n < direct.size(); ++n)
        for (int j = 0; j < d; ++j)
            worst = std::max(worst, std::abs(direct[n][j] - seq.rows[n].omega[j]));
    return worst;
}

std::vector<Rational> haar_exact_Tn(const Rational& rho, int n_max, std::vector<bool>* step_ok) {
    if (!(rho > 0 && rho < 1))
        throw std::invalid_argument("haar_exact_Tn: rho must lie in (0, 1)");
    if (n_max < 0) throw std::invalid_argument("haar_exact_Tn: need n_max >= 0");
    if (step_ok) step_ok->assign(n_max + 1, false);

    // residual polynomial p_n(z) = prod_{m<n} (T_m - z), coefficients ascending;
    // against the uniform circle measure omega_n = sum a_i a_{i+1} / sum a_i^2
    std::vector<Rational> a{Rational(1)};
    std::vector<Rational> out;
    out.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        Rational num = 0, den = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            den += a[i] * a[i];
            if (i + 1 < a.size()) num += a[i] * a[i + 1];
        }
        Rational omega = num / den;
        Rational T = (omega + rho) / (rho * omega + 1);
        const bool match = T == scalar_pow(rho, 2 * n + 1);
        if (step_ok)
            (*step_ok)[n] = match;
        else if (!match)
            throw IdentityError("haar_exact_Tn: T_" + std::to_string(n) +
                                " deviates from rho^(2n+1)");
        out.push_back(T);

        // p_{n+1}(z) = (T - z) p_n(z)
        std::vector<Rational> b(a.size() + 1);
        b[0] = T * a[0];
        for (std::size_t i = 1; i < a.size(); ++i) b[i] = T * a[i] - a[i - 1];
        b[a.size()] = -a.back();
        a = std::move(b);
    }
    return out;
}

bool ladder_check(int d, double rho, int n_max, LadderReport* report) {
    if (d < 4) throw std::invalid_argument("ladder_check: need d >= 4");
    if (!(rho > 0.0 && rho < 0.1))
        throw std::invalid_argument("ladder_check: rho must lie in (0, 0.1)");
    if (n_max < 1) throw std::invalid_argument("ladder_check: need n_max >= 1");

    // The claimed decay |beta_n| <= rho^{n+2} outruns double precision after a
    // dozen steps, so the measure dynamics run in extended precision. Weights
    // start uniform (r0 = ones) and stay real; by the j <-> d-j symmetry every
    // moment is real, so only cosines enter.
    using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<400>>;
    const BigFloat pi = acos(BigFloat(-1));
    const BigFloat rho_b(rho);
    const double u_cap = rho + 3.0 * rho * rho;
    const double v_cap = 3.0 * rho * rho;
    const double dbl_floor = std::numeric_limits<double>::min();

    std::vector<BigFloat> w(d, BigFloat(1));
    std::vector<BigFloat> c1(d), c2(d);
    for (int j = 0; j < d; ++j) {
        BigFloat th = 2 * pi * j / d;
        c1[j] = cos(th);
        c2[j] = cos(2 * th);
    }

    bool ok = true;
    int checked = 0;
    double worst_ratio = 0.0, worst_u = 0.0, worst_v = 0.0, q_gap = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        BigFloat s0 = 0, s1 = 0, s2 = 0;
        for (int j = 0; j < d; ++j) {
            s0 += w[j];
            s1 += w[j] * c1[j];
            s2 += w[j] * c2[j];
        }
        BigFloat u = s1 / s0;
        BigFloat v = s2 / s0;
        BigFloat denom = 1 + rho_b * rho_b + 2 * rho_b * u;
        BigFloat beta = rho_b * (u + rho_b) / denom;
        BigFloat T = (u + rho_b) / (1 + rho_b * u);
        BigFloat q = rho_b * sqrt((1 - u * u) / denom);

        if (n >= 1) {
            BigFloat cap = pow(rho_b, n + 2);
            worst_ratio = std::max(worst_ratio, static_cast<double>(abs(beta) / cap));
            worst_u = std::max(worst_u, static_cast<double>(abs(u)));
            worst_v = std::max(worst_v, static_cast<double>(abs(v)));
            if (abs(beta) > cap || static_cast<double>(abs(u)) > u_cap ||
                static_cast<double>(abs(v)) > v_cap)
                ok = false;
            checked = n;
            q_gap = static_cast<double>(abs(q - rho_b));
            if (cap < dbl_floor) break;  // the bound is below double's range
        }

        // w_{n+1,j} = |zeta_j - T_n|^2 w_{n,j}, real T: 1 - 2 T cos + T^2
        for (int j = 0; j < d; ++j) w[j] *= 1 - 2 * T * c1[j] + T * T;
    }

    if (report) {
        report->steps_checked = checked;
        report->worst_beta_ratio = worst_ratio;
        report->worst_u = worst_u;
        report->worst_v = worst_v;
        report->final_q_gap = q_gap;
    }
    return ok;
}

std::vector<cplx> limit_moments(double rho, int k_max, int n) {
    if (k_max < 1) throw std::invalid_argument("limit_moments: need k_max >= 1");
    if (n < 0) throw std::invalid_argument("limit_moments: need n >= 0");
    MomentSequence seq = haar_moments_start(k_max + n, rho);
    for (int i = 0; i < n; ++i) advance(seq);
    const std::vector<cplx>& om = seq.rows.back().omega;
    return std::vector<cplx>(om.begin(), om.begin() + k_max + 1);
}

void write_moments_csv(std::ostream& out, const MomentSequence& seq, int J, int digits) {
    out << "n,T_re,T_im,lambda_re,lambda_im,beta_abs,q";
    for (int j = 0; j <= J; ++j) out << ",omega_" << j << "_re,omega_" << j << "_im";
    out << "\n";
    for (const MomentRow& row : seq.rows) {
        out << row.n << ',' << fmt_g(row.T.real(), digits) << ',' << fmt_g(row.T.imag(), digits)
            << ',' << fmt_g(row.lambda.real(), digits) << ',' << fmt_g(row.lambda.imag(), digits)
            << ',' << fmt_g(std::abs(row.beta), digits) << ',' << fmt_g(row.q, digits);
        for (int j = 0; j <= J; ++j) {
            if (j < static_cast<int>(row.omega.size()))
                out << ',' << fmt_g(row.omega[j].real(), digits) << ','
                    << fmt_g(row.omega[j].imag(), digits);
            else
                out << ",,";  // haar rows shrink; absent indices stay blank
        }
        out << "\n";
    }
}

} // namespace omlab
