#include "omlab/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace omlab {

namespace {

double cross(cplx o, cplx a, cplx b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(cplx a, cplx b, cplx z) {
    cplx ab = b - a;
    double ab2 = std::norm(ab);
    if (ab2 == 0.0) return std::abs(z - a);
    double t = ((z.real() - a.real()) * ab.real() + (z.imag() - a.imag()) * ab.imag()) / ab2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(z - (a + t * ab));
}

} // namespace

std::vector<cplx> convex_hull(std::vector<cplx> points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: no points");
    std::sort(points.begin(), points.end(), [](cplx a, cplx b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t n = points.size();
    if (n <= 2) return points;

    // monotone chain; pop only on strict clockwise turns so collinear points stay
    std::vector<cplx> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) < 0.0) --k;
        hull[k++] = points[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
        while (k >= t && cross(hull[k - 2], hull[k - 1], points[i]) < 0.0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    return hull;
}

double hull_distance(const std::vector<cplx>& points, cplx z) {
    std::vector<cplx> hull = convex_hull(points);
    if (hull.size() == 1) return std::abs(z - hull[0]);

    // shoelace; a zero-area (collinear) hull has no interior to test against
    double twice_area = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        cplx a = hull[i];
        cplx b = hull[(i + 1) % hull.size()];
        twice_area += a.real() * b.imag() - b.real() * a.imag();
    }

    bool inside = twice_area != 0.0;
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        cplx a = hull[i];
        cplx b = hull[(i + 1) % hull.size()];
        if (cross(a, b, z) < 0.0) inside = false;  // hull is counterclockwise
        dmin = std::min(dmin, segment_distance(a, b, z));
    }
    return inside ? 0.0 : dmin;
}

double fov_distance_normal(const std::vector<cplx>& mu) {
    return hull_distance(mu, cplx{0.0, 0.0});
}

double eisenstat_bound(double delta, double opnorm) {
    if (!(opnorm > 0.0)) throw std::domain_error("eisenstat_bound: opnorm must be positive");
    if (delta < 0.0 || delta > opnorm)
        throw std::domain_error("eisenstat_bound: need 0 <= delta <= opnorm");
    return std::sqrt(1.0 - (delta / opnorm) * (delta / opnorm));
}

std::pair<double, double> circle_bounds(double rho, double z0_mod) {
    if (!(rho >= 0.0) || !(rho < z0_mod))
        throw std::domain_error("circle_bounds: need 0 <= rho < |z0|");
    double ratio = rho / z0_mod;
    return {ratio, 2.0 * std::sqrt(ratio) / (1.0 + ratio)};
}

BoundReport bound_report(const std::vector<cplx>& mu, double rho, double z0_mod) {
    BoundReport r;
    r.fov_distance = fov_distance_normal(mu);
    for (const cplx& m : mu) r.operator_norm = std::max(r.operator_norm, std::abs(m));
    r.eisenstat = eisenstat_bound(std::min(r.fov_distance, r.operator_norm), r.operator_norm);
    if (rho > 0.0 && z0_mod > rho) {
        auto [nb, cb] = circle_bounds(rho, z0_mod);
        r.normal_bound = nb;
        r.classic_bound = cb;
    }
    return r;
}

namespace {
std::vector<double> q_values(const ConvergenceTrace& trace) {
    std::vector<double> q;
    for (const TraceRecord& rec : trace.records)
        if (rec.q) q.push_back(*rec.q);
    return q;
}
} // namespace

RateEstimate estimate_rate(const ConvergenceTrace& trace, int window) {
    if (window < 1) throw std::invalid_argument("estimate_rate: window >= 1");
    std::vector<double> q = q_values(trace);
    if (static_cast<int>(q.size()) < window)
        throw ConfigError("estimate_rate: trace too short for window " + std::to_string(window));
    std::vector<double> tail(q.end() - window, q.end());
    std::sort(tail.begin(), tail.end());
    RateEstimate est;
    est.window = window;
    est.limit = (window % 2 == 1) ? tail[window / 2]
                                  : 0.5 * (tail[window / 2 - 1] + tail[window / 2]);
    est.residual_spread = tail.back() - tail.front();
    return est;
}

double geometric_rate(const ConvergenceTrace& trace) {
    const auto& recs = trace.records;
    if (recs.size() < 2) throw ConfigError("geometric_rate: trace has no steps");
    double first = recs.front().residual_norm;
    double last = recs.back().residual_norm;
    int n = recs.back().n - recs.front().n;
    if (!(first > 0.0) || !(last > 0.0) || n < 1)
        throw ConfigError("geometric_rate: needs positive norms and at least one step");
    return std::pow(last / first, 1.0 / n);
}

bool monotonicity_check(const ConvergenceTrace& trace) {
    std::vector<double> q = q_values(trace);
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] < -1e-12 || q[i] > 1.0 + 1e-12) return false;
        if (i > 0 && q[i] < q[i - 1] - 1e-12) return false;
    }
    return true;
}

bool pearson_inequality_check(const std::vector<cplx>& xi, const std::vector<double>& weights) {
    if (xi.size() != weights.size() || xi.empty())
        throw std::invalid_argument("pearson_inequality_check: sample/weight length mismatch");
    double wsum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("pearson_inequality_check: negative weight");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-10)
        throw std::invalid_argument("pearson_inequality_check: weights must sum to 1");

    cplx e_xi{0.0, 0.0}, e_mixed{0.0, 0.0};
    double e_sq = 0.0, e_one_minus = 0.0, e_both = 0.0;
    for (std::size_t j = 0; j < xi.size(); ++j) {
        double w = weights[j];
        double sq = std::norm(xi[j]);
        double om = std::norm(cplx{1.0, 0.0} - xi[j]);
        e_xi += w * xi[j];
        e_sq += w * sq;
        e_one_minus += w * om;
        e_both += w * sq * om;
        e_mixed += w * xi[j] * om;
    }
    if (std::abs(e_xi - cplx{e_sq, 0.0}) > 1e-10)
        throw std::invalid_argument(
            "pearson_inequality_check: moment identity E(xi) = E(|xi|^2) violated; "
            "the inequality is only claimed under it");
    return e_sq * e_one_minus * e_both >= std::norm(e_mixed) - 1e-12;
}

} // namespace omlab
