#pragma once

#include <vector>

#include "omlab/linop.hpp"
#include "omlab/orthomin.hpp"

namespace omlab {

struct BoundReport {
    double fov_distance = 0.0;    // delta: distance from 0 to the field of values
    double operator_norm = 0.0;   // ||A|| (max |mu_j| for diagonal A)
    double eisenstat = 1.0;       // sqrt(1 - delta^2 / ||A||^2)
    double normal_bound = 1.0;    // rho / |z0| for circle spectra, else 1
    double classic_bound = 1.0;   // 2 sqrt(rho/|z0|) / (1 + rho/|z0|)
};

struct RateEstimate {
    double limit = 0.0;           // median of trailing q values
    int window = 0;
    double residual_spread = 0.0; // max - min of q over the window; large = oscillatory
};

// Convex hull of planar points (monotone chain); counterclockwise, collinear
// points kept. Returned as the closed polygon's vertex list (not repeated).
std::vector<cplx> convex_hull(std::vector<cplx> points);

// Euclidean distance from z to the convex hull (0 if inside or on it)
double hull_distance(const std::vector<cplx>& points, cplx z);

// delta = distance from the origin to the field of values; for normal
// operators the field of values is the hull of the spectrum
double fov_distance_normal(const std::vector<cplx>& mu);

// sqrt(1 - delta^2 / opnorm^2); requires 0 <= delta <= opnorm
double eisenstat_bound(double delta, double opnorm);

// (rho/|z0|, 2 sqrt(rho/|z0|) / (1 + rho/|z0|)); requires 0 < rho < z0_mod
std::pair<double, double> circle_bounds(double rho, double z0_mod);

// bound report for a diagonal spectrum; when the spectrum is a circle family,
// pass rho and |z0| so the circle bounds are included
BoundReport bound_report(const std::vector<cplx>& mu, double rho = 0.0, double z0_mod = 0.0);

// median of the last `window` q values plus their spread
RateEstimate estimate_rate(const ConvergenceTrace& trace, int window = 10);

// whole-run geometric mean (||r_N|| / ||r_0||)^{1/N}; the right estimator for
// slowly drifting q sequences where the trailing median has not settled
double geometric_rate(const ConvergenceTrace& trace);

// true iff the recorded q sequence is nondecreasing (within 1e-12) and in [0, 1]
bool monotonicity_check(const ConvergenceTrace& trace);

// E(|xi|^2) E(|1-xi|^2) E(|xi|^2 |1-xi|^2) >= |E(xi |1-xi|^2)|^2, valid under
// the moment identity E(xi) = E(|xi|^2); the identity is a precondition and
// its violation is a contract error, not a "false"
bool pearson_inequality_check(const std::vector<cplx>& xi, const std::vector<double>& weights);

} // namespace omlab
