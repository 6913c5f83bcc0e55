#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "omlab/linop.hpp"

namespace omlab {

// Declarative description of a test spectrum; serializes to JSON and builds
// the corresponding diagonal operator.
struct SpectrumSpec {
    enum class Kind { unit_circle_roots, perturbed_circle, ellipse, pde, arc, explicit_list };
    Kind kind = Kind::unit_circle_roots;

    int d = 0;
    double rho = 0.0;
    cplx z0{1.0, 0.0};
    // ellipse
    double alpha = 0.0, beta = 0.0, theta = 0.0;
    cplx u{0.0, 0.0};
    // pde
    double a = 0.0, b = 0.0, c = 0.0;
    // arc
    double half_angle = 0.0;
    // perturbed circle
    std::uint64_t seed = 0;
    double jitter = 0.0;
    // explicit list
    cvec mu;
};

// mu_j = z0 + rho exp(2 pi i j / d), j = 0..d-1; requires 0 < rho < |z0|
LinearOperator roots_of_unity_system(int d, double rho, cplx z0 = {1.0, 0.0});

// mu_j = u + e^{i theta} (alpha cos g_j + i beta sin g_j), g_j = 2 pi j / d,
// j = 1..d; the origin must be strictly outside the ellipse and its interior
LinearOperator ellipse_system(int d, double alpha, double beta, double theta, cplx u);

// periodic centered-difference advection-reaction-diffusion eigenvalues:
// lambda_k = -(2a/h^2) cos(kh) + i (b/h) sin(kh) + c + 2a/h^2, h = 2 pi / d
LinearOperator pde_system(int d, double a, double b, double c);

// I + rho diag(e^{i theta_j}) with theta_j equispaced across [-half_angle, half_angle]
// (endpoints included; single point at angle 0 for d = 1)
LinearOperator arc_system(int d, double rho, double half_angle);

// entries 1 + rho exp(i (2 pi j / d + eta_j)), eta_j uniform in [-jitter, jitter]
// from the seeded portable generator; the unitary part keeps modulus exactly 1
LinearOperator perturbed_roots(int d, double rho, std::uint64_t seed, double jitter);

LinearOperator build(const SpectrumSpec& spec);

// diagonal of the unitary factor (mu_j - z0)/rho for the shifted-unitary kinds;
// throws for kinds without one (ellipse, pde, explicit)
cvec unitary_part(const SpectrumSpec& spec);
bool has_unitary_part(const SpectrumSpec& spec);

std::string kind_name(SpectrumSpec::Kind kind);
SpectrumSpec::Kind kind_from_name(const std::string& name);

nlohmann::json spectrum_to_json(const SpectrumSpec& spec);
SpectrumSpec spectrum_from_json(const nlohmann::json& j);

} // namespace omlab
