#include "omlab/spectra.hpp"

#include <cmath>

#include <json.hpp>

#include "omlab/prng.hpp"

namespace omlab {

LinearOperator roots_of_unity_system(int d, double rho, cplx z0) {
    if (d < 1) throw ConfigError("roots_of_unity_system: d >= 1 required");
    if (!(rho > 0.0) || !(rho < std::abs(z0)))
        throw ConfigError("roots_of_unity_system: need 0 < rho < |z0|, got rho=" + std::to_string(rho) +
                          ", |z0|=" + std::to_string(std::abs(z0)) +
                          " (spectrum would enclose the origin)");
    cvec mu(d);
    for (int j = 0; j < d; ++j) {
        double ang = 2.0 * M_PI * j / d;
        mu[j] = z0 + rho * cplx{std::cos(ang), std::sin(ang)};
    }
    return diagonal_operator(std::move(mu));
}

LinearOperator ellipse_system(int d, double alpha, double beta, double theta, cplx u) {
    if (d < 1) throw ConfigError("ellipse_system: d >= 1 required");
    if (!(alpha > 0.0) || !(beta > 0.0)) throw ConfigError("ellipse_system: semi-axes must be positive");
    // move the origin into ellipse coordinates; require it strictly outside
    cplx w = (cplx{0.0, 0.0} - u) * cplx{std::cos(-theta), std::sin(-theta)};
    double level = (w.real() / alpha) * (w.real() / alpha) + (w.imag() / beta) * (w.imag() / beta);
    if (level <= 1.0)
        throw ConfigError("ellipse_system: origin inside or on the ellipse ((x/a)^2+(y/b)^2 = " +
                          std::to_string(level) + " <= 1); the operator would be singular");
    cvec mu(d);
    cplx rot{std::cos(theta), std::sin(theta)};
    for (int j = 1; j <= d; ++j) {
        double g = 2.0 * M_PI * j / d;
        mu[j - 1] = u + rot * cplx{alpha * std::cos(g), beta * std::sin(g)};
    }
    return diagonal_operator(std::move(mu));
}

LinearOperator pde_system(int d, double a, double b, double c) {
    if (d < 3) throw ConfigError("pde_system: d >= 3 required");
    if (!(a > 0.0) || c < 0.0) throw ConfigError("pde_system: need a > 0 and c >= 0");
    const double h = 2.0 * M_PI / d;
    cvec mu(d);
    for (int k = 0; k < d; ++k) {
        double re = -(2.0 * a / (h * h)) * std::cos(k * h) + c + 2.0 * a / (h * h);
        double im = (b / h) * std::sin(k * h);
        mu[k] = {re, im};
        if (std::abs(mu[k]) < 1e-14)
            throw ConfigError("pde_system: eigenvalue k=" + std::to_string(k) +
                              " vanishes; the discretized operator is singular");
    }
    return diagonal_operator(std::move(mu));
}

LinearOperator arc_system(int d, double rho, double half_angle) {
    if (d < 1) throw ConfigError("arc_system: d >= 1 required");
    if (!(rho > 0.0 && rho < 1.0)) throw ConfigError("arc_system: need 0 < rho < 1");
    if (!(half_angle > 0.0 && half_angle <= M_PI)) throw ConfigError("arc_system: need 0 < half_angle <= pi");
    cvec mu(d);
    for (int j = 0; j < d; ++j) {
        double t = (d == 1) ? 0.0 : -half_angle + 2.0 * half_angle * j / (d - 1);
        mu[j] = 1.0 + rho * cplx{std::cos(t), std::sin(t)};
    }
    return diagonal_operator(std::move(mu));
}

LinearOperator perturbed_roots(int d, double rho, std::uint64_t seed, double jitter) {
    if (d < 1) throw ConfigError("perturbed_roots: d >= 1 required");
    if (jitter < 0.0) throw ConfigError("perturbed_roots: jitter >= 0 required");
    if (!(rho > 0.0 && rho < 1.0)) throw ConfigError("perturbed_roots: need 0 < rho < 1");
    SplitMix64 gen(seed);
    cvec mu(d);
    for (int j = 0; j < d; ++j) {
        double eta = gen.uniform(-jitter, jitter);
        double ang = 2.0 * M_PI * j / d + eta;
        mu[j] = 1.0 + rho * cplx{std::cos(ang), std::sin(ang)};
    }
    return diagonal_operator(std::move(mu));
}

LinearOperator build(const SpectrumSpec& s) {
    switch (s.kind) {
        case SpectrumSpec::Kind::unit_circle_roots: return roots_of_unity_system(s.d, s.rho, s.z0);
        case SpectrumSpec::Kind::perturbed_circle: return perturbed_roots(s.d, s.rho, s.seed, s.jitter);
        case SpectrumSpec::Kind::ellipse: return ellipse_system(s.d, s.alpha, s.beta, s.theta, s.u);
        case SpectrumSpec::Kind::pde: return pde_system(s.d, s.a, s.b, s.c);
        case SpectrumSpec::Kind::arc: return arc_system(s.d, s.rho, s.half_angle);
        case SpectrumSpec::Kind::explicit_list: {
            if (s.mu.empty()) throw ConfigError("build: explicit spectrum has no entries");
            for (const cplx& m : s.mu)
                if (std::abs(m) < 1e-300) throw ConfigError("build: explicit spectrum contains zero");
            return diagonal_operator(s.mu);
        }
    }
    throw ConfigError("build: unknown spectrum kind");
}

bool has_unitary_part(const SpectrumSpec& s) {
    switch (s.kind) {
        case SpectrumSpec::Kind::unit_circle_roots:
        case SpectrumSpec::Kind::perturbed_circle:
        case SpectrumSpec::Kind::arc:
            return true;
        default:
            return false;
    }
}

cvec unitary_part(const SpectrumSpec& s) {
    if (!has_unitary_part(s))
        throw ConfigError("unitary_part: spectrum kind '" + kind_name(s.kind) +
                          "' has no shifted-unitary form");
    LinearOperator A = build(s);
    cplx z0 = (s.kind == SpectrumSpec::Kind::unit_circle_roots) ? s.z0 : cplx{1.0, 0.0};
    cvec zeta(A.diag.size());
    for (std::size_t j = 0; j < zeta.size(); ++j) zeta[j] = (A.diag[j] - z0) / s.rho;
    return zeta;
}

std::string kind_name(SpectrumSpec::Kind kind) {
    switch (kind) {
        case SpectrumSpec::Kind::unit_circle_roots: return "unit_circle_roots";
        case SpectrumSpec::Kind::perturbed_circle: return "perturbed_circle";
        case SpectrumSpec::Kind::ellipse: return "ellipse";
        case SpectrumSpec::Kind::pde: return "pde";
        case SpectrumSpec::Kind::arc: return "arc";
        case SpectrumSpec::Kind::explicit_list: return "explicit";
    }
    return "unknown";
}

SpectrumSpec::Kind kind_from_name(const std::string& name) {
    if (name == "unit_circle_roots") return SpectrumSpec::Kind::unit_circle_roots;
    if (name == "perturbed_circle") return SpectrumSpec::Kind::perturbed_circle;
    if (name == "ellipse") return SpectrumSpec::Kind::ellipse;
    if (name == "pde") return SpectrumSpec::Kind::pde;
    if (name == "arc") return SpectrumSpec::Kind::arc;
    if (name == "explicit") return SpectrumSpec::Kind::explicit_list;
    throw ConfigError("unknown spectrum kind '" + name + "'");
}

nlohmann::json spectrum_to_json(const SpectrumSpec& s) {
    nlohmann::json j;
    j["kind"] = kind_name(s.kind);
    switch (s.kind) {
        case SpectrumSpec::Kind::unit_circle_roots:
            j["d"] = s.d;
            j["rho"] = s.rho;
            j["z0_re"] = s.z0.real();
            j["z0_im"] = s.z0.imag();
            break;
        case SpectrumSpec::Kind::perturbed_circle:
            j["d"] = s.d;
            j["rho"] = s.rho;
            j["seed"] = s.seed;
            j["jitter"] = s.jitter;
            break;
        case SpectrumSpec::Kind::ellipse:
            j["d"] = s.d;
            j["alpha"] = s.alpha;
            j["beta"] = s.beta;
            j["theta"] = s.theta;
            j["u_re"] = s.u.real();
            j["u_im"] = s.u.imag();
            break;
        case SpectrumSpec::Kind::pde:
            j["d"] = s.d;
            j["a"] = s.a;
            j["b"] = s.b;
            j["c"] = s.c;
            break;
        case SpectrumSpec::Kind::arc:
            j["d"] = s.d;
            j["rho"] = s.rho;
            j["half_angle"] = s.half_angle;
            break;
        case SpectrumSpec::Kind::explicit_list: {
            nlohmann::json arr = nlohmann::json::array();
            for (const cplx& m : s.mu) arr.push_back({m.real(), m.imag()});
            j["mu"] = std::move(arr);
            break;
        }
    }
    return j;
}

SpectrumSpec spectrum_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ConfigError("spectrum JSON must be an object with a 'kind' field");
    SpectrumSpec s;
    try {
        s.kind = kind_from_name(j.at("kind").get<std::string>());
        auto num = [&](const char* field) -> double { return j.at(field).get<double>(); };
        switch (s.kind) {
            case SpectrumSpec::Kind::unit_circle_roots:
                s.d = j.at("d").get<int>();
                s.rho = num("rho");
                s.z0 = {j.value("z0_re", 1.0), j.value("z0_im", 0.0)};
                break;
            case SpectrumSpec::Kind::perturbed_circle:
                s.d = j.at("d").get<int>();
                s.rho = num("rho");
                s.seed = j.value("seed", std::uint64_t{0});
                s.jitter = j.value("jitter", 0.0);
                break;
            case SpectrumSpec::Kind::ellipse:
                s.d = j.at("d").get<int>();
                s.alpha = num("alpha");
                s.beta = num("beta");
                s.theta = num("theta");
                s.u = {num("u_re"), num("u_im")};
                break;
            case SpectrumSpec::Kind::pde:
                s.d = j.at("d").get<int>();
                s.a = num("a");
                s.b = num("b");
                s.c = num("c");
                break;
            case SpectrumSpec::Kind::arc:
                s.d = j.at("d").get<int>();
                s.rho = num("rho");
                s.half_angle = num("half_angle");
                break;
            case SpectrumSpec::Kind::explicit_list: {
                for (const auto& pair : j.at("mu")) {
                    if (!pair.is_array() || pair.size() != 2)
                        throw ConfigError("explicit spectrum entries must be [re, im] pairs");
                    s.mu.emplace_back(pair[0].get<double>(), pair[1].get<double>());
                }
                s.d = static_cast<int>(s.mu.size());
                break;
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("spectrum JSON: ") + e.what());
    }
    return s;
}

} // namespace omlab
