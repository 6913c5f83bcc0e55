#include "omlab/qseries.hpp"

#include <cmath>

namespace omlab {

std::pair<double, double> jacobi_triple_product_check(double rho, cplx z, int K) {
    if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("jacobi_triple_product_check: 0 < rho < 1");
    if (std::abs(std::abs(z) - 1.0) > 1e-12)
        throw std::invalid_argument("jacobi_triple_product_check: z must lie on the unit circle");

    double lhs = 1.0;
    double odd = rho;  // rho^{2k-1}
    for (int k = 1; k <= K; ++k) {
        lhs *= std::norm(z - odd);
        odd *= rho * rho;
    }

    // (rho^2; rho^2)_K
    double poch = 1.0;
    double p = rho * rho;
    for (int k = 1; k <= K; ++k) {
        poch *= 1.0 - p;
        p *= rho * rho;
    }

    cplx sum{1.0, 0.0};  // k = 0 term
    cplx zk{1.0, 0.0};
    cplx zmk{1.0, 0.0};
    double sign = 1.0;
    for (int k = 1; k <= K; ++k) {
        zk *= z;
        zmk /= z;
        sign = -sign;
        sum += sign * std::pow(rho, static_cast<double>(k) * k) * (zk + zmk);
    }
    sum /= poch;
    if (std::abs(sum.imag()) > 1e-10 * std::max(1.0, std::abs(sum.real())))
        throw IdentityError("jacobi_triple_product_check: series did not come out real");
    return {lhs, sum.real()};
}

} // namespace omlab
