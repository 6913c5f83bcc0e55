#pragma once

#include <complex>
#include <limits>
#include <utility>
#include <vector>

#include "omlab/exact.hpp"
#include "omlab/linop.hpp"

namespace omlab {

// coefficients ascending in the variable; works for double, complex, ExactScalar
template <class S>
using Polynomial = std::vector<S>;

inline bool exactly_zero(double x) { return x == 0.0; }
inline bool exactly_zero(const std::complex<double>& z) { return z == std::complex<double>{0.0, 0.0}; }
inline bool exactly_zero(const ExactScalar& s) { return s.is_zero(); }

template <class S>
S scalar_pow(S base, long e) {
    S out{1};
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

// (x; q)_n = prod_{i=1}^{n} (1 - x q^{i-1}); empty product for n = 0
template <class S>
S q_pochhammer(const S& x, const S& q, int n) {
    S out{1};
    S xq = x;
    for (int i = 1; i <= n; ++i) {
        out = out * (S{1} - xq);
        xq = xq * q;
    }
    return out;
}

// Gaussian binomial, product form prod_{i=1}^{n} (1 - q^{m-n+i}) / (1 - q^i);
// exact in rational mode, stable at small |q| in floating mode
template <class S>
S q_binomial(int m, int n, const S& q) {
    if (n < 0 || n > m) throw std::invalid_argument("q_binomial: need 0 <= n <= m");
    S out{1};
    for (int i = 1; i <= n; ++i) {
        S den = S{1} - scalar_pow(q, i);
        if (exactly_zero(den) || abs_scalar(den) < 1e-300)
            throw ConfigError("q_binomial: q is a root of unity of order <= m (degenerate)");
        out = out * (S{1} - scalar_pow(q, m - n + i)) / den;
    }
    return out;
}

// Phi_n(X) = prod_{k=1}^{n} (X - q^{2k-1}), expanded to ascending coefficients
template <class S>
Polynomial<S> phi_polynomial(int n, const S& q) {
    Polynomial<S> a{S{1}};
    S root = q;            // q^{2k-1} for k = 1
    const S q2 = q * q;
    for (int k = 1; k <= n; ++k) {
        Polynomial<S> next(a.size() + 1, S{0});
        for (std::size_t i = 0; i < a.size(); ++i) {
            next[i + 1] = next[i + 1] + a[i];          // X * a_i
            next[i] = next[i] - root * a[i];           // -q^{2k-1} * a_i
        }
        a = std::move(next);
        root = root * q2;
    }
    return a;
}

// lhs = sum a_i a_{i+1} / sum a_i^2 over Phi_n's coefficients,
// rhs = -q (1 - q^{2n}) / (1 - q^{2n+2})
template <class S>
std::pair<S, S> phi_ratio_identity_check(int n, const S& q) {
    if (n < 1) throw std::invalid_argument("phi_ratio_identity_check: n >= 1");
    Polynomial<S> a = phi_polynomial(n, q);
    S num{0}, den{0};
    for (std::size_t i = 0; i + 1 < a.size(); ++i) num = num + a[i] * a[i + 1];
    for (std::size_t i = 0; i < a.size(); ++i) den = den + a[i] * a[i];
    S q2n = scalar_pow(q, 2L * n);
    S down = S{1} - q2n * q * q;
    if (exactly_zero(den) || exactly_zero(down))
        throw ConfigError("phi_ratio_identity_check: degenerate q");
    return {num / den, S{0} - q * (S{1} - q2n) / down};
}

// (zq; q)_m (z^{-1}; q)_n  vs  sum_{k=-n}^{m} (-1)^k q^{k(k+1)/2} z^k binom(m+n, n+k)_q
template <class S>
std::pair<S, S> macmahon_check(int m, int n, const S& q, const S& z) {
    if (exactly_zero(z)) throw std::invalid_argument("macmahon_check: z must be nonzero");
    S zinv = S{1} / z;
    S lhs = q_pochhammer(z * q, q, m) * q_pochhammer(zinv, q, n);
    S rhs{0};
    for (int k = -n; k <= m; ++k) {
        S term = scalar_pow(q, static_cast<long>(k) * (k + 1) / 2);
        term = term * (k >= 0 ? scalar_pow(z, k) : scalar_pow(zinv, -k));
        term = term * q_binomial(m + n, n + k, q);
        rhs = (k % 2 == 0) ? rhs + term : rhs - term;
    }
    return {lhs, rhs};
}

// Laurent-expands Phi_n(x) Phi_n(1/x) and compares each coefficient with
// (-1)^k q^{k^2} binom(2n, n+k)_{q^2}; returns the largest absolute mismatch
template <class S>
double finite_jacobi_check(int n, const S& q) {
    if (n < 1) throw std::invalid_argument("finite_jacobi_check: n >= 1");
    Polynomial<S> a = phi_polynomial(n, q);
    const S q2 = q * q;
    double worst = 0.0;
    for (int k = -n; k <= n; ++k) {
        // coefficient of x^k in the product: sum_j a_{j+k} a_j
        S left{0};
        for (int j = std::max(0, -k); j <= std::min(n, n - k); ++j)
            left = left + a[static_cast<std::size_t>(j + k)] * a[static_cast<std::size_t>(j)];
        S right = scalar_pow(q, static_cast<long>(k) * k) * q_binomial(2 * n, n + k, q2);
        if (k % 2 != 0) right = S{0} - right;
        S diff = left - right;
        if (!exactly_zero(diff))
            worst = std::max(worst, std::max(abs_scalar(diff), std::numeric_limits<double>::min()));
    }
    return worst;
}

// (sum a_i^2, sum a_i a_{i+1}); closed forms are binom(2n,n)_{q^2} and
// -q binom(2n, n+1)_{q^2}
template <class S>
std::pair<S, S> coefficient_sums(int n, const S& q) {
    if (n < 1) throw std::invalid_argument("coefficient_sums: n >= 1");
    Polynomial<S> a = phi_polynomial(n, q);
    S sum_sq{0}, sum_adj{0};
    for (std::size_t i = 0; i < a.size(); ++i) sum_sq = sum_sq + a[i] * a[i];
    for (std::size_t i = 0; i + 1 < a.size(); ++i) sum_adj = sum_adj + a[i] * a[i + 1];
    return {sum_sq, sum_adj};
}

// prod_{k=1}^{K} |z - rho^{2k-1}|^2  vs  (rho^2; rho^2)_K^{-1} sum_{|k|<=K} (-1)^k rho^{k^2} z^k.
// Truncation tails decay like rho^{2K}; both returns are real parts, the
// imaginary part of the sum is checked to vanish.
std::pair<double, double> jacobi_triple_product_check(double rho, cplx z, int K);

} // namespace omlab
