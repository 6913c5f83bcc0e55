#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace omlab {

using Rational = boost::multiprecision::cpp_rational;

// Exact complex scalar: big-rational real and imaginary parts. Closed under
// +,-,*,/ so identity checks can demand literal equality instead of tolerances.
struct ExactScalar {
    Rational re{0};
    Rational im{0};

    ExactScalar() = default;
    ExactScalar(int v) : re(v) {}  // NOLINT: implicit by design, mirrors scalar literals
    ExactScalar(Rational r) : re(std::move(r)) {}
    ExactScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ExactScalar operator-(const ExactScalar& a) { return {-a.re, -a.im}; }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
        Rational den = b.re * b.re + b.im * b.im;
        if (den == 0) throw std::domain_error("ExactScalar: division by zero");
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

inline ExactScalar conj_scalar(const ExactScalar& a) { return {a.re, -a.im}; }
inline double abs_scalar(const ExactScalar& a) { return std::abs(a.to_complex()); }

// scalar shims so templated q-series code treats double, complex and exact alike
inline double conj_scalar(double x) { return x; }
inline std::complex<double> conj_scalar(const std::complex<double>& z) { return std::conj(z); }
inline double abs_scalar(double x) { return std::abs(x); }
inline double abs_scalar(const std::complex<double>& z) { return std::abs(z); }

} // namespace omlab
