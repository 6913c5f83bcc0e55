#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace omlab {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

// Thrown for invalid experiment configuration (bad parameters, bad geometry,
// unreadable specs). The CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a numerical contract is violated at run time (solver breakdown,
// a proven bound exceeded). CLI exit code 3.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an algebraic identity that must hold exactly fails. CLI exit code 4.
struct IdentityError : std::runtime_error {
    explicit IdentityError(const std::string& what) : std::runtime_error(what) {}
};

// <u, v> = sum_j u_j * conj(v_j); the second argument carries the conjugate.
cplx inner(const cvec& u, const cvec& v);

double norm(const cvec& v);

// y + alpha * x
cvec axpy(cplx alpha, const cvec& x, const cvec& y);

struct LinearOperator {
    enum class Kind { diagonal, dense };
    Kind kind = Kind::diagonal;
    int d = 0;
    cvec diag;               // diagonal entries, kind == diagonal
    std::vector<cvec> rows;  // row-major dense storage, kind == dense
};

LinearOperator diagonal_operator(cvec entries);
LinearOperator dense_operator(std::vector<cvec> rows);

cvec apply(const LinearOperator& A, const cvec& v);

// max_j |mu_j|; the operator norm of a normal (here diagonal) operator
double operator_norm_diag(const LinearOperator& A);

} // namespace omlab
