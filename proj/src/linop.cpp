#include "omlab/linop.hpp"

#include <cmath>
#include <utility>

namespace omlab {

namespace {
void require_same_length(const cvec& u, const cvec& v, const char* who) {
    if (u.size() != v.size())
        throw std::invalid_argument(std::string(who) + ": dimension mismatch (" +
                                    std::to_string(u.size()) + " vs " + std::to_string(v.size()) + ")");
}
} // namespace

cplx inner(const cvec& u, const cvec& v) {
    require_same_length(u, v, "inner");
    cplx s{0.0, 0.0};
    for (std::size_t j = 0; j < u.size(); ++j) s += u[j] * std::conj(v[j]);
    return s;
}

double norm(const cvec& v) {
    // accumulate |v_j|^2 directly; the experiment scales stay far from overflow
    double s = 0.0;
    for (const cplx& z : v) s += std::norm(z);
    return std::sqrt(s);
}

cvec axpy(cplx alpha, const cvec& x, const cvec& y) {
    require_same_length(x, y, "axpy");
    cvec out(y);
    for (std::size_t j = 0; j < x.size(); ++j) out[j] += alpha * x[j];
    return out;
}

LinearOperator diagonal_operator(cvec entries) {
    if (entries.empty()) throw std::invalid_argument("diagonal_operator: empty diagonal");
    LinearOperator A;
    A.kind = LinearOperator::Kind::diagonal;
    A.d = static_cast<int>(entries.size());
    A.diag = std::move(entries);
    return A;
}

LinearOperator dense_operator(std::vector<cvec> rows) {
    if (rows.empty()) throw std::invalid_argument("dense_operator: no rows");
    const std::size_t d = rows.size();
    for (const cvec& r : rows)
        if (r.size() != d)
            throw std::invalid_argument("dense_operator: matrix must be square");
    LinearOperator A;
    A.kind = LinearOperator::Kind::dense;
    A.d = static_cast<int>(d);
    A.rows = std::move(rows);
    return A;
}

cvec apply(const LinearOperator& A, const cvec& v) {
    if (static_cast<int>(v.size()) != A.d)
        throw std::invalid_argument("apply: dimension mismatch");
    cvec out(v.size());
    if (A.kind == LinearOperator::Kind::diagonal) {
        for (std::size_t j = 0; j < v.size(); ++j) out[j] = A.diag[j] * v[j];
    } else {
        // plain row action; no conjugation on either factor
        for (std::size_t i = 0; i < A.rows.size(); ++i) {
            cplx s{0.0, 0.0};
            const cvec& row = A.rows[i];
            for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * v[j];
            out[i] = s;
        }
    }
    return out;
}

double operator_norm_diag(const LinearOperator& A) {
    if (A.kind != LinearOperator::Kind::diagonal)
        throw std::invalid_argument("operator_norm_diag: diagonal operators only");
    double m = 0.0;
    for (const cplx& z : A.diag) m = std::max(m, std::abs(z));
    return m;
}

} // namespace omlab
