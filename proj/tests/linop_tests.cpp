#include <doctest.h>

#include <cmath>

#include "omlab/linop.hpp"
#include "omlab/prng.hpp"

using namespace omlab;

TEST_SUITE("linop") {

TEST_CASE("inner product conjugates the second argument") {
    // <(i, 1), (1, i)> = i * conj(1) + 1 * conj(i) = i - i = 0
    cvec u{cplx(0, 1), cplx(1, 0)};
    cvec v{cplx(1, 0), cplx(0, 1)};
    CHECK(std::abs(inner(u, v)) == doctest::Approx(0.0).epsilon(1e-15));

    // <(1, 2i), (3i, -1)> = 1 * (-3i) + 2i * (-1) = -5i
    cvec a{cplx(1, 0), cplx(0, 2)};
    cvec b{cplx(0, 3), cplx(-1, 0)};
    cplx got = inner(a, b);
    CHECK(got.real() == doctest::Approx(0.0));
    CHECK(got.imag() == doctest::Approx(-5.0));
}

TEST_CASE("norms of hand vectors") {
    CHECK(norm(cvec{cplx(3, 0), cplx(0, 4)}) == doctest::Approx(5.0));
    CHECK(norm(cvec{cplx(2, 0), cplx(3, 0)}) == doctest::Approx(std::sqrt(13.0)));
    CHECK(norm(cvec{}) == 0.0);
}

TEST_CASE("sesquilinearity and Cauchy-Schwarz over random draws") {
    SplitMix64 rng{2024};
    for (int t = 0; t < 50; ++t) {
        int d = 2 + static_cast<int>(rng.next() % 10);
        cvec u(d), v(d), w(d);
        for (int j = 0; j < d; ++j) {
            u[j] = rng.gaussian_complex();
            v[j] = rng.gaussian_complex();
            w[j] = rng.gaussian_complex();
        }
        cplx alpha = rng.gaussian_complex();

        CHECK(std::abs(inner(u, v)) <= norm(u) * norm(v) * (1.0 + 1e-12));

        // first argument linear: <alpha u + w, v> = alpha <u, v> + <w, v>
        cvec au_w = axpy(alpha, u, w);
        cplx lhs = inner(au_w, v);
        cplx rhs = alpha * inner(u, v) + inner(w, v);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));

        // second argument conjugate linear: <u, alpha v> = conj(alpha) <u, v>
        cvec av(d);
        for (int j = 0; j < d; ++j) av[j] = alpha * v[j];
        CHECK(std::abs(inner(u, av) - std::conj(alpha) * inner(u, v)) <=
              1e-12 * (1.0 + std::abs(inner(u, v))));

        CHECK(std::abs(inner(u, u).real() - norm(u) * norm(u)) <=
              1e-12 * (1.0 + norm(u) * norm(u)));
    }
}

TEST_CASE("axpy computes y + alpha x") {
    cvec x{cplx(1, 1), cplx(2, 0)};
    cvec y{cplx(0, 0), cplx(1, -1)};
    cvec out = axpy(cplx(0, 1), x, y);  // y + i x
    CHECK(out[0].real() == doctest::Approx(-1.0));
    CHECK(out[0].imag() == doctest::Approx(1.0));
    CHECK(out[1].real() == doctest::Approx(1.0));
    CHECK(out[1].imag() == doctest::Approx(1.0));
}

TEST_CASE("diagonal operator applies elementwise") {
    LinearOperator A = diagonal_operator({cplx(1, 2), cplx(-1, 0)});
    cvec v{cplx(3, 0), cplx(0, 4)};
    cvec out = omlab::apply(A, v);
    CHECK(out[0] == cplx(3, 6));
    CHECK(out[1] == cplx(0, -4));
    CHECK(operator_norm_diag(A) == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("dense operator applies rows") {
    LinearOperator A = dense_operator({{cplx(1, 0), cplx(0, 1)}, {cplx(2, 0), cplx(0, 0)}});
    cvec v{cplx(1, 0), cplx(1, 0)};
    cvec out = omlab::apply(A, v);
    CHECK(out[0] == cplx(1, 1));
    CHECK(out[1] == cplx(2, 0));
}

TEST_CASE("unit-modulus diagonal preserves norms") {
    SplitMix64 rng{7};
    for (int t = 0; t < 20; ++t) {
        int d = 3 + static_cast<int>(rng.next() % 12);
        cvec diag(d), v(d);
        for (int j = 0; j < d; ++j) {
            diag[j] = std::polar(1.0, rng.uniform(0.0, 6.283185307179586));
            v[j] = rng.gaussian_complex();
        }
        LinearOperator U = diagonal_operator(diag);
        CHECK(norm(omlab::apply(U, v)) == doctest::Approx(norm(v)).epsilon(1e-13));
    }
}

TEST_CASE("dimension mismatches are rejected") {
    LinearOperator A = diagonal_operator({cplx(1, 0), cplx(2, 0)});
    CHECK_THROWS_AS(omlab::apply(A, cvec{cplx(1, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(inner(cvec{cplx(1, 0)}, cvec{cplx(1, 0), cplx(0, 0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(dense_operator({{cplx(1, 0), cplx(0, 0)}, {cplx(1, 0)}}),
                    std::invalid_argument);
}

} // TEST_SUITE

