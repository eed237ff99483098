#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ainf/matrix.hpp"

using namespace ainf;

TEST_CASE("prime field construction and arithmetic") {
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    PrimeField F(7);
    CHECK(F.reduce(-1) == 6);
    CHECK(F.reduce(14) == 0);
    CHECK(F.mul(3, 5) == 1);
    CHECK(F.inv(3) == 5);
    CHECK(F.pow(3, 6) == 1);
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
}

TEST_CASE("integer matrix product") {
    IntMatrix I = IntMatrix::identity(3);
    IntMatrix M(3, 3);
    M.at(0, 1) = 2;
    M.at(2, 0) = -5;
    CHECK(mat_mul(I, M) == M);
    CHECK(mat_mul(M, I) == M);
    IntMatrix Z(3, 3);
    CHECK(mat_mul(Z, M) == Z);

    IntMatrix A(2, 3), B(2, 2);
    CHECK_THROWS_AS(mat_mul(A, B), std::invalid_argument);
}

TEST_CASE("1x1 product mod 5") {
    PrimeField F(5);
    IntMatrix a(1, 1), b(1, 1);
    a.at(0, 0) = 2;
    b.at(0, 0) = 3;
    FpMatrix p = reduce_mod_p(mat_mul(a, b), F);
    CHECK(p.at(0, 0) == 1);
}

TEST_CASE("reduce_mod_p examples") {
    PrimeField F(5);
    IntMatrix A(2, 2);
    A.at(0, 0) = 5;
    A.at(0, 1) = 1;
    A.at(1, 1) = -1;
    FpMatrix R = reduce_mod_p(A, F);
    CHECK(R.at(0, 0) == 0);
    CHECK(R.at(0, 1) == 1);
    CHECK(R.at(1, 0) == 0);
    CHECK(R.at(1, 1) == 4);

    IntMatrix P = IntMatrix::identity(3).scaled(5);
    FpMatrix RP = reduce_mod_p(P, F);
    CHECK(rank(RP) == 0);
}

TEST_CASE("rank and kernel examples") {
    PrimeField F2(2), F5(5);
    CHECK(rank(FpMatrix::identity(F5, 4)) == 4);
    CHECK(kernel_basis(FpMatrix::identity(F5, 4)).empty());
    FpMatrix Z(F5, 3, 3);
    CHECK(rank(Z) == 0);
    CHECK(kernel_basis(Z).size() == 3);

    FpMatrix row(F2, 1, 2);
    row.set(0, 0, 1);
    row.set(0, 1, 1);
    auto ker = kernel_basis(row);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == std::vector<long long>{1, 1});

    FpMatrix D(F5, 2, 2);
    D.set(0, 0, 1);
    D.set(0, 1, 2);
    D.set(1, 0, 2);
    D.set(1, 1, 4);
    CHECK(rank(D) == 1);
}

TEST_CASE("rank-nullity and ring homomorphism on random matrices") {
    std::mt19937_64 rng(12345);
    PrimeField F(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        IntMatrix A(r, c), B(c, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                A.at(i, j) = (long long)(rng() % 49) - 24;
                B.at(j, i) = (long long)(rng() % 49) - 24;
            }
        FpMatrix Ap = reduce_mod_p(A, F);
        CHECK(rank(Ap) + kernel_basis(Ap).size() == c);
        // kernel vectors actually lie in the kernel
        for (const auto& v : kernel_basis(Ap))
            for (std::size_t i = 0; i < r; ++i) {
                long long s = 0;
                for (std::size_t j = 0; j < c; ++j) s += Ap.at(i, j) * v[j];
                CHECK(F.reduce(s) == 0);
            }
        CHECK(reduce_mod_p(mat_mul(A, B), F) == mat_mul(Ap, reduce_mod_p(B, F)));
    }
}

TEST_CASE("overflow detection") {
    IntMatrix A(1, 1), B(1, 1);
    A.at(0, 0) = (long long)1 << 62;
    B.at(0, 0) = 4;
    CHECK_THROWS_AS(mat_mul(A, B), std::overflow_error);
}

TEST_CASE("echelon span and coordinate solver") {
    PrimeField F(5);
    EchelonSpan span(F, 3);
    CHECK(span.insert({1, 2, 0}));
    CHECK(span.insert({0, 1, 1}));
    CHECK_FALSE(span.insert({1, 3, 1}));
    CHECK(span.rank() == 2);
    CHECK(span.contains({2, 4, 0}));
    CHECK_FALSE(span.contains({0, 0, 1}));

    CoordSolver solver(F, 3);
    solver.add_basis_vector({1, 2, 0});
    solver.add_basis_vector({0, 1, 1});
    auto c = solver.solve({1, 3, 1});
    CHECK(c == std::vector<long long>{1, 1});
    CHECK_THROWS_AS(solver.solve({0, 0, 1}), std::domain_error);
    CHECK_THROWS_AS(solver.add_basis_vector({2, 4, 0}), std::invalid_argument);
}
