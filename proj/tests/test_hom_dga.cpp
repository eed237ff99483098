#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ainf/hom_dga.hpp"

using namespace ainf;

namespace {

// Random degree-y periodic map: components forced into the sandwich spaces.
GradedMap random_map(const Workspace& ws, long long degree, std::mt19937_64& rng) {
    GradedMap g(ws, degree, false);
    const LambdaAlgebra& alg = ws.alg;
    for (long long k = 0; k < ws.profile.l; ++k) {
        long long src = ws.profile.omega(k + degree);
        long long dst = ws.profile.omega(k);
        LambdaAlgebra::Vec v = alg.zero();
        for (int i = 0; i < 8; ++i) v[rng() % alg.dim()] = (long long)(rng() % ws.profile.p);
        v = alg.mul(alg.mul(ws.gens.identity(dst).value, v), ws.gens.identity(src).value);
        g.set_component(k, v);
    }
    return g;
}

}  // namespace

TEST_CASE("graded map plumbing") {
    Workspace ws(3);
    GradedMap z = zero_map(ws, 5);
    CHECK(z.is_zero());
    CHECK(z.degree() == 5);
    CHECK_THROWS_AS(z.component(0), std::logic_error);
    GradedMap neg = zero_map(ws, -1);
    CHECK(neg.is_zero());
    CHECK_THROWS_AS(GradedMap(ws, -1, false), std::invalid_argument);

    GradedMap i0 = iota_pow(ws, 0);
    CHECK(compose(i0, i0) == i0);
    CHECK(add(i0, scale(-1, i0)).is_zero());
    CHECK(sub(i0, i0).is_zero());
    CHECK_THROWS_AS(add(i0, iota_pow(ws, 1)), std::invalid_argument);
}

TEST_CASE("iota powers") {
    Workspace ws(5);
    for (long long a = 0; a <= 2; ++a) {
        CHECK(iota_pow(ws, a).degree() == a * ws.profile.l);
        for (long long b = 0; b <= 2; ++b)
            CHECK(compose(iota_pow(ws, a), iota_pow(ws, b)) == iota_pow(ws, a + b));
    }
    // iota is the identity in each component, hence central
    std::mt19937_64 rng(11);
    GradedMap g = random_map(ws, 3, rng);
    CHECK(compose(iota_pow(ws, 1), g) == compose(g, iota_pow(ws, 1)));
}

TEST_CASE("m1 is a square-zero derivation") {
    for (long long p : {2, 3, 5}) {
        Workspace ws(p);
        std::mt19937_64 rng(101 + p);
        for (int trial = 0; trial < 6; ++trial) {
            long long dg = (long long)(rng() % 5);
            long long dh = (long long)(rng() % 5);
            GradedMap g = random_map(ws, dg, rng);
            GradedMap h = random_map(ws, dh, rng);
            CHECK(m1(m1(g)).is_zero());
            // Leibniz: m1(g h) = m1(g) h + (-1)^{|g|} g m1(h)
            long long sign = dg % 2 == 0 ? 1 : -1;
            GradedMap lhs = m1(compose(g, h));
            GradedMap rhs = add(compose(m1(g), h), scale(sign, compose(g, m1(h))));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("iota and chi classes are cycles") {
    for (long long p : {2, 3, 5}) {
        Workspace ws(p);
        GradedMap chi = build_chi(ws);
        CHECK(chi.degree() == ws.profile.l - 1);
        for (long long j = 0; j <= 4; ++j) {
            CHECK(m1(iota_pow(ws, j)).is_zero());
            CHECK(m1(compose(chi, iota_pow(ws, j))).is_zero());
        }
        CHECK(compose(chi, iota_pow(ws, 1)) == compose(iota_pow(ws, 1), chi));
    }
}

TEST_CASE("chi squared bounds gamma_2") {
    for (long long p : {3, 5, 7}) {
        Workspace ws(p);
        GradedMap chi = build_chi(ws);
        GradedMap g2 = build_gamma(ws, 2);
        CHECK(g2.degree() == 2 * (ws.profile.l - 2) + 1);
        CHECK(compose(chi, chi) == m1(g2));
    }
    // p = 2: chi squared is iota itself, a nonzero homology class
    Workspace ws2(2);
    GradedMap xi = build_chi(ws2);
    CHECK(compose(xi, xi) == iota_pow(ws2, 1));
}

TEST_CASE("four-term differential of gamma_k") {
    for (long long p : {5, 7}) {
        Workspace ws(p);
        const HookProfile& pr = ws.profile;
        for (long long k = 2; k <= p - 1; ++k) {
            GradedMap expected(ws, k * (pr.l - 2) + 2, false);
            expected.set_component(k - 2, ws.gens.down[k - 1].value);
            expected.set_component(k - 2 + pr.p - 1, ws.gens.up[pr.p - k].value);
            expected.set_component(k - 1, ws.gens.up[k - 1].value);
            expected.set_component(k - 1 + pr.p - 1, ws.gens.down[pr.p - k].value);
            CHECK(m1(build_gamma(ws, k)) == expected);
        }
    }
}

TEST_CASE("gamma bracket sums to an iota power") {
    for (long long p : {3, 5, 7}) {
        Workspace ws(p);
        GradedMap chi = build_chi(ws);
        GradedMap top = build_gamma(ws, p - 1);
        GradedMap bracket = add(compose(chi, top), compose(top, chi));
        for (long long k = 2; k <= p - 2; ++k)
            bracket = add(bracket, compose(build_gamma(ws, k), build_gamma(ws, p - k)));
        CHECK(bracket == iota_pow(ws, p - 1));
    }
}

TEST_CASE("homology dimension pattern") {
    Workspace ws5(5);
    HomologyClassTable tab = homology_table(ws5, 4 * ws5.profile.l);
    CHECK(tab.ok);
    CHECK(tab.dual_differentials_zero);
    std::vector<long long> expect{1, 0, 0, 0, 0, 0, 0, 1, 1};
    for (long long k = 0; k <= 8; ++k) CHECK(tab.rows[k].dim == expect[k]);
    CHECK(tab.rows[0].certified);
    CHECK(tab.rows[7].rep_a == 1);
    CHECK(tab.rows[8].rep_j == 1);

    Workspace ws3(3);
    HomologyClassTable tab3 = homology_table(ws3, 4 * ws3.profile.l);
    CHECK(tab3.ok);
    CHECK(tab3.rows[3].dim == 1);
    CHECK(tab3.rows[1].dim == 0);
    CHECK(tab3.rows[2].dim == 0);

    Workspace ws2(2);
    HomologyClassTable tab2 = homology_table(ws2, 8);
    CHECK(tab2.ok);
    for (const auto& row : tab2.rows) CHECK(row.dim == 1);
}
