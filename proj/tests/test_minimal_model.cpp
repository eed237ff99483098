#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ainf/minimal_model.hpp"

using namespace ainf;

namespace {

ExtTensor all_chi(long long n, long long j = 0) {
    ExtTensor t;
    for (long long i = 0; i < n; ++i) t.push_back(ExtBasisElement{1, j});
    return t;
}

ExtVector single(const PrimeField& F, long long a, long long j, long long c = 1) {
    ExtVector v;
    v.accumulate(F, ExtBasisElement{a, j}, c);
    return v;
}

}  // namespace

TEST_CASE("closed-form products") {
    PrimeField F3(3), F5(5);

    // binary products add the exponents
    CHECK(m_prime(F3, 3, 2, {ExtBasisElement{0, 1}, ExtBasisElement{1, 2}}) ==
          single(F3, 1, 3));
    CHECK(m_prime(F5, 5, 2, {ExtBasisElement{0, 0}, ExtBasisElement{0, 4}}) ==
          single(F5, 0, 4));
    // chi squared vanishes for odd p
    CHECK(m_prime(F3, 3, 2, all_chi(2)).is_zero());
    CHECK(m_prime(F5, 5, 2, all_chi(2)).is_zero());
    // the p-fold chi product is the only higher product
    CHECK(m_prime(F3, 3, 3, all_chi(3)) == single(F3, 0, 2, 2));
    CHECK(m_prime(F5, 5, 5, all_chi(5)) == single(F5, 0, 4, 4));
    CHECK(m_prime(F3, 3, 3, all_chi(3, 1)) == single(F3, 0, 5, 2));
    // arity 1 and non-chi higher tensors die
    CHECK(m_prime(F3, 3, 1, {ExtBasisElement{1, 4}}).is_zero());
    ExtTensor mixed = all_chi(3);
    mixed[1].a = 0;
    CHECK(m_prime(F3, 3, 3, mixed).is_zero());
    CHECK(m_prime(F3, 3, 4, all_chi(4)).is_zero());

    // p = 2: chi squared is xi^2, with the positive sign
    PrimeField F2(2);
    CHECK(m_prime(F2, 2, 2, all_chi(2)) == single(F2, 0, 1));
}

TEST_CASE("degrees of the closed-form products") {
    PrimeField F(5);
    HookProfile pr(5);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        long long n = 2 + (long long)(rng() % 5);
        ExtTensor t;
        for (long long i = 0; i < n; ++i)
            t.push_back(ExtBasisElement{(long long)(rng() % 2), (long long)(rng() % 3)});
        ExtVector v = m_prime(F, 5, n, t);
        for (const auto& [b, c] : v.terms)
            CHECK(b.degree(pr) == tensor_degree(pr, t) + 2 - n);
    }
}

TEST_CASE("morphism components") {
    Workspace ws(3);
    MinimalModel model(ws);
    // f_1 realizes the classes
    CHECK(model.f(1, {ExtBasisElement{0, 2}}) == iota_pow(ws, 2));
    CHECK(model.f(1, {ExtBasisElement{1, 0}}) == build_chi(ws));
    // f_2 on chi x chi is minus gamma_2
    CHECK(model.f(2, all_chi(2)) == scale(-1, build_gamma(ws, 2)));
    // any iota factor kills the higher components
    CHECK(model.f(2, {ExtBasisElement{0, 0}, ExtBasisElement{1, 0}}).is_zero());
    CHECK(model.f(2, {ExtBasisElement{1, 1}, ExtBasisElement{0, 3}}).is_zero());
    // arities >= p vanish
    CHECK(model.f(3, all_chi(3)).is_zero());
    CHECK(model.f(4, all_chi(4)).is_zero());
    // j shifts act by iota composition
    CHECK(model.f(2, all_chi(2, 1)) ==
          compose(model.f(2, all_chi(2)), iota_pow(ws, 2)));
}

TEST_CASE("Stasheff identities on exhaustive grids at p = 3") {
    Workspace ws(3);
    MinimalModel model(ws);
    for (long long n = 1; n <= 5; ++n) {
        std::vector<ExtTensor> stack{ExtTensor{}};
        for (long long i = 0; i < n; ++i) {
            std::vector<ExtTensor> next;
            for (const auto& partial : stack)
                for (long long a = 0; a <= 1; ++a)
                    for (long long j = 0; j <= 1; ++j) {
                        ExtTensor t = partial;
                        t.push_back(ExtBasisElement{a, j});
                        next.push_back(std::move(t));
                    }
            stack = std::move(next);
        }
        for (const auto& t : stack) {
            ExtVector res = check_stasheff(model, n, t);
            CHECK(res.is_zero());
        }
    }
}

TEST_CASE("morphism identity at small arities") {
    for (long long p : {3, 5}) {
        Workspace ws(p);
        MinimalModel model(ws);
        // n = 2 on chi x chi: relates f_2 to the bounding of chi^2
        CHECK(check_finfrel(model, 2, all_chi(2)).is_zero());
        CHECK(check_finfrel(model, 2, {ExtBasisElement{0, 1}, ExtBasisElement{1, 2}})
                  .is_zero());
        // n = p on the all-chi tensor: the bracket feeds the p-fold product
        CHECK(check_finfrel(model, p, all_chi(p)).is_zero());
        CHECK(check_finfrel(model, p, all_chi(p, 1)).is_zero());
    }
}

TEST_CASE("full and reduced evaluators agree") {
    Workspace ws(3);
    MinimalModel model(ws);
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        long long n = 1 + (long long)(rng() % 4);
        ExtTensor t;
        for (long long i = 0; i < n; ++i)
            t.push_back(ExtBasisElement{(long long)(rng() % 2), (long long)(rng() % 3)});
        GradedMap full = check_finfrel(model, n, t);
        GradedMap reduced = check_finfrel_reduced(model, n, t);
        CHECK(full == reduced);
        CHECK(full.is_zero());
    }
}

TEST_CASE("verification sweep") {
    Workspace ws(3);
    ModelReport rep = verify_model(ws, 2, 60, 12345);
    CHECK(rep.ok);
    CHECK(rep.checks_run > 0);
    // deterministic for a fixed seed
    ModelReport rep2 = verify_model(ws, 2, 60, 12345);
    CHECK(rep2.ok);
    CHECK(rep2.checks_run == rep.checks_run);
    // thread count must not change the outcome
    ModelReport rep4 = verify_model(ws, 2, 60, 12345, false, {}, 4);
    CHECK(rep4.ok);
    CHECK(rep4.checks_run == rep.checks_run);
}

TEST_CASE("sign mutations are caught") {
    Workspace ws(3);
    ModelOptions flip_f;
    flip_f.flip_f2_sign = true;
    ModelReport rep = verify_model(ws, 1, 40, 7, false, flip_f);
    CHECK_FALSE(rep.ok);
    REQUIRE_FALSE(rep.failures.empty());
    const CheckFailure& f = rep.failures.front();
    CHECK((f.n == 2 || f.n == 3));
    CHECK_FALSE(f.tensor.empty());

    ModelOptions flip_g;
    flip_g.flip_gamma2_sign = true;
    ModelReport rep2 = verify_model(ws, 1, 40, 7, false, flip_g);
    CHECK_FALSE(rep2.ok);
    REQUIRE_FALSE(rep2.failures.empty());
    CHECK((rep2.failures.front().n == 2 || rep2.failures.front().n == 3));
}

TEST_CASE("p = 2 power series model") {
    Workspace ws(2);
    MinimalModel model(ws);
    PrimeField F(2);
    // xi^a xi^b = xi^{a+b} throughout the low range
    for (long long u = 0; u <= 5; ++u)
        for (long long v = 0; v <= 5; ++v) {
            ExtBasisElement x{u % 2, u / 2}, y{v % 2, v / 2};
            ExtVector prod = model.mprime(2, ExtTensor{x, y});
            long long s = u + v;
            CHECK(prod == single(F, s % 2, s / 2));
        }
    ModelReport rep = verify_model(ws, 3, 80, 3);
    CHECK(rep.ok);
}
