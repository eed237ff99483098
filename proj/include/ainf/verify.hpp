#ifndef AINF_VERIFY_HPP
#define AINF_VERIFY_HPP

#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ainf/minimal_model.hpp"

namespace ainf {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;  // counterexample description on failure
};

struct SuiteReport {
    std::string name;
    std::vector<CheckResult> checks;
    bool ok = true;
    double millis = 0.0;

    void add(const std::string& name_, bool pass, const std::string& detail = "") {
        checks.push_back(CheckResult{name_, pass, pass ? "" : detail});
        ok = ok && pass;
    }
};

struct VerifyReport {
    long long p = 0;
    std::vector<SuiteReport> suites;
    bool ok = true;

    void add(SuiteReport s) {
        ok = ok && s.ok;
        suites.push_back(std::move(s));
    }
};

inline std::string format_tensor(const ExtTensor& t) {
    std::ostringstream os;
    for (const auto& x : t) os << "(a=" << x.a << ",j=" << x.j << ")";
    return os.str();
}

// Basis size, membership and mod-p independence of the algebra basis.
inline SuiteReport suite_algebra_shape(const Workspace& ws) {
    SuiteReport s{"algebra_shape"};
    const HookProfile& pr = ws.profile;
    long long expect = HookProfile::binom(2 * pr.p - 2, pr.p - 1);
    s.add("basis_count", (long long)ws.alg.dim() == expect,
          "count " + std::to_string(ws.alg.dim()) + " expected " + std::to_string(expect));
    bool members = true;
    for (const auto& b : ws.alg.basis().elems) members = members && lambda_member(b.value);
    s.add("basis_membership", members);
    // Independence of the classes mod p: in coordinates each basis element is
    // a unit vector, so certify through the flattened integral picture with
    // the coordinate extraction as inverse witness.
    bool indep = true;
    for (std::size_t i = 0; i < ws.alg.dim(); ++i) {
        LambdaAlgebra::Vec u = ws.alg.zero();
        u[i] = 1;
        if (ws.alg.coords(ws.alg.lift(u)) != u) indep = false;
    }
    s.add("basis_independence", indep);
    return s;
}

// The integral relations among the morphism generators.
inline SuiteReport suite_integral_relations(const Workspace& ws) {
    SuiteReport s{"integral_relations"};
    const HookProfile& pr = ws.profile;
    const GenTableZ& g = ws.genz;
    if (pr.p >= 3) {
        HookTupleZ lhs1 = g.e11.value + compose(g.down[1], g.up[1]).value;
        s.add("e11_plus_e12e21", lhs1 == g.e[1].value.scaled(pr.p));
        bool mid = true;
        for (long long k = 2; k <= pr.p - 2; ++k) {
            HookTupleZ lhs = compose(g.up[k - 1], g.down[k - 1]).value +
                             compose(g.down[k], g.up[k]).value;
            mid = mid && lhs == g.e[k].value.scaled(pr.p);
        }
        s.add("middle_relations", mid);
        HookTupleZ lhs3 = compose(g.up[pr.p - 2], g.down[pr.p - 2]).value + g.epp.value;
        s.add("top_relation", lhs3 == g.e[pr.p - 1].value.scaled(pr.p));
    } else {
        // p = 2: both loop generators act as the same map after reduction;
        // integrally, check e11 and epp land in the subalgebra.
        s.add("e11_member", lambda_member(g.e11.value));
        s.add("epp_member", lambda_member(g.epp.value));
    }
    // Augmentation relation on a spanning set of the integral module.
    bool augrel = true;
    for (const auto& b : ws.alg.basis().elems) {
        HookTupleZ x = g.e[1].value * b.value;
        if (augmentation_z(g.e11.value * x) != pr.p * augmentation_z(x)) augrel = false;
    }
    s.add("augmentation_relation", augrel);
    return s;
}

// Mod-p relations among the reduced generators.
inline SuiteReport suite_reduced_relations(const Workspace& ws) {
    SuiteReport s{"reduced_relations"};
    const HookProfile& pr = ws.profile;
    const LambdaAlgebra& alg = ws.alg;
    const GenTableFp& g = ws.gens;
    if (pr.p >= 3) {
        s.add("e11_plus_e12e21",
              alg.is_zero(alg.add(g.e11.value, alg.mul(g.down[1].value, g.up[1].value))));
        bool mid = true;
        for (long long k = 2; k <= pr.p - 2; ++k)
            mid = mid && alg.is_zero(alg.add(alg.mul(g.up[k - 1].value, g.down[k - 1].value),
                                             alg.mul(g.down[k].value, g.up[k].value)));
        s.add("middle_relations", mid);
        s.add("top_relation",
              alg.is_zero(alg.add(alg.mul(g.up[pr.p - 2].value, g.down[pr.p - 2].value),
                                  g.epp.value)));
    } else {
        s.add("loops_agree", g.e11.value == g.epp.value);
    }
    bool idrel = true;
    for (long long k = 1; k <= pr.p - 1; ++k)
        for (const auto& x : ws.module(k).elems)
            if (alg.mul(g.e[k].value, x) != x) idrel = false;
    s.add("e_k_identity", idrel);
    bool augz = true;
    for (const auto& x : ws.module(1).elems)
        if (alg.aug(alg.mul(g.e11.value, x)) != 0) augz = false;
    s.add("aug_after_e11", augz);
    return s;
}

inline SuiteReport suite_resolution(const Workspace& ws, long long W) {
    SuiteReport s{"resolution"};
    const HookProfile& pr = ws.profile;
    PeriodicResolution res = build_resolution(ws);
    bool periodic = true;
    for (long long i = 1; i <= W; ++i)
        if (res.diff_at(i).value != res.diff_at(i + pr.l).value) periodic = false;
    s.add("periodicity", periodic);
    bool dd = true;
    long long dd_fail = -1;
    for (long long i = 1; i < W; ++i) {
        ProjMorphismFp c = compose(ws.alg, res.diff_at(i), res.diff_at(i + 1));
        if (!ws.alg.is_zero(c.value)) {
            dd = false;
            if (dd_fail < 0) dd_fail = i;
        }
    }
    s.add("d_after_d_zero", dd, "first failure at i=" + std::to_string(dd_fail));
    ExactnessReport ex = check_exactness(res, W);
    s.add("exactness", ex.ok, "fails at degree " + std::to_string(ex.fail_degree));
    // Augmentation is module-linear: its kernel is closed under the right action.
    const LambdaAlgebra& alg = ws.alg;
    AugmentationFunctional eps = augmentation(ws);
    const ModuleBasis& mb = ws.module(1);
    FpMatrix em(alg.field(), 1, eps.on_basis.size());
    for (std::size_t j = 0; j < eps.on_basis.size(); ++j) em.set(0, j, eps.on_basis[j]);
    bool closed = true;
    for (const auto& kv : kernel_basis(em)) {
        LambdaAlgebra::Vec x = alg.zero();
        for (std::size_t i = 0; i < kv.size(); ++i)
            x = alg.add(x, alg.scale(kv[i], mb.elems[i]));
        for (std::size_t m = 0; m < alg.dim(); ++m) {
            LambdaAlgebra::Vec b = alg.zero();
            b[m] = 1;
            if (alg.aug(alg.mul(x, b)) != 0) closed = false;
        }
    }
    s.add("augmentation_kernel_submodule", closed);
    s.add("augmentation_surjective", [&] {
        for (long long v : eps.on_basis)
            if (v != 0) return true;
        return false;
    }());
    return s;
}

inline SuiteReport suite_hom_spaces(const Workspace& ws) {
    SuiteReport s{"hom_spaces"};
    const HookProfile& pr = ws.profile;
    bool far_zero = true;
    for (long long k = 1; k <= pr.p - 1; ++k)
        for (long long kp = 1; kp <= pr.p - 1; ++kp) {
            std::size_t d = hom_space_basis(ws.alg, k, kp).size();
            if (std::abs(k - kp) > 1 && d != 0) far_zero = false;
        }
    s.add("hom_far_apart_zero", far_zero);
    s.add("hom_to_trivial_P1", hom_to_trivial(ws, 1).size() == 1);
    bool higher_zero = true;
    for (long long k = 2; k <= pr.p - 1; ++k)
        if (!hom_to_trivial(ws, k).empty()) higher_zero = false;
    s.add("hom_to_trivial_higher_zero", higher_zero);
    return s;
}

inline SuiteReport suite_cycles(const Workspace& ws) {
    SuiteReport s{"cycles"};
    const HookProfile& pr = ws.profile;
    bool iota_cycles = true, chi_cycles = true;
    GradedMap chi = build_chi(ws);
    for (long long j = 0; j <= 4; ++j) {
        GradedMap ij = iota_pow(ws, j);
        if (!m1(ij).is_zero()) iota_cycles = false;
        if (!m1(compose(chi, ij)).is_zero()) chi_cycles = false;
    }
    s.add("m1_iota_pow_zero", iota_cycles);
    s.add("m1_chi_iota_pow_zero", chi_cycles);
    bool iota_mult = true;
    for (long long a = 0; a <= 2; ++a)
        for (long long b = 0; b <= 2; ++b)
            if (compose(iota_pow(ws, a), iota_pow(ws, b)) != iota_pow(ws, a + b))
                iota_mult = false;
    s.add("iota_power_composition", iota_mult);
    if (pr.p >= 3) {
        s.add("chi_chi_is_m1_gamma2", compose(chi, chi) == m1(build_gamma(ws, 2)));
        bool gamma_formula = true;
        for (long long k = 2; k <= pr.p - 1; ++k) {
            GradedMap expected(ws, k * (pr.l - 2) + 2, false);
            expected.set_component(k - 2, ws.gens.down[k - 1].value);
            expected.set_component(k - 2 + pr.p - 1, ws.gens.up[pr.p - k].value);
            expected.set_component(k - 1, ws.gens.up[k - 1].value);
            expected.set_component(k - 1 + pr.p - 1, ws.gens.down[pr.p - k].value);
            if (m1(build_gamma(ws, k)) != expected) gamma_formula = false;
        }
        s.add("m1_gamma_four_term", gamma_formula);
        // Bracket identity feeding the n = p morphism relation.
        GradedMap bracket = add(compose(chi, build_gamma(ws, pr.p - 1)),
                                compose(build_gamma(ws, pr.p - 1), chi));
        for (long long k = 2; k <= pr.p - 2; ++k)
            bracket = add(bracket, compose(build_gamma(ws, k), build_gamma(ws, pr.p - k)));
        s.add("gamma_bracket_is_iota_power", bracket == iota_pow(ws, pr.p - 1));
    } else {
        s.add("xi_square_is_iota", compose(chi, chi) == iota_pow(ws, 1));
    }
    return s;
}

inline SuiteReport suite_homology(const Workspace& ws, long long D) {
    SuiteReport s{"homology"};
    HomologyClassTable tab = homology_table(ws, D);
    bool pattern = true, certified = true;
    for (const auto& row : tab.rows) {
        long long r = row.k % ws.profile.l;
        long long expect = (r == 0 || r == ws.profile.l - 1) ? 1 : 0;
        if (row.dim != expect) pattern = false;
        if (expect == 1 && !row.certified) certified = false;
    }
    s.add("dimension_pattern", pattern);
    s.add("representatives_certified", certified);
    s.add("dual_differentials_zero", tab.dual_differentials_zero);
    return s;
}

inline SuiteReport suite_minimal_model(const Workspace& ws, long long j_max, long long samples,
                                       std::uint64_t seed, bool exhaustive_j, unsigned threads,
                                       ModelOptions opt = {}) {
    SuiteReport s{"minimal_model"};
    ModelReport rep = verify_model(ws, j_max, samples, seed, exhaustive_j, opt, threads);
    std::string detail;
    if (!rep.ok) {
        const CheckFailure& f = rep.failures.front();
        detail = f.identity + " n=" + std::to_string(f.n) + " tensor=" + format_tensor(f.tensor);
    }
    s.add("identity_sweep", rep.ok, detail);
    // Degree contracts and iota-equivariance of the morphism components.
    MinimalModel model(ws);
    const HookProfile& pr = ws.profile;
    bool degrees = true, equivariant = true, f1_cycles = true;
    std::mt19937_64 rng(seed + 1);
    for (int trial = 0; trial < 50; ++trial) {
        long long n = 1 + (long long)(rng() % (std::uint64_t)(2 * pr.p - 2));
        ExtTensor t, t0;
        long long jsum = 0;
        for (long long i = 0; i < n; ++i) {
            ExtBasisElement x{(long long)(rng() % 2), (long long)(rng() % 3)};
            t.push_back(x);
            t0.push_back(ExtBasisElement{x.a, 0});
            jsum += x.j;
        }
        GradedMap ft = model.f(n, t);
        if (ft.degree() != tensor_degree(pr, t) + 1 - n) degrees = false;
        if (ft != compose(model.f(n, t0), iota_pow(ws, jsum))) equivariant = false;
        ExtVector mp = model.mprime(n, t);
        for (const auto& [b, c] : mp.terms)
            if (b.degree(pr) != tensor_degree(pr, t) + 2 - n) degrees = false;
    }
    for (long long j = 0; j <= 3; ++j)
        for (long long a = 0; a <= 1; ++a) {
            ExtTensor t{ExtBasisElement{a, j}};
            if (!m1(model.f(1, t)).is_zero()) f1_cycles = false;
        }
    s.add("degree_contracts", degrees);
    s.add("iota_equivariance", equivariant);
    s.add("f1_sends_basis_to_cycles", f1_cycles);
    return s;
}

// Extra checks specific to the prime 2 (the general pipeline specializes,
// both loop differentials reduce to the same map D).
inline SuiteReport suite_p2(const Workspace& ws) {
    SuiteReport s{"p2_model"};
    const LambdaAlgebra& alg = ws.alg;
    s.add("module_dim_2", ws.module_dim(1) == 2);
    bool eps_d = true;
    for (const auto& x : ws.module(1).elems)
        if (alg.aug(alg.mul(ws.gens.e11.value, x)) != 0) eps_d = false;
    s.add("eps_after_D_zero", eps_d);
    HomologyClassTable tab = homology_table(ws, 10);
    bool all_one = true;
    for (const auto& row : tab.rows) all_one = all_one && row.dim == 1 && row.certified;
    s.add("homology_all_ones", all_one && tab.dual_differentials_zero);
    MinimalModel model(ws);
    bool assoc = true;
    for (long long m1v = 0; m1v <= 7; ++m1v)
        for (long long m2v = 0; m2v <= 7; ++m2v)
            for (long long m3v = 0; m3v <= 7; ++m3v) {
                ExtBasisElement x{m1v % 2, m1v / 2}, y{m2v % 2, m2v / 2}, z{m3v % 2, m3v / 2};
                ExtVector xy = model.mprime(2, ExtTensor{x, y});
                ExtVector yz = model.mprime(2, ExtTensor{y, z});
                ExtVector left, right;
                for (const auto& [b, c] : xy.terms)
                    left.accumulate(alg.field(), model.mprime(2, ExtTensor{b, z}), c);
                for (const auto& [b, c] : yz.terms)
                    right.accumulate(alg.field(), model.mprime(2, ExtTensor{x, b}), c);
                if (!(left == right)) assoc = false;
            }
    s.add("m2_associativity", assoc);
    // xi powers multiply additively: xi^2 * xi^3 = xi^5.
    ExtVector prod = model.mprime(2, ExtTensor{ExtBasisElement{0, 1}, ExtBasisElement{1, 1}});
    ExtVector expect;
    expect.accumulate(alg.field(), ExtBasisElement{1, 2}, 1);
    s.add("xi2_times_xi3", prod == expect);
    bool xi_cycles = true;
    for (long long j = 0; j <= 4; ++j) {
        ExtTensor t{ExtBasisElement{j % 2, j / 2}};
        if (!m1(model.f(1, t)).is_zero()) xi_cycles = false;
    }
    s.add("m1_xi_pow_zero", xi_cycles);
    return s;
}

struct RunConfig {
    long long p = 3;
    long long window = 0;  // 0: default 3l
    long long j_max = 3;
    long long samples = 200;
    std::uint64_t seed = 0;
    bool exhaustive_j = false;
    unsigned threads = 1;
};

template <typename Fn>
inline SuiteReport timed(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport s = fn();
    auto t1 = std::chrono::steady_clock::now();
    s.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return s;
}

inline VerifyReport run_verify(const RunConfig& cfg) {
    Workspace ws(cfg.p);
    long long W = cfg.window > 0 ? cfg.window : 3 * ws.profile.l;
    VerifyReport rep;
    rep.p = cfg.p;
    rep.add(timed([&] { return suite_algebra_shape(ws); }));
    rep.add(timed([&] { return suite_integral_relations(ws); }));
    rep.add(timed([&] { return suite_reduced_relations(ws); }));
    rep.add(timed([&] { return suite_resolution(ws, W); }));
    rep.add(timed([&] { return suite_hom_spaces(ws); }));
    rep.add(timed([&] { return suite_cycles(ws); }));
    rep.add(timed([&] { return suite_homology(ws, 4 * ws.profile.l); }));
    rep.add(timed([&] {
        return suite_minimal_model(ws, cfg.j_max, cfg.samples, cfg.seed, cfg.exhaustive_j,
                                   cfg.threads);
    }));
    if (cfg.p == 2) rep.add(timed([&] { return suite_p2(ws); }));
    return rep;
}

}  // namespace ainf

#endif  // AINF_VERIFY_HPP
