#ifndef AINF_HOOK_ALGEBRA_HPP
#define AINF_HOOK_ALGEBRA_HPP

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "ainf/fp.hpp"
#include "ainf/matrix.hpp"

namespace ainf {

// Shape data of the hook part of the block decomposition for a prime p.
// The hook partitions lambda^1 .. lambda^p index matrix blocks of sizes
// n_lam[k] = binom(p-1, k-1); each block splits after row/column n_c[k]
// into a "c" range and a "b" range, n_c[k] + n_b[k] = n_lam[k].
struct HookProfile {
    long long p;
    long long l;                       // period 2(p-1)
    std::vector<long long> n_c;        // n_c[k] = binom(p-2, k-2), k in [1,p]
    std::vector<long long> n_b;        // n_b[k] = binom(p-2, k-1)
    std::vector<long long> n_lam;      // n_lam[k] = binom(p-1, k-1)

    explicit HookProfile(long long prime) : p(prime), l(2 * (prime - 1)) {
        if (!PrimeField::is_prime(prime))
            throw std::invalid_argument("HookProfile: p must be prime");
        n_c.assign(p + 1, 0);
        n_b.assign(p + 1, 0);
        n_lam.assign(p + 1, 0);
        for (long long k = 1; k <= p; ++k) {
            n_c[k] = binom(p - 2, k - 2);
            n_b[k] = binom(p - 2, k - 1);
            n_lam[k] = binom(p - 1, k - 1);
            assert(n_c[k] + n_b[k] == n_lam[k]);
        }
    }

    static long long binom(long long n, long long k) {
        if (k < 0 || k > n) return 0;
        long long r = 1;
        for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    }

    // Block index of the resolution at homological degree i >= 0.
    long long omega(long long i) const {
        long long r = i % l;
        return r <= p - 2 ? r + 1 : l - r;
    }

    // Flattened coordinates over all blocks (row-major within each block).
    long long flat_dim() const {
        long long d = 0;
        for (long long k = 1; k <= p; ++k) d += n_lam[k] * n_lam[k];
        return d;
    }
};

// Element of the hook part of the product of matrix rings, over Z.
struct HookTupleZ {
    const HookProfile* pr;
    std::vector<IntMatrix> blocks;  // blocks[k-1] is the lambda^k block

    explicit HookTupleZ(const HookProfile& profile) : pr(&profile) {
        blocks.reserve(profile.p);
        for (long long k = 1; k <= profile.p; ++k)
            blocks.emplace_back(profile.n_lam[k], profile.n_lam[k]);
    }

    IntMatrix& block(long long k) { return blocks[k - 1]; }
    const IntMatrix& block(long long k) const { return blocks[k - 1]; }

    bool operator==(const HookTupleZ& o) const { return blocks == o.blocks; }
    bool operator!=(const HookTupleZ& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& b : blocks)
            if (!b.is_zero()) return false;
        return true;
    }

    HookTupleZ operator+(const HookTupleZ& o) const {
        HookTupleZ r(*pr);
        for (std::size_t i = 0; i < blocks.size(); ++i) r.blocks[i] = blocks[i] + o.blocks[i];
        return r;
    }
    HookTupleZ operator-(const HookTupleZ& o) const {
        HookTupleZ r(*pr);
        for (std::size_t i = 0; i < blocks.size(); ++i) r.blocks[i] = blocks[i] - o.blocks[i];
        return r;
    }
    HookTupleZ operator*(const HookTupleZ& o) const {
        HookTupleZ r(*pr);
        for (std::size_t i = 0; i < blocks.size(); ++i) r.blocks[i] = mat_mul(blocks[i], o.blocks[i]);
        return r;
    }
    HookTupleZ scaled(long long c) const {
        HookTupleZ r(*pr);
        for (std::size_t i = 0; i < blocks.size(); ++i) r.blocks[i] = blocks[i].scaled(c);
        return r;
    }
};

// Matrix unit: single entry 1 at (i, j) of block lambda^k. 1-based indices.
inline HookTupleZ eta(const HookProfile& pr, long long k, long long i, long long j) {
    if (k < 1 || k > pr.p || i < 1 || i > pr.n_lam[k] || j < 1 || j > pr.n_lam[k])
        throw std::out_of_range("eta: index out of range");
    HookTupleZ t(pr);
    t.block(k).at(i - 1, j - 1) = 1;
    return t;
}

// Idempotent straddling blocks lambda^k and lambda^{k+1}, k in [1, p-1].
inline HookTupleZ idempotent_e(const HookProfile& pr, long long k) {
    if (k < 1 || k > pr.p - 1) throw std::out_of_range("idempotent_e: k out of range");
    return eta(pr, k, pr.n_c[k] + 1, pr.n_c[k] + 1) + eta(pr, k + 1, 1, 1);
}

// Membership in the subalgebra: the bb subblock of lambda^k must agree mod p
// with the cc subblock of lambda^{k+1}, and the (c-row, b-column) subblock of
// every lambda^k must vanish mod p.
inline bool lambda_member(const HookTupleZ& x) {
    const HookProfile& pr = *x.pr;
    long long p = pr.p;
    for (long long k = 1; k <= p; ++k) {
        for (long long i = 1; i <= pr.n_c[k]; ++i)
            for (long long j = pr.n_c[k] + 1; j <= pr.n_lam[k]; ++j)
                if (x.block(k).at(i - 1, j - 1) % p != 0) return false;
    }
    for (long long k = 1; k <= p - 1; ++k) {
        for (long long i = 1; i <= pr.n_b[k]; ++i)
            for (long long j = 1; j <= pr.n_b[k]; ++j) {
                long long bb = x.block(k).at(pr.n_c[k] + i - 1, pr.n_c[k] + j - 1);
                long long cc = x.block(k + 1).at(i - 1, j - 1);
                if ((bb - cc) % p != 0) return false;
            }
    }
    return true;
}

// The four kinds of basis elements of the subalgebra.
enum class BasisKind {
    DiagPair,    // eta(k, n_c+x, n_c+y) + eta(k+1, x, y)
    DiagTimesP,  // p * eta(k, n_c+x, n_c+y)
    LowerHook,   // eta(k, n_c+x, y): b-row, c-column
    UpperTimesP  // p * eta(k, x, n_c+y): c-row, b-column
};

struct LambdaBasisElement {
    BasisKind kind;
    long long k, x, y;
    HookTupleZ value;
};

struct LambdaBasis {
    const HookProfile* pr;
    std::vector<LambdaBasisElement> elems;
};

inline LambdaBasis lambda_basis(const HookProfile& pr) {
    LambdaBasis b{&pr, {}};
    for (long long k = 1; k <= pr.p - 1; ++k)
        for (long long x = 1; x <= pr.n_b[k]; ++x)
            for (long long y = 1; y <= pr.n_b[k]; ++y)
                b.elems.push_back({BasisKind::DiagPair, k, x, y,
                                   eta(pr, k, pr.n_c[k] + x, pr.n_c[k] + y) + eta(pr, k + 1, x, y)});
    for (long long k = 1; k <= pr.p - 1; ++k)
        for (long long x = 1; x <= pr.n_b[k]; ++x)
            for (long long y = 1; y <= pr.n_b[k]; ++y)
                b.elems.push_back({BasisKind::DiagTimesP, k, x, y,
                                   eta(pr, k, pr.n_c[k] + x, pr.n_c[k] + y).scaled(pr.p)});
    for (long long k = 1; k <= pr.p; ++k)
        for (long long x = 1; x <= pr.n_b[k]; ++x)
            for (long long y = 1; y <= pr.n_c[k]; ++y)
                b.elems.push_back({BasisKind::LowerHook, k, x, y, eta(pr, k, pr.n_c[k] + x, y)});
    for (long long k = 1; k <= pr.p; ++k)
        for (long long x = 1; x <= pr.n_c[k]; ++x)
            for (long long y = 1; y <= pr.n_b[k]; ++y)
                b.elems.push_back({BasisKind::UpperTimesP, k, x, y,
                                   eta(pr, k, x, pr.n_c[k] + y).scaled(pr.p)});
    return b;
}

// The mod-p algebra. Elements are coordinate vectors over the basis above;
// reducing entrywise in the matrix picture would be lossy (p * eta terms
// carry nonzero classes), so multiplication goes through integral lifts:
// lift both factors, multiply blockwise, extract exact integral coordinates
// (divisions by p are exact on members), reduce mod p.
class LambdaAlgebra {
  public:
    using Vec = std::vector<long long>;

    explicit LambdaAlgebra(const HookProfile& profile)
        : pr_(&profile), F_(profile.p), basis_(lambda_basis(profile)) {}

    const HookProfile& profile() const { return *pr_; }
    const PrimeField& field() const { return F_; }
    const LambdaBasis& basis() const { return basis_; }
    std::size_t dim() const { return basis_.elems.size(); }

    Vec zero() const { return Vec(dim(), 0); }

    bool is_zero(const Vec& v) const {
        for (long long x : v)
            if (x != 0) return false;
        return true;
    }

    Vec add(const Vec& a, const Vec& b) const {
        Vec r(dim());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_.add(a[i], b[i]);
        return r;
    }
    Vec sub(const Vec& a, const Vec& b) const {
        Vec r(dim());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_.sub(a[i], b[i]);
        return r;
    }
    Vec scale(long long c, const Vec& a) const {
        Vec r(dim());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_.mul(c, a[i]);
        return r;
    }

    HookTupleZ lift(const Vec& v) const {
        const HookProfile& pr = *pr_;
        HookTupleZ t(pr);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            const LambdaBasisElement& e = basis_.elems[i];
            switch (e.kind) {
                case BasisKind::DiagPair:
                    t.block(e.k).at(pr.n_c[e.k] + e.x - 1, pr.n_c[e.k] + e.y - 1) += v[i];
                    t.block(e.k + 1).at(e.x - 1, e.y - 1) += v[i];
                    break;
                case BasisKind::DiagTimesP:
                    t.block(e.k).at(pr.n_c[e.k] + e.x - 1, pr.n_c[e.k] + e.y - 1) += pr.p * v[i];
                    break;
                case BasisKind::LowerHook:
                    t.block(e.k).at(pr.n_c[e.k] + e.x - 1, e.y - 1) += v[i];
                    break;
                case BasisKind::UpperTimesP:
                    t.block(e.k).at(e.x - 1, pr.n_c[e.k] + e.y - 1) += pr.p * v[i];
                    break;
            }
        }
        return t;
    }

    // Exact integral coordinates of a member. Every matrix entry belongs to
    // exactly one basis element once the DiagPair/DiagTimesP overlap on the
    // bb blocks is resolved, so extraction is closed-form.
    Vec coords_z(const HookTupleZ& t) const {
        const HookProfile& pr = *pr_;
        Vec c(dim(), 0);
        std::size_t idx = 0;
        for (long long k = 1; k <= pr.p - 1; ++k)
            for (long long x = 1; x <= pr.n_b[k]; ++x)
                for (long long y = 1; y <= pr.n_b[k]; ++y)
                    c[idx++] = t.block(k + 1).at(x - 1, y - 1);
        std::size_t diag_pair_base = 0;
        for (long long k = 1; k <= pr.p - 1; ++k)
            for (long long x = 1; x <= pr.n_b[k]; ++x)
                for (long long y = 1; y <= pr.n_b[k]; ++y) {
                    long long bb = t.block(k).at(pr.n_c[k] + x - 1, pr.n_c[k] + y - 1);
                    long long diff = bb - c[diag_pair_base];
                    if (diff % pr.p != 0)
                        throw std::domain_error("coords_z: not a member (bb/cc congruence)");
                    c[idx++] = diff / pr.p;
                    ++diag_pair_base;
                }
        for (long long k = 1; k <= pr.p; ++k)
            for (long long x = 1; x <= pr.n_b[k]; ++x)
                for (long long y = 1; y <= pr.n_c[k]; ++y)
                    c[idx++] = t.block(k).at(pr.n_c[k] + x - 1, y - 1);
        for (long long k = 1; k <= pr.p; ++k)
            for (long long x = 1; x <= pr.n_c[k]; ++x)
                for (long long y = 1; y <= pr.n_b[k]; ++y) {
                    long long e = t.block(k).at(x - 1, pr.n_c[k] + y - 1);
                    if (e % pr.p != 0)
                        throw std::domain_error("coords_z: not a member (c-row b-col divisibility)");
                    c[idx++] = e / pr.p;
                }
        assert(idx == dim());
        return c;
    }

    Vec coords(const HookTupleZ& t) const {
        Vec c = coords_z(t);
        for (auto& x : c) x = F_.reduce(x);
        return c;
    }

    Vec mul(const Vec& a, const Vec& b) const {
        if (is_zero(a) || is_zero(b)) return zero();
        return coords(lift(a) * lift(b));
    }

    Vec unit(long long k) const { return coords(idempotent_e(*pr_, k)); }

    // Augmentation: the lambda^1 block scalar of a lift, mod p.
    long long aug(const Vec& v) const { return F_.reduce(lift(v).block(1).at(0, 0)); }

  private:
    const HookProfile* pr_;
    PrimeField F_;
    LambdaBasis basis_;
};

// Morphism P_k -> P_k' of projective right modules, as the algebra element
// e_{k'} x e_k acting by left multiplication. Composition is value product.
struct ProjMorphismZ {
    long long src, dst;  // P_src -> P_dst
    HookTupleZ value;
};

inline ProjMorphismZ compose(const ProjMorphismZ& g, const ProjMorphismZ& f) {
    if (f.dst != g.src) throw std::invalid_argument("compose: morphisms not composable");
    return ProjMorphismZ{f.src, g.dst, g.value * f.value};
}

struct ProjMorphismFp {
    long long src, dst;
    LambdaAlgebra::Vec value;
};

inline ProjMorphismFp compose(const LambdaAlgebra& alg, const ProjMorphismFp& g,
                              const ProjMorphismFp& f) {
    if (f.dst != g.src) throw std::invalid_argument("compose: morphisms not composable");
    return ProjMorphismFp{f.src, g.dst, alg.mul(g.value, f.value)};
}

// Integral generator table of morphisms between the projectives.
struct GenTableZ {
    const HookProfile* pr;
    std::vector<ProjMorphismZ> e;     // e[k]: identity on P_k, k in [1, p-1]
    std::vector<ProjMorphismZ> up;    // up[k] = e_{k+1,k}: P_k -> P_{k+1}, k in [1, p-2]
    std::vector<ProjMorphismZ> down;  // down[k] = e_{k,k+1}: P_{k+1} -> P_k, k in [1, p-2]
    ProjMorphismZ e11;                // P_1 -> P_1
    ProjMorphismZ epp;                // e_{p-1,p-1}: P_{p-1} -> P_{p-1}

    const ProjMorphismZ& identity(long long k) const { return e[k]; }
};

inline GenTableZ gen_morphisms(const HookProfile& pr) {
    GenTableZ t{&pr,
                {},
                {},
                {},
                ProjMorphismZ{1, 1, eta(pr, 1, 1, 1).scaled(pr.p)},
                ProjMorphismZ{pr.p - 1, pr.p - 1, eta(pr, pr.p, 1, 1).scaled(pr.p)}};
    ProjMorphismZ blank{0, 0, HookTupleZ(pr)};
    t.e.assign(pr.p, blank);  // index 0 unused
    t.up.assign(pr.p - 1, blank);
    t.down.assign(pr.p - 1, blank);
    for (long long k = 1; k <= pr.p - 1; ++k)
        t.e[k] = ProjMorphismZ{k, k, idempotent_e(pr, k)};
    for (long long k = 1; k <= pr.p - 2; ++k) {
        t.up[k] = ProjMorphismZ{k, k + 1, eta(pr, k + 1, pr.n_c[k + 1] + 1, 1)};
        t.down[k] = ProjMorphismZ{k + 1, k, eta(pr, k + 1, 1, pr.n_c[k + 1] + 1).scaled(pr.p)};
    }
    return t;
}

// Mod-p generator table in algebra coordinates.
struct GenTableFp {
    const LambdaAlgebra* alg;
    std::vector<ProjMorphismFp> e;
    std::vector<ProjMorphismFp> up;
    std::vector<ProjMorphismFp> down;
    ProjMorphismFp e11;
    ProjMorphismFp epp;

    const ProjMorphismFp& identity(long long k) const { return e[k]; }
};

inline GenTableFp reduce_algebra(const LambdaAlgebra& alg) {
    const HookProfile& pr = alg.profile();
    GenTableZ z = gen_morphisms(pr);
    GenTableFp t;
    t.alg = &alg;
    t.e.resize(pr.p);
    t.up.resize(pr.p - 1);
    t.down.resize(pr.p - 1);
    for (long long k = 1; k <= pr.p - 1; ++k)
        t.e[k] = ProjMorphismFp{k, k, alg.coords(z.e[k].value)};
    for (long long k = 1; k <= pr.p - 2; ++k) {
        t.up[k] = ProjMorphismFp{k, k + 1, alg.coords(z.up[k].value)};
        t.down[k] = ProjMorphismFp{k + 1, k, alg.coords(z.down[k].value)};
    }
    t.e11 = ProjMorphismFp{1, 1, alg.coords(z.e11.value)};
    t.epp = ProjMorphismFp{pr.p - 1, pr.p - 1, alg.coords(z.epp.value)};
    return t;
}

// Basis of the right module P_k = e_k * algebra, in algebra coordinates,
// with a solver for re-coordinatization.
struct ModuleBasis {
    long long k;
    std::vector<LambdaAlgebra::Vec> elems;
    CoordSolver solver;

    std::vector<long long> coordinates(const LambdaAlgebra::Vec& v) const {
        return solver.solve(v);
    }
};

inline ModuleBasis module_basis(const LambdaAlgebra& alg, long long k) {
    if (k < 1 || k > alg.profile().p - 1) throw std::out_of_range("module_basis: k out of range");
    LambdaAlgebra::Vec ek = alg.unit(k);
    EchelonSpan span(alg.field(), alg.dim());
    ModuleBasis mb{k, {}, CoordSolver(alg.field(), alg.dim())};
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        LambdaAlgebra::Vec bi = alg.zero();
        bi[i] = 1;
        LambdaAlgebra::Vec v = alg.mul(ek, bi);
        if (span.insert(v)) {
            mb.elems.push_back(v);
            mb.solver.add_basis_vector(v);
        }
    }
    return mb;
}

// Basis of Hom(P_k, P_k') as the sandwich space e_{k'} * algebra * e_k.
inline std::vector<LambdaAlgebra::Vec> hom_space_basis(const LambdaAlgebra& alg, long long k,
                                                       long long kp) {
    const HookProfile& pr = alg.profile();
    if (k < 1 || k > pr.p - 1 || kp < 1 || kp > pr.p - 1)
        throw std::out_of_range("hom_space_basis: index out of range");
    LambdaAlgebra::Vec ek = alg.unit(k);
    LambdaAlgebra::Vec ekp = alg.unit(kp);
    EchelonSpan span(alg.field(), alg.dim());
    std::vector<LambdaAlgebra::Vec> basis;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        LambdaAlgebra::Vec bi = alg.zero();
        bi[i] = 1;
        LambdaAlgebra::Vec v = alg.mul(alg.mul(ekp, bi), ek);
        if (span.insert(v)) basis.push_back(v);
    }
    return basis;
}

}  // namespace ainf

#endif  // AINF_HOOK_ALGEBRA_HPP
