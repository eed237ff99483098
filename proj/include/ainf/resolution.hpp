#ifndef AINF_RESOLUTION_HPP
#define AINF_RESOLUTION_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "ainf/hook_algebra.hpp"

namespace ainf {

// Shared workspace: profile, algebra, reduced generators and module bases.
struct Workspace {
    HookProfile profile;
    LambdaAlgebra alg;
    GenTableZ genz;
    GenTableFp gens;
    std::vector<ModuleBasis> modules;  // index k in [1, p-1]; index 0 unused

    explicit Workspace(long long p)
        : profile(p), alg(profile), genz(gen_morphisms(profile)), gens(reduce_algebra(alg)) {
        modules.reserve(profile.p);
        modules.push_back(ModuleBasis{0, {}, CoordSolver(alg.field(), alg.dim())});
        for (long long k = 1; k <= profile.p - 1; ++k)
            modules.push_back(module_basis(alg, k));
    }

    const ModuleBasis& module(long long k) const { return modules[k]; }
    long long module_dim(long long k) const { return (long long)modules[k].elems.size(); }
};

// The l-periodic projective resolution of the trivial module. Degree i
// carries P_{omega(i)}; the differential d_i is the generator with target
// omega(i-1) and source omega(i), selected by i mod l.
class PeriodicResolution {
  public:
    explicit PeriodicResolution(const Workspace& ws) : ws_(&ws) {}

    const Workspace& workspace() const { return *ws_; }

    long long module_at(long long i) const {
        if (i < 0) throw std::out_of_range("module_at: negative degree");
        return ws_->profile.omega(i);
    }

    ProjMorphismFp diff_at(long long i) const {
        const HookProfile& pr = ws_->profile;
        if (i < 1) throw std::out_of_range("diff_at: degree must be >= 1");
        long long r = i % pr.l;
        const GenTableFp& g = ws_->gens;
        if (r == 0) return g.e11;
        if (r <= pr.p - 2) return g.down[r];          // e_{r, r+1}
        if (r == pr.p - 1) return g.epp;              // e_{p-1, p-1}
        return g.up[pr.l - r];                        // e_{l-r+1, l-r}
    }

    // Matrix of d_i on the module bases (rows: P_{omega(i-1)}, cols: P_{omega(i)}).
    FpMatrix diff_matrix(long long i) const {
        ProjMorphismFp d = diff_at(i);
        return action_matrix(d);
    }

    // Matrix of left multiplication by a morphism value on module bases.
    FpMatrix action_matrix(const ProjMorphismFp& m) const {
        const LambdaAlgebra& alg = ws_->alg;
        const ModuleBasis& src = ws_->module(m.src);
        const ModuleBasis& dst = ws_->module(m.dst);
        FpMatrix M(alg.field(), dst.elems.size(), src.elems.size());
        for (std::size_t j = 0; j < src.elems.size(); ++j) {
            std::vector<long long> c = dst.coordinates(alg.mul(m.value, src.elems[j]));
            for (std::size_t i = 0; i < c.size(); ++i) M.set(i, j, c[i]);
        }
        return M;
    }

  private:
    const Workspace* ws_;
};

inline PeriodicResolution build_resolution(const Workspace& ws) { return PeriodicResolution(ws); }

// Augmentation functional on P_1, as values on the module basis.
struct AugmentationFunctional {
    std::vector<long long> on_basis;

    long long apply_coords(const PrimeField& F, const std::vector<long long>& c) const {
        long long s = 0;
        for (std::size_t i = 0; i < on_basis.size(); ++i) s += on_basis[i] * c[i];
        return F.reduce(s);
    }
};

inline AugmentationFunctional augmentation(const Workspace& ws) {
    AugmentationFunctional eps;
    for (const auto& b : ws.module(1).elems) eps.on_basis.push_back(ws.alg.aug(b));
    return eps;
}

// The integral augmentation on P~_1 is the lambda^1 block scalar.
inline long long augmentation_z(const HookTupleZ& x) { return x.block(1).at(0, 0); }

struct ExactnessReport {
    bool ok = true;
    long long fail_degree = -1;  // first offending degree when !ok
};

// Verifies rank(d_i) = dim ker(d_{i-1}) for i in [2, W] and
// dim ker(eps) = rank(d_1); together with d.d = 0 this is exactness.
inline ExactnessReport check_exactness(const PeriodicResolution& res, long long W) {
    const Workspace& ws = res.workspace();
    if (W < ws.profile.l + 2) throw std::invalid_argument("check_exactness: window too small");
    AugmentationFunctional eps = augmentation(ws);
    FpMatrix eps_mat(ws.alg.field(), 1, eps.on_basis.size());
    for (std::size_t j = 0; j < eps.on_basis.size(); ++j) eps_mat.set(0, j, eps.on_basis[j]);
    FpMatrix prev = res.diff_matrix(1);
    std::size_t ker_eps = eps_mat.cols() - rank(eps_mat);
    if (rank(prev) != ker_eps) return {false, 1};
    for (long long i = 2; i <= W; ++i) {
        FpMatrix cur = res.diff_matrix(i);
        std::size_t ker_prev = prev.cols() - rank(prev);
        if (rank(cur) != ker_prev) return {false, i};
        prev = cur;
    }
    return {true, -1};
}

// Basis of Hom(P_k, trivial module) as functionals on the module basis:
// solutions of phi(x . b) = aug(b) phi(x) over all basis x and algebra b.
inline std::vector<std::vector<long long>> hom_to_trivial(const Workspace& ws, long long k) {
    const LambdaAlgebra& alg = ws.alg;
    const ModuleBasis& mb = ws.module(k);
    std::size_t dim = mb.elems.size();
    std::vector<std::vector<long long>> rows;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t m = 0; m < alg.dim(); ++m) {
            LambdaAlgebra::Vec b = alg.zero();
            b[m] = 1;
            std::vector<long long> c = mb.coordinates(alg.mul(mb.elems[i], b));
            long long act = alg.aug(b);
            std::vector<long long> row(dim, 0);
            for (std::size_t t = 0; t < dim; ++t) row[t] = c[t];
            row[i] = alg.field().sub(row[i], act);
            rows.push_back(std::move(row));
        }
    }
    FpMatrix M(alg.field(), rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) M.set(i, j, rows[i][j]);
    return kernel_basis(M);
}

}  // namespace ainf

#endif  // AINF_RESOLUTION_HPP
