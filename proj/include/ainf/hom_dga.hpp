#ifndef AINF_HOM_DGA_HPP
#define AINF_HOM_DGA_HPP

#include <stdexcept>
#include <vector>

#include "ainf/resolution.hpp"

namespace ainf {

// Degree-y element of the endomorphism complex of the periodic resolution,
// stored exactly as its l residue-class components: components[k] is the
// component at every lower index i*l + k (i >= 0), a morphism
// P_{omega(k+y)} -> P_{omega(k)}. This class of maps (l-periodic, supported
// on nonnegative lower indices) is closed under composition and m1, so
// equality checks are exact with no truncation window.
//
// The zero map keeps its degree annotation (and may have negative degree,
// which arises only as the zero value of higher morphism components).
class GradedMap {
  public:
    GradedMap(const Workspace& ws, long long degree, bool zero = true)
        : ws_(&ws), degree_(degree), zero_(zero) {
        if (!zero) {
            if (degree < 0) throw std::invalid_argument("GradedMap: negative degree");
            comp_.reserve(ws.profile.l);
            for (long long k = 0; k < ws.profile.l; ++k)
                comp_.push_back(ProjMorphismFp{ws.profile.omega(k + degree), ws.profile.omega(k),
                                               ws.alg.zero()});
        }
    }

    const Workspace& workspace() const { return *ws_; }
    long long degree() const { return degree_; }

    bool is_zero() const {
        if (zero_) return true;
        for (const auto& m : comp_)
            if (!ws_->alg.is_zero(m.value)) return false;
        return true;
    }

    // Materializes components if this is still an annotated zero.
    void ensure_components() {
        if (!zero_) return;
        if (degree_ < 0) throw std::logic_error("GradedMap: cannot materialize negative degree");
        *this = GradedMap(*ws_, degree_, false);
    }

    const ProjMorphismFp& component(long long k) const {
        if (zero_) throw std::logic_error("GradedMap: component of annotated zero");
        return comp_[k];
    }

    void set_component(long long k, const LambdaAlgebra::Vec& value) {
        ensure_components();
        comp_[k].value = value;
    }

    bool operator==(const GradedMap& o) const {
        if (degree_ != o.degree_) return false;
        if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
        for (long long k = 0; k < ws_->profile.l; ++k)
            if (comp_[k].value != o.comp_[k].value) return false;
        return true;
    }
    bool operator!=(const GradedMap& o) const { return !(*this == o); }

    friend GradedMap compose(const GradedMap& g, const GradedMap& h) {
        const Workspace& ws = *g.ws_;
        long long deg = g.degree_ + h.degree_;
        if (g.zero_ || h.zero_ || g.is_zero() || h.is_zero()) return GradedMap(ws, deg);
        GradedMap r(ws, deg, false);
        long long l = ws.profile.l;
        for (long long k = 0; k < l; ++k) {
            const ProjMorphismFp& gk = g.comp_[k];
            const ProjMorphismFp& hk = h.comp_[(k + g.degree_) % l];
            if (hk.dst != gk.src) throw std::logic_error("compose: omega bookkeeping mismatch");
            r.comp_[k] = compose(ws.alg, gk, hk);
        }
        return r;
    }

    friend GradedMap add(const GradedMap& a, const GradedMap& b) {
        if (a.degree_ != b.degree_) throw std::invalid_argument("add: degree mismatch");
        if (a.zero_) return b;
        if (b.zero_) return a;
        GradedMap r = a;
        for (std::size_t k = 0; k < r.comp_.size(); ++k)
            r.comp_[k].value = a.ws_->alg.add(a.comp_[k].value, b.comp_[k].value);
        return r;
    }

    friend GradedMap scale(long long c, const GradedMap& a) {
        if (a.zero_ || c == 1) return a;
        GradedMap r = a;
        for (auto& m : r.comp_) m.value = a.ws_->alg.scale(c, m.value);
        return r;
    }

    friend GradedMap sub(const GradedMap& a, const GradedMap& b) {
        return add(a, scale(-1, b));
    }

  private:
    const Workspace* ws_;
    long long degree_;
    bool zero_;
    std::vector<ProjMorphismFp> comp_;
};

inline GradedMap zero_map(const Workspace& ws, long long degree) { return GradedMap(ws, degree); }

// The differential of the resolution as a degree-1 periodic map.
inline GradedMap differential_map(const Workspace& ws) {
    GradedMap d(ws, 1, false);
    PeriodicResolution res(ws);
    for (long long k = 0; k < ws.profile.l; ++k) {
        // Component at lower index k is d_{k+1}: P_{omega(k+1)} -> P_{omega(k)}.
        d.set_component(k, res.diff_at(k + 1).value);
    }
    return d;
}

// m1(g) = d.g - (-1)^{|g|} g.d
inline GradedMap m1(const GradedMap& g) {
    const Workspace& ws = g.workspace();
    GradedMap d = differential_map(ws);
    GradedMap left = compose(d, g);
    GradedMap right = compose(g, d);
    long long sign = (g.degree() % 2 == 0) ? -1 : 1;
    return add(left, scale(sign, right));
}

// iota^j: degree j*l, identity components.
inline GradedMap iota_pow(const Workspace& ws, long long j) {
    if (j < 0) throw std::invalid_argument("iota_pow: negative exponent");
    GradedMap r(ws, j * ws.profile.l, false);
    for (long long k = 0; k < ws.profile.l; ++k)
        r.set_component(k, ws.gens.identity(ws.profile.omega(k)).value);
    return r;
}

// chi: degree l-1.
inline GradedMap build_chi(const Workspace& ws) {
    const HookProfile& pr = ws.profile;
    GradedMap c(ws, pr.l - 1, false);
    c.set_component(0, ws.gens.identity(1).value);
    for (long long k = 1; k <= pr.p - 2; ++k) c.set_component(k, ws.gens.up[k].value);
    c.set_component(pr.p - 1, ws.gens.identity(pr.p - 1).value);
    for (long long k = 1; k <= pr.p - 2; ++k)
        c.set_component(pr.p - 1 + k, ws.gens.down[pr.p - k - 1].value);
    return c;
}

// gamma_k, k in [2, p-1]: degree k(l-2)+1, two nonzero components.
inline GradedMap build_gamma(const Workspace& ws, long long k) {
    const HookProfile& pr = ws.profile;
    if (k < 2 || k > pr.p - 1) throw std::out_of_range("build_gamma: k out of range");
    GradedMap g(ws, k * (pr.l - 2) + 1, false);
    g.set_component(k - 1, ws.gens.identity(k).value);
    g.set_component(k - 1 + (pr.p - 1), ws.gens.identity(pr.p - k).value);
    return g;
}

struct HomologyRow {
    long long k;
    long long dim;               // 0 or 1
    long long rep_a = 0, rep_j = 0;  // representative chi^a iota^j when dim = 1
    bool certified = false;      // representative matched the augmentation under Psi
};

struct HomologyClassTable {
    std::vector<HomologyRow> rows;
    bool dual_differentials_zero = true;
    bool ok = true;
};

// Homology of A through the quasi-isomorphic complex Hom(PRes, trivial):
// dimensions from hom_to_trivial (the dual differentials all vanish), and
// representatives certified via Psi(g) = eps . g_0.
inline HomologyClassTable homology_table(const Workspace& ws, long long D) {
    const HookProfile& pr = ws.profile;
    if (D < 2 * pr.l) throw std::invalid_argument("homology_table: bound too small");
    PeriodicResolution res(ws);
    AugmentationFunctional eps = augmentation(ws);
    const PrimeField& F = ws.alg.field();

    std::vector<std::vector<std::vector<long long>>> hom_cache(pr.p);
    std::vector<bool> cached(pr.p, false);
    auto hom_dim = [&](long long k) -> const std::vector<std::vector<long long>>& {
        if (!cached[k]) {
            hom_cache[k] = hom_to_trivial(ws, k);
            cached[k] = true;
        }
        return hom_cache[k];
    };

    HomologyClassTable tab;
    for (long long k = 0; k <= D; ++k) {
        HomologyRow row{k, (long long)hom_dim(pr.omega(k)).size()};
        long long r = k % pr.l;
        if (r == 0 || r == pr.l - 1) {
            row.rep_a = (r == 0) ? 0 : 1;
            row.rep_j = k / pr.l;
            GradedMap rep = (row.rep_a == 0)
                                ? iota_pow(ws, row.rep_j)
                                : compose(build_chi(ws), iota_pow(ws, row.rep_j));
            // Psi_k(rep) = eps . rep_0 on the module basis of P_{omega(k)} = P_1.
            const ModuleBasis& mb = ws.module(1);
            bool match = true;
            for (std::size_t i = 0; i < mb.elems.size(); ++i) {
                long long v = ws.alg.aug(ws.alg.mul(rep.component(0).value, mb.elems[i]));
                if (v != eps.on_basis[i]) match = false;
            }
            row.certified = match && row.dim == 1;
        } else if (row.dim != 0) {
            tab.ok = false;
        }
        tab.rows.push_back(row);
        if (row.dim == 1 && !row.certified) tab.ok = false;
    }

    // Dual differentials: every functional of Hom(Pr_k, trivial) composed
    // with d_{k+1} must vanish.
    for (long long k = 0; k < D; ++k) {
        const auto& funcs = hom_dim(pr.omega(k));
        if (funcs.empty()) continue;
        FpMatrix dmat = res.diff_matrix(k + 1);
        for (const auto& phi : funcs)
            for (std::size_t j = 0; j < dmat.cols(); ++j) {
                long long s = 0;
                for (std::size_t i = 0; i < dmat.rows(); ++i) s += phi[i] * dmat.at(i, j);
                if (F.reduce(s) != 0) tab.dual_differentials_zero = false;
            }
    }
    if (!tab.dual_differentials_zero) tab.ok = false;
    return tab;
}

}  // namespace ainf

#endif  // AINF_HOM_DGA_HPP
