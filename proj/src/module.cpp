#include "hopfind/module.hpp"

#include <algorithm>

namespace hopfind {

namespace {

struct SplitMix {
    unsigned long state;
    explicit SplitMix(unsigned long seed) : state(seed) {}
    unsigned long next() {
        unsigned long z = (state += 0x9e3779b97f4a7c15UL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9UL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebUL;
        return z ^ (z >> 31);
    }
    long below(long n) { return static_cast<long>(next() % static_cast<unsigned long>(n)); }
};

class ExplicitProvider : public ActionProvider {
public:
    explicit ExplicitProvider(std::vector<Mat> actions) : actions_(std::move(actions)) {}
    Mat action(long i) const override { return actions_[i]; }

private:
    std::vector<Mat> actions_;
};

class RegularProvider : public ActionProvider {
public:
    explicit RegularProvider(HopfAlgebra h) : h_(std::move(h)) {}
    Mat action(long i) const override { return h_.left_mult(i); }

private:
    HopfAlgebra h_;
};

class AdjointProvider : public ActionProvider {
public:
    explicit AdjointProvider(HopfAlgebra h) : h_(std::move(h)), st_(h_.antipode().transpose()) {}
    Mat action(long i) const override {
        const long d = h_.dim();
        CoSparse dh = h_.comult(i);
        std::vector<std::tuple<long, long, Cyc>> ts;
        for (long a = 0; a < d; ++a) {
            SparseVec col;
            for (const auto& [j, k, w] : dh) {
                SparseVec left = h_.product(j, a);
                for (const auto& [t, v] : h_.product(left, st_.row(k))) {
                    Cyc c = w * v;
                    if (!c.is_zero()) col.emplace_back(t, std::move(c));
                }
            }
            for (const auto& [t, v] : sv_normalize(std::move(col))) ts.emplace_back(t, a, v);
        }
        return Mat::from_triplets(h_.field(), d, d, ts);
    }

private:
    HopfAlgebra h_;
    Mat st_;
};

class DualProvider : public ActionProvider {
public:
    explicit DualProvider(HModule base) : base_(std::move(base)), st_(base_.parent().antipode().transpose()) {}
    Mat action(long i) const override { return base_.action_of(st_.row(i)).transpose(); }

private:
    HModule base_;
    Mat st_;
};

class TensorPowerProvider : public ActionProvider {
public:
    TensorPowerProvider(HModule base, long n) : base_(std::move(base)), n_(n) {}
    Mat action(long i) const override {
        const CycField& f = base_.parent().field();
        long dim = 1;
        for (long t = 0; t < n_; ++t) dim *= base_.dim();
        Mat acc(f, dim, dim);
        for (const auto& [idx, c] : iterated_comult_terms(base_.parent(), n_, i)) {
            Mat term = base_.action(idx[0]);
            for (size_t leg = 1; leg < idx.size(); ++leg) term = kron(term, base_.action(idx[leg]));
            acc = acc + term.scaled(c);
        }
        return acc;
    }

private:
    HModule base_;
    long n_;
};

} // namespace

Mat HModule::action_of(const SparseVec& a) const {
    Mat acc(parent_.field(), dim_, dim_);
    for (const auto& [i, c] : a) acc = acc + action(i).scaled(c);
    return acc;
}

HModule module_from_actions(const HopfAlgebra& h, std::vector<Mat> actions) {
    if (static_cast<long>(actions.size()) != h.dim())
        throw validation_error("module needs one action matrix per basis element");
    long d = actions.empty() ? 0 : actions[0].rows();
    return HModule(h, d, std::make_shared<ExplicitProvider>(std::move(actions)));
}

HModule dual_module(const HModule& v) {
    return HModule(v.parent(), v.dim(), std::make_shared<DualProvider>(v));
}

HModule tensor_power(const HModule& v, long n) {
    if (n < 1) throw validation_error("tensor_power: n must be >= 1");
    if (n == 1) return v;
    long dim = 1;
    for (long t = 0; t < n; ++t) dim *= v.dim();
    return HModule(v.parent(), dim, std::make_shared<TensorPowerProvider>(v, n));
}

HModule regular_module(const HopfAlgebra& h) {
    return HModule(h, h.dim(), std::make_shared<RegularProvider>(h));
}

HModule adjoint_module(const HopfAlgebra& h) {
    return HModule(h, h.dim(), std::make_shared<AdjointProvider>(h));
}

bool verify_module(const HModule& v) {
    const HopfAlgebra& h = v.parent();
    if (!v.action_of(h.unit()).is_identity()) return false;
    for (long i = 0; i < h.dim(); ++i) {
        Mat ai = v.action(i);
        for (long j = 0; j < h.dim(); ++j) {
            if (!(ai * v.action(j) == v.action_of(h.product(i, j)))) return false;
        }
    }
    return true;
}

std::vector<SparseVec> invariants(const HModule& v) {
    const HopfAlgebra& h = v.parent();
    Mat id = Mat::identity(h.field(), v.dim());
    std::vector<Mat> blocks;
    for (long g : h.generators_or_all())
        blocks.push_back(v.action(g) - id.scaled(h.counit_at(g)));
    return kernel_basis(vstack(blocks));
}

std::vector<Mat> hom_space(const HModule& v, const HModule& w) {
    const CycField& f = v.parent().field();
    if (&v.parent().field() != &w.parent().field() || v.parent().dim() != w.parent().dim())
        throw validation_error("hom_space: modules over different algebras");
    const long dv = v.dim(), dw = w.dim();
    Mat idv = Mat::identity(f, dv), idw = Mat::identity(f, dw);
    std::vector<Mat> blocks;
    for (long g : v.parent().generators_or_all()) {
        // f rho_V(g) - rho_W(g) f = 0, row-major vec(f)
        blocks.push_back(kron(idw, v.action(g).transpose()) - kron(w.action(g), idv));
    }
    auto ker = kernel_basis(vstack(blocks));
    std::vector<Mat> out;
    for (const SparseVec& vec : ker) {
        std::vector<std::tuple<long, long, Cyc>> ts;
        for (const auto& [flat, c] : vec) ts.emplace_back(flat / dv, flat % dv, c);
        out.push_back(Mat::from_triplets(f, dw, dv, ts));
    }
    return out;
}

PivotalModule make_pivotal(HModule module, Mat phi) {
    const HopfAlgebra& h = module.parent();
    Mat s2 = h.antipode_sq();
    Mat s2t = s2.transpose();
    for (long g : h.generators_or_all()) {
        // phi rho(g) = rho(S^2 g) phi
        if (!(phi * module.action(g) == module.action_of(s2t.row(g)) * phi))
            throw validation_error("phi does not intertwine rho and rho(S^2 .)");
    }
    if (rank(phi) != module.dim()) throw validation_error("phi is singular");
    return PivotalModule{std::move(module), std::move(phi)};
}

PivotalModule dual_pivotal(const PivotalModule& p) {
    return PivotalModule{dual_module(p.module), inverse(p.phi.transpose())};
}

PivotalModule regular_pivotal(const HopfAlgebra& h) {
    return PivotalModule{regular_module(h), h.antipode_sq()};
}

std::optional<PivotalModule> find_pivotal(const HModule& v, const PivotalSearchOptions& opts) {
    HModule ddual = dual_module(dual_module(v));
    auto homs = hom_space(v, ddual);
    if (homs.empty()) return std::nullopt;
    auto try_phi = [&](const Mat& phi) -> std::optional<PivotalModule> {
        if (rank(phi) != v.dim()) return std::nullopt;
        return PivotalModule{v, phi};
    };
    for (const Mat& phi : homs)
        if (auto p = try_phi(phi)) return p;
    if (homs.size() > 1) {
        SplitMix rng(opts.seed);
        const CycField& f = v.parent().field();
        for (long t = 0; t < opts.trials; ++t) {
            Mat cand(f, v.dim(), v.dim());
            for (const Mat& phi : homs) {
                long c = rng.below(2 * opts.coeff_range + 1) - opts.coeff_range;
                if (c != 0) cand = cand + phi.scaled(Cyc::from_long(f, c));
            }
            if (auto p = try_phi(cand)) return p;
        }
    }
    return std::nullopt;
}

namespace {

// E on an invariant tensor: rotate the first leg to the back, applying the
// twist T = phi^{-1}; Tt rows are the columns of T
SparseVec rotate_twist(const SparseVec& vec, const Mat& Tt, long d, long n) {
    long rest_size = 1;
    for (long t = 0; t < n - 1; ++t) rest_size *= d;
    SparseVec out;
    for (const auto& [flat, c] : vec) {
        long i1 = flat / rest_size;
        long rest = flat % rest_size;
        for (const auto& [t, w] : Tt.row(i1)) {
            Cyc cv = c * w;
            if (!cv.is_zero()) out.emplace_back(rest * d + t, std::move(cv));
        }
    }
    return sv_normalize(std::move(out));
}

Cyc cyc_pow(const Cyc& base, long e) {
    Cyc acc = Cyc::one(base.field());
    for (long t = 0; t < e; ++t) acc *= base;
    return acc;
}

} // namespace

Cyc left_pivotal_dim(const PivotalModule& p) { return trace(inverse(p.phi)); }
Cyc right_pivotal_dim(const PivotalModule& p) { return trace(p.phi); }

Mat indicator_e_on_basis(const CycField& f, const std::vector<SparseVec>& basis,
                         long module_dim, long n, const Mat& phi) {
    const long k = static_cast<long>(basis.size());
    Mat e(f, k, k);
    if (k == 0) return e;
    long tensor_dim = 1;
    for (long t = 0; t < n; ++t) tensor_dim *= module_dim;
    SpanSolver solver(f, tensor_dim, basis);
    Mat Tt = inverse(phi).transpose();
    for (long i = 0; i < k; ++i) {
        auto coeffs = solver.solve(rotate_twist(basis[i], Tt, module_dim, n));
        for (long j = 0; j < k; ++j)
            if (!coeffs[j].is_zero()) e.set(j, i, coeffs[j]);
    }
    return e;
}

IndicatorReport nu(const PivotalModule& p, long n, long r, const NuOptions& opts) {
    IndicatorReport rep;
    rep.n = n;
    rep.r = r;
    const CycField& f = p.module.parent().field();
    if (n == 0) {
        rep.method = "pivotal-dimension";
        rep.invariant_dim = r == 0 ? 1 : 0;
        rep.value = r >= 0 ? cyc_pow(left_pivotal_dim(p), r) : cyc_pow(right_pivotal_dim(p), -r);
        return rep;
    }
    if (n < 0) {
        IndicatorReport inner = nu(dual_pivotal(p), -n, -r, opts);
        rep.value = inner.value;
        rep.invariant_dim = inner.invariant_dim;
        rep.e_matrix_order = inner.e_matrix_order;
        rep.method = "dual:" + inner.method;
        return rep;
    }
    rep.method = "tensor-invariants";
    HModule w = tensor_power(p.module, n);
    auto basis = invariants(w);
    rep.invariant_dim = static_cast<long>(basis.size());
    if (basis.empty()) {
        rep.value = Cyc::zero(f);
        rep.e_matrix_order = 1;
        return rep;
    }
    Mat e = indicator_e_on_basis(f, basis, p.module.dim(), n, p.phi);
    rep.value = trace(mat_pow(e, r));
    if (opts.order_search_limit > 0) {
        Mat acc = e;
        for (long k = 1; k <= opts.order_search_limit; ++k) {
            if (acc.is_identity()) {
                rep.e_matrix_order = k;
                break;
            }
            acc = acc * e;
        }
    }
    return rep;
}

Cyc mu_n(const HModule& v, long n) {
    auto endo = hom_space(v, v);
    if (endo.size() != 1)
        throw not_absolutely_simple_error("End(V) has dimension " + std::to_string(endo.size()));
    auto p = find_pivotal(v);
    if (!p) throw no_pivotal_iso_error("V is not isomorphic to its double dual");
    return nu(*p, n, 1).value * nu(*p, 0, -1).value;
}

Cyc jedwab_mu(const HModule& v) {
    const HopfAlgebra& h = v.parent();
    const CycField& f = h.field();
    const long d = h.dim(), dv = v.dim();
    // annihilator: kernel of h |-> rho(h) as a d_V^2 x d_H matrix
    std::vector<std::tuple<long, long, Cyc>> ts;
    for (long i = 0; i < d; ++i)
        for (const auto& [r, c, val] : v.action(i).triplets()) ts.emplace_back(r * dv + c, i, val);
    auto ann = kernel_basis(Mat::from_triplets(f, dv * dv, d, ts));

    // S must stabilize the annihilator, otherwise the induced map S on H/I
    // is undefined
    if (!ann.empty()) {
        SpanSolver in_ann(f, d, ann);
        for (const SparseVec& a : ann)
            if (!in_ann.contains(h.antipode().apply(a)))
                throw annihilator_not_stable_error("S(I) is not contained in I");
    }

    // complete a basis of I to a basis of H by standard vectors on the
    // non-pivot coordinates, then trace the induced map on the quotient
    std::vector<bool> is_pivot(d, false);
    for (const SparseVec& a : ann)
        is_pivot[a.front().first] = true;   // canonical kernel: leading index is the pivot
    std::vector<SparseVec> full = ann;
    std::vector<long> coset_pos;
    for (long i = 0; i < d; ++i)
        if (!is_pivot[i]) {
            coset_pos.push_back(static_cast<long>(full.size()));
            full.push_back(sv_unit(i, Cyc::one(f)));
        }
    SpanSolver solver(f, d, full);
    Cyc tr = Cyc::zero(f);
    for (size_t t = 0; t < coset_pos.size(); ++t) {
        const SparseVec& rep = full[coset_pos[t]];
        auto coeffs = solver.solve(h.antipode().apply(rep));
        tr += coeffs[coset_pos[t]];
    }
    return tr;
}

} // namespace hopfind
