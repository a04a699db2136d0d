#include "hopfind/adjoint.hpp"

namespace hopfind {

PivotalModule adjoint_pivotal(const HopfAlgebra& h) {
    return make_pivotal(adjoint_module(h), h.antipode_sq());
}

IndicatorReport nu_adjoint(const HopfAlgebra& h, long n, long r, AdjointMethod method,
                           const NuOptions& opts) {
    if (n < 1) throw validation_error("nu_adjoint: n must be >= 1");
    if (method == AdjointMethod::fast && n == 1) {
        IndicatorReport rep;
        rep.n = n;
        rep.r = r;
        rep.method = "center-fast";
        auto center = center_basis(h);
        rep.invariant_dim = static_cast<long>(center.size());
        Mat e = indicator_e_on_basis(h.field(), center, h.dim(), 1, h.antipode_sq());
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
    return nu(adjoint_pivotal(h), n, r, opts);
}

std::vector<Cyc> chi_ad_trace(const HopfAlgebra& h) {
    HModule ad = adjoint_module(h);
    std::vector<Cyc> chi;
    chi.reserve(h.dim());
    for (long i = 0; i < h.dim(); ++i) chi.push_back(trace(ad.action(i)));
    return chi;
}

std::vector<Cyc> chi_ad_integral(const HopfAlgebra& h) {
    if (!is_semisimple(h)) throw not_semisimple_error("chi_ad integral formula needs a semisimple algebra");
    const CycField& f = h.field();
    auto ints = left_integrals(h);
    SparseVec Lambda = sv_scale(ints[0], h.counit_of(ints[0]).inverse());
    std::vector<Cyc> lambda = dual_right_integral(h, Lambda);

    // Delta(Lambda) as sparse pairs
    std::vector<std::tuple<long, long, Cyc>> dl;
    for (const auto& [i, c] : Lambda)
        for (const auto& [j, k, w] : h.comult(i)) dl.emplace_back(j, k, c * w);

    Mat st = h.antipode().transpose();
    std::vector<Cyc> chi(h.dim(), Cyc::zero(f));
    for (long i = 0; i < h.dim(); ++i) {
        Cyc acc = Cyc::zero(f);
        for (const auto& [h1, h2, w] : h.comult(i)) {
            for (const auto& [l1, l2, wl] : dl) {
                // h_(1) Lambda_(1) S(h_(2)) S(Lambda_(2))
                SparseVec e = h.product(h1, l1);
                e = h.product(e, st.row(h2));
                e = h.product(e, st.row(l2));
                Cyc val = Cyc::zero(f);
                for (const auto& [t, v] : e) val += lambda[t] * v;
                acc += w * wl * val;
            }
        }
        chi[i] = acc;
    }
    return chi;
}

Cyc semisimple_nu(const HopfAlgebra& h, long n, long r) {
    if (n < 1) throw validation_error("semisimple_nu: n must be >= 1");
    if (!is_semisimple(h)) throw not_semisimple_error("semisimple_nu needs a semisimple algebra");
    const CycField& f = h.field();
    auto ints = left_integrals(h);
    SparseVec Lambda = sv_scale(ints[0], h.counit_of(ints[0]).inverse());
    std::vector<Cyc> chi = chi_ad_integral(h);

    const long d = block_gcd(n, r);
    const long blocklen = n / d;
    // leg positions per block: i_{a,b} = a + b r + 1 (mod n), here 0-based
    std::vector<std::vector<long>> legs(d, std::vector<long>(blocklen));
    for (long a = 0; a < d; ++a)
        for (long b = 0; b < blocklen; ++b) legs[a][b] = mod_pos(a + b * r, n);

    Cyc total = Cyc::zero(f);
    for (const auto& [i, ci] : Lambda) {
        for (const auto& [idx, c] : iterated_comult_terms(h, n, i)) {
            Cyc prod = ci * c;
            for (long a = 0; a < d && !prod.is_zero(); ++a) {
                SparseVec e = sv_unit(idx[legs[a][0]], Cyc::one(f));
                for (long b = 1; b < blocklen; ++b)
                    e = h.product(e, sv_unit(idx[legs[a][b]], Cyc::one(f)));
                Cyc val = Cyc::zero(f);
                for (const auto& [t, v] : e) val += chi[t] * v;
                prod *= val;
            }
            total += prod;
        }
    }
    return total;
}

Rat group_nu(const GroupPresentation& g, long n, long r) {
    if (n < 1) throw validation_error("group_nu: n must be >= 1");
    const long d = block_gcd(n, r);
    Int total = 0;
    for (long x = 0; x < g.order; ++x) {
        long y = g.power(x, n / d);
        Int c = g.centralizer_size(y);
        Int pw = 1;
        for (long t = 0; t < d; ++t) pw *= c;
        total += pw;
    }
    Rat out(total, Int(g.order));
    out.canonicalize();
    return out;
}

std::optional<long> e_ad_order(const HopfAlgebra& h, long n, long limit) {
    if (n < 1 || limit < 1) throw validation_error("e_ad_order: n and limit must be >= 1");
    Mat e(h.field(), 0, 0);
    if (n == 1) {
        e = indicator_e_on_basis(h.field(), center_basis(h), h.dim(), 1, h.antipode_sq());
    } else {
        PivotalModule p = adjoint_pivotal(h);
        HModule w = tensor_power(p.module, n);
        e = indicator_e_on_basis(h.field(), invariants(w), p.module.dim(), n, p.phi);
    }
    if (e.rows() == 0) return 1;
    Mat acc = e;
    for (long k = 1; k <= limit; ++k) {
        if (acc.is_identity()) return k;
        acc = acc * e;
    }
    return std::nullopt;
}

} // namespace hopfind
