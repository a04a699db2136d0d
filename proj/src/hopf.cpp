#include "hopfind/hopf.hpp"

#include <algorithm>
#include <map>

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

Mat mat_from_columns(const CycField& f, long rows, long cols,
                     const std::function<SparseVec(long)>& col) {
    std::vector<std::tuple<long, long, Cyc>> ts;
    for (long j = 0; j < cols; ++j)
        for (const auto& [k, v] : col(j)) ts.emplace_back(k, j, v);
    return Mat::from_triplets(f, rows, cols, ts);
}

} // namespace

HopfAlgebra::HopfAlgebra(const CycField& f, long dim, std::shared_ptr<const HopfBackend> backend,
                         SparseVec unit, SparseVec counit, Mat antipode,
                         std::vector<long> generators, std::string name) {
    Mat sinv = inverse(antipode);
    auto impl = std::make_shared<Impl>(f, dim, std::move(antipode), std::move(sinv));
    impl->backend = std::move(backend);
    impl->unit = std::move(unit);
    impl->counit = std::move(counit);
    impl->generators = std::move(generators);
    impl->name = std::move(name);
    impl_ = std::move(impl);
}

std::vector<long> HopfAlgebra::generators_or_all() const {
    if (!generators().empty()) return generators();
    std::vector<long> all(dim());
    for (long i = 0; i < dim(); ++i) all[i] = i;
    return all;
}

Cyc HopfAlgebra::counit_of(const SparseVec& v) const {
    Cyc s = Cyc::zero(field());
    for (const auto& [i, c] : v) s += counit_at(i) * c;
    return s;
}

SparseVec HopfAlgebra::product(const SparseVec& a, const SparseVec& b) const {
    SparseVec out;
    for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b) {
            Cyc c = ca * cb;
            if (c.is_zero()) continue;
            for (const auto& [k, v] : backend().product(i, j)) out.emplace_back(k, c * v);
        }
    return sv_normalize(std::move(out));
}

Mat HopfAlgebra::left_mult(long i) const {
    return mat_from_columns(field(), dim(), dim(), [&](long j) { return backend().product(i, j); });
}

Mat HopfAlgebra::right_mult(long i) const {
    return mat_from_columns(field(), dim(), dim(), [&](long j) { return backend().product(j, i); });
}

Mat HopfAlgebra::left_mult_op(const SparseVec& a) const {
    return mat_from_columns(field(), dim(), dim(), [&](long j) { return product(a, sv_unit(j, Cyc::one(field()))); });
}

Mat HopfAlgebra::right_mult_op(const SparseVec& a) const {
    return mat_from_columns(field(), dim(), dim(), [&](long j) { return product(sv_unit(j, Cyc::one(field())), a); });
}

/* ---- axiom verification ------------------------------------------------ */

bool AxiomReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

namespace {

// canonical compare of sign * zeta^zexp monomial terms; -1 = zeta^{N/2} for even N
bool mono_equal(const MonoTerm& a, const MonoTerm& b, long order) {
    if (a.zero || b.zero) return a.zero == b.zero;
    long ae = mod_pos(a.zexp, order), be = mod_pos(b.zexp, order);
    int as = a.sign, bs = b.sign;
    if (order % 2 == 0) {
        if (as < 0) { as = 1; ae = mod_pos(ae + order / 2, order); }
        if (bs < 0) { bs = 1; be = mod_pos(be + order / 2, order); }
    }
    return as == bs && ae == be && a.idx == b.idx;
}

using PairVec = std::map<std::pair<long, long>, Cyc>;   // element of H (x) H

void pairvec_add(PairVec& m, long j, long k, const Cyc& c) {
    auto [it, fresh] = m.try_emplace({j, k}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

PairVec comult_of_vec(const HopfAlgebra& h, const SparseVec& v) {
    PairVec m;
    for (const auto& [i, c] : v)
        for (const auto& [j, k, w] : h.comult(i)) pairvec_add(m, j, k, c * w);
    return m;
}

} // namespace

AxiomReport verify_hopf_axioms(const HopfAlgebra& h, const VerifyOptions& opts) {
    const CycField& f = h.field();
    const long d = h.dim();
    const Cyc one = Cyc::one(f);
    AxiomReport rep;
    rep.sampled = d > opts.full_scan_dim;

    auto sv_eq = [](const SparseVec& a, const SparseVec& b) { return a == b; };

    // triple/pair streams: exhaustive below the full-scan cutoff, seeded
    // pseudorandom sample plus all generator triples above it
    std::vector<std::array<long, 3>> triples;
    std::vector<std::array<long, 2>> pairs;
    std::vector<long> singles;
    if (!rep.sampled) {
        for (long i = 0; i < d; ++i) singles.push_back(i);
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j) pairs.push_back({i, j});
        // full associativity scan iterates triples inline below
    } else {
        SplitMix rng(opts.seed);
        for (long t = 0; t < opts.sample_triples; ++t)
            triples.push_back({rng.below(d), rng.below(d), rng.below(d)});
        std::vector<long> gens = h.generators_or_all();
        for (long a : gens)
            for (long b : gens)
                for (long c : gens) triples.push_back({a, b, c});
        for (long t = 0; t < opts.sample_triples / 10; ++t)
            pairs.push_back({rng.below(d), rng.below(d)});
        for (long a : gens)
            for (long b : gens) pairs.push_back({a, b});
        for (long t = 0; t < std::min<long>(d, 400); ++t) singles.push_back(rng.below(d));
        for (long g : gens) singles.push_back(g);
    }

    // 1. associativity of multiplication
    {
        AxiomCheck c{"associativity"};
        MonoTerm s1, s2, scratch;
        const bool mono = h.backend().mono_product(0, 0, scratch) != nullptr;
        auto check_triple = [&](long i, long j, long k) -> bool {
            if (mono) {
                MonoTerm ij, jk, l, r;
                h.backend().mono_product(i, j, ij);
                h.backend().mono_product(j, k, jk);
                if (ij.zero) l = ij;
                else {
                    h.backend().mono_product(ij.idx, k, l);
                    l.sign *= ij.sign; l.zexp += ij.zexp;
                }
                if (jk.zero) r = jk;
                else {
                    h.backend().mono_product(i, jk.idx, r);
                    r.sign *= jk.sign; r.zexp += jk.zexp;
                }
                return mono_equal(l, r, f.order());
            }
            SparseVec l = h.product(h.product(i, j), sv_unit(k, one));
            SparseVec r = h.product(sv_unit(i, one), h.product(j, k));
            return sv_eq(l, r);
        };
        if (!rep.sampled) {
            for (long i = 0; i < d && c.pass; ++i)
                for (long j = 0; j < d && c.pass; ++j)
                    for (long k = 0; k < d; ++k) {
                        ++rep.triples_checked;
                        if (!check_triple(i, j, k)) {
                            c.pass = false;
                            c.first_failure = (i * d + j) * d + k;
                            c.note = "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                     std::to_string(k) + ")";
                            break;
                        }
                    }
        } else {
            for (const auto& [i, j, k] : triples) {
                ++rep.triples_checked;
                if (!check_triple(i, j, k)) {
                    c.pass = false;
                    c.first_failure = (i * d + j) * d + k;
                    c.note = "sampled triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                             std::to_string(k) + ")";
                    break;
                }
            }
        }
        rep.checks.push_back(c);
    }

    // 2. unit law
    {
        AxiomCheck c{"unit"};
        for (long i = 0; i < d; ++i) {
            SparseVec e = sv_unit(i, one);
            if (!sv_eq(h.product(h.unit(), e), e) || !sv_eq(h.product(e, h.unit()), e)) {
                c.pass = false;
                c.first_failure = i;
                break;
            }
        }
        rep.checks.push_back(c);
    }

    // 3. coassociativity
    {
        AxiomCheck c{"coassociativity"};
        for (long i : singles) {
            std::map<std::array<long, 3>, Cyc> lhs, rhs;
            for (const auto& [j, k, w] : h.comult(i)) {
                for (const auto& [p, q, w2] : h.comult(j)) {
                    Cyc v = w * w2;
                    auto key = std::array<long, 3>{p, q, k};
                    auto [it, fresh] = lhs.try_emplace(key, v);
                    if (!fresh) { it->second += v; if (it->second.is_zero()) lhs.erase(it); }
                }
                for (const auto& [p, q, w2] : h.comult(k)) {
                    Cyc v = w * w2;
                    auto key = std::array<long, 3>{j, p, q};
                    auto [it, fresh] = rhs.try_emplace(key, v);
                    if (!fresh) { it->second += v; if (it->second.is_zero()) rhs.erase(it); }
                }
            }
            if (lhs != rhs) {
                c.pass = false;
                c.first_failure = i;
                break;
            }
        }
        rep.checks.push_back(c);
    }

    // 4. counit law
    {
        AxiomCheck c{"counit"};
        for (long i : singles) {
            SparseVec l, r;
            for (const auto& [j, k, w] : h.comult(i)) {
                Cyc lw = h.counit_at(j) * w;
                if (!lw.is_zero()) l.emplace_back(k, lw);
                Cyc rw = h.counit_at(k) * w;
                if (!rw.is_zero()) r.emplace_back(j, rw);
            }
            SparseVec e = sv_unit(i, one);
            if (!sv_eq(sv_normalize(std::move(l)), e) || !sv_eq(sv_normalize(std::move(r)), e)) {
                c.pass = false;
                c.first_failure = i;
                break;
            }
        }
        rep.checks.push_back(c);
    }

    // 5. comultiplication is an algebra map
    {
        AxiomCheck c{"comult_algebra_map"};
        PairVec unit2 = comult_of_vec(h, h.unit());
        PairVec unit_expect;
        for (const auto& [i, ci] : h.unit())
            for (const auto& [j, cj] : h.unit()) pairvec_add(unit_expect, i, j, ci * cj);
        if (!(unit2 == unit_expect)) {
            c.pass = false;
            c.note = "Delta(1) != 1 (x) 1";
        }
        for (size_t t = 0; c.pass && t < pairs.size(); ++t) {
            auto [i, j] = pairs[t];
            PairVec lhs = comult_of_vec(h, h.product(i, j));
            PairVec rhs;
            for (const auto& [p1, q1, w1] : h.comult(i))
                for (const auto& [p2, q2, w2] : h.comult(j)) {
                    Cyc w = w1 * w2;
                    for (const auto& [a, va] : h.product(p1, p2))
                        for (const auto& [b, vb] : h.product(q1, q2))
                            pairvec_add(rhs, a, b, w * va * vb);
                }
            if (!(lhs == rhs)) {
                c.pass = false;
                c.first_failure = i * d + j;
                break;
            }
        }
        rep.checks.push_back(c);
    }

    // 6. counit is an algebra map
    {
        AxiomCheck c{"counit_algebra_map"};
        if (!h.counit_of(h.unit()).is_one()) {
            c.pass = false;
            c.note = "eps(1) != 1";
        }
        for (size_t t = 0; c.pass && t < pairs.size(); ++t) {
            auto [i, j] = pairs[t];
            if (h.counit_of(h.product(i, j)) != h.counit_at(i) * h.counit_at(j)) {
                c.pass = false;
                c.first_failure = i * d + j;
                break;
            }
        }
        rep.checks.push_back(c);
    }

    // 7. antipode axiom m(S (x) id)Delta = u.eps = m(id (x) S)Delta
    {
        AxiomCheck c{"antipode"};
        Mat st = h.antipode().transpose();   // row j = S(a_j)
        for (long i : singles) {
            SparseVec l, r;
            for (const auto& [j, k, w] : h.comult(i)) {
                for (const auto& [t, v] : h.product(st.row(j), sv_unit(k, one))) l.emplace_back(t, w * v);
                for (const auto& [t, v] : h.product(sv_unit(j, one), st.row(k))) r.emplace_back(t, w * v);
            }
            SparseVec expect = sv_scale(h.unit(), h.counit_at(i));
            if (!sv_eq(sv_normalize(std::move(l)), expect) || !sv_eq(sv_normalize(std::move(r)), expect)) {
                c.pass = false;
                c.first_failure = i;
                break;
            }
        }
        rep.checks.push_back(c);
    }

    // 8. antipode invertible
    {
        AxiomCheck c{"antipode_invertible"};
        if (rank(h.antipode()) != d) c.pass = false;
        rep.checks.push_back(c);
    }

    return rep;
}

/* ---- coalgebra utilities ------------------------------------------------ */

long flat_index(const std::vector<long>& idx, long dim) {
    long flat = 0;
    for (long i : idx) flat = flat * dim + i;
    return flat;
}

std::vector<MultiTerm> iterated_comult_terms(const HopfAlgebra& h, long n, long i) {
    if (n < 1) throw validation_error("iterated_comult: n must be >= 1");
    std::vector<MultiTerm> terms{{{i}, Cyc::one(h.field())}};
    for (long step = 1; step < n; ++step) {
        std::vector<MultiTerm> next;
        for (const auto& [idx, c] : terms) {
            for (const auto& [j, k, w] : h.comult(idx[0])) {
                std::vector<long> nidx;
                nidx.reserve(idx.size() + 1);
                nidx.push_back(j);
                nidx.push_back(k);
                nidx.insert(nidx.end(), idx.begin() + 1, idx.end());
                next.emplace_back(std::move(nidx), c * w);
            }
        }
        terms = std::move(next);
    }
    // combine duplicates
    std::map<std::vector<long>, Cyc> m;
    for (auto& [idx, c] : terms) {
        auto [it, fresh] = m.try_emplace(idx, c);
        if (!fresh) it->second += c;
    }
    std::vector<MultiTerm> out;
    for (auto& [idx, c] : m)
        if (!c.is_zero()) out.emplace_back(idx, c);
    return out;
}

Mat iterated_comult(const HopfAlgebra& h, long n) {
    long rows = 1;
    for (long t = 0; t < n; ++t) rows *= h.dim();
    std::vector<std::tuple<long, long, Cyc>> ts;
    for (long i = 0; i < h.dim(); ++i)
        for (const auto& [idx, c] : iterated_comult_terms(h, n, i))
            ts.emplace_back(flat_index(idx, h.dim()), i, c);
    return Mat::from_triplets(h.field(), rows, h.dim(), ts);
}

/* ---- convolution calculus ----------------------------------------------- */

Mat convolution(const Mat& f, const Mat& g, const HopfAlgebra& h) {
    if (f.rows() != h.dim() || g.rows() != h.dim() || f.cols() != h.dim() || g.cols() != h.dim())
        throw validation_error("convolution: endomorphism dimensions do not match the algebra");
    Mat ft = f.transpose(), gt = g.transpose();
    std::vector<std::tuple<long, long, Cyc>> ts;
    for (long i = 0; i < h.dim(); ++i) {
        SparseVec col;
        for (const auto& [j, k, w] : h.comult(i)) {
            for (const auto& [t, v] : h.product(ft.row(j), gt.row(k))) {
                Cyc c = w * v;
                if (!c.is_zero()) col.emplace_back(t, std::move(c));
            }
        }
        for (const auto& [t, v] : sv_normalize(std::move(col))) ts.emplace_back(t, i, v);
    }
    return Mat::from_triplets(h.field(), h.dim(), h.dim(), ts);
}

Mat conv_power_of_id(const HopfAlgebra& h, long m) {
    // convolution unit u.eps: a_i -> eps(a_i) 1
    Mat acc(h.field(), h.dim(), h.dim());
    {
        std::vector<std::tuple<long, long, Cyc>> ts;
        for (long i = 0; i < h.dim(); ++i)
            for (const auto& [t, v] : h.unit()) {
                Cyc c = h.counit_at(i) * v;
                if (!c.is_zero()) ts.emplace_back(t, i, c);
            }
        acc = Mat::from_triplets(h.field(), h.dim(), h.dim(), ts);
    }
    if (m == 0) return acc;
    // id^{*n} * S^{*n} = u.eps, so negative powers convolve the antipode
    Mat base = m > 0 ? Mat::identity(h.field(), h.dim()) : h.antipode();
    for (long t = 0; t < (m > 0 ? m : -m); ++t) acc = convolution(acc, base, h);
    return acc;
}

Cyc kmn_indicator(const HopfAlgebra& h, long n) {
    return trace(h.antipode() * conv_power_of_id(h, n - 1));
}

/* ---- integrals, center, antipode analysis ------------------------------- */

namespace {

std::vector<SparseVec> joint_kernel(const HopfAlgebra& h,
                                    const std::function<Mat(long)>& condition) {
    std::vector<Mat> blocks;
    for (long g : h.generators_or_all()) blocks.push_back(condition(g));
    return kernel_basis(vstack(blocks));
}

} // namespace

std::vector<SparseVec> left_integrals(const HopfAlgebra& h) {
    Mat id = Mat::identity(h.field(), h.dim());
    return joint_kernel(h, [&](long g) { return h.left_mult(g) - id.scaled(h.counit_at(g)); });
}

std::vector<SparseVec> right_integrals(const HopfAlgebra& h) {
    Mat id = Mat::identity(h.field(), h.dim());
    return joint_kernel(h, [&](long g) { return h.right_mult(g) - id.scaled(h.counit_at(g)); });
}

std::vector<Cyc> dual_right_integral(const HopfAlgebra& h, const SparseVec& Lambda) {
    const long d = h.dim();
    // unknowns lambda_0..lambda_{d-1}; equations lambda(h_(1)) h_(2) = lambda(h) 1
    std::vector<std::tuple<long, long, Cyc>> ts;
    for (long i = 0; i < d; ++i) {
        for (const auto& [j, k, w] : h.comult(i)) ts.emplace_back(i * d + k, j, w);
        for (const auto& [t, v] : h.unit()) ts.emplace_back(i * d + t, i, -v);
    }
    auto ker = kernel_basis(Mat::from_triplets(h.field(), d * d, d, ts));
    if (ker.empty()) throw normalization_error("no dual integral found");
    // pick the solution pairing nontrivially with Lambda (the space is 1-dim
    // in the finite-dimensional case, so this is just a rescale)
    for (const SparseVec& lam : ker) {
        Cyc pair = Cyc::zero(h.field());
        for (const auto& [t, v] : lam) pair += v * sv_get(Lambda, t, h.field());
        if (pair.is_zero()) continue;
        Cyc inv = pair.inverse();
        std::vector<Cyc> out(d, Cyc::zero(h.field()));
        for (const auto& [t, v] : lam) out[t] = v * inv;
        return out;
    }
    throw normalization_error("dual integral pairs to zero with the given integral");
}

bool is_semisimple(const HopfAlgebra& h) {
    auto ints = left_integrals(h);
    if (ints.size() != 1)
        throw validation_error("left integral space is not 1-dimensional; not a valid Hopf algebra?");
    return !h.counit_of(ints[0]).is_zero();
}

std::vector<SparseVec> center_basis(const HopfAlgebra& h) {
    return joint_kernel(h, [&](long g) { return h.left_mult(g) - h.right_mult(g); });
}

Cyc s2_integral_scalar(const HopfAlgebra& h) {
    auto ints = left_integrals(h);
    if (ints.size() != 1)
        throw validation_error("left integral space is not 1-dimensional");
    const SparseVec& L = ints[0];
    SparseVec w = h.antipode().apply(h.antipode().apply(L));
    Cyc c = sv_get(w, L[0].first, h.field()) * L[0].second.inverse();
    if (!(sv_scale(L, c) == w))
        throw validation_error("S^2(Lambda) is not proportional to Lambda");
    return c;
}

std::optional<long> inner_order_of_s2(const HopfAlgebra& h, long limit,
                                      const InnerOrderOptions& opts) {
    if (limit < 1) throw validation_error("inner_order_of_s2: limit must be >= 1");
    const long d = h.dim();
    Mat s2 = h.antipode_sq();
    Mat s2k = Mat::identity(h.field(), d);
    for (long k = 1; k <= limit; ++k) {
        s2k = s2k * s2;
        Mat s2kt = s2k.transpose();
        // W = { a : S^{2k}(h) a = a h for all generators h }
        auto W = joint_kernel(h, [&](long g) {
            return h.left_mult_op(s2kt.row(g)) - h.right_mult(g);
        });
        if (W.empty()) continue;
        auto invertible = [&](const SparseVec& a) {
            return !a.empty() && rank(h.left_mult_op(a)) == d;
        };
        bool found = false;
        for (const SparseVec& w : W)
            if (invertible(w)) { found = true; break; }
        if (!found && W.size() > 1) {
            SplitMix rng(opts.seed + static_cast<unsigned long>(k));
            for (long t = 0; t < opts.trials && !found; ++t) {
                SparseVec cand;
                for (const SparseVec& w : W) {
                    long c = rng.below(2 * opts.coeff_range + 1) - opts.coeff_range;
                    if (c != 0) cand = sv_axpy(cand, Cyc::from_long(h.field(), c), w);
                }
                found = invertible(cand);
            }
        }
        if (found) return k;
    }
    return std::nullopt;
}

} // namespace hopfind
