#include "hopfind/constructors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace hopfind {

/* ---- groups -------------------------------------------------------------- */

void GroupPresentation::validate() const {
    if (order <= 0 || static_cast<long>(cayley.size()) != order)
        throw validation_error("Cayley table size does not match group order");
    for (long i = 0; i < order; ++i) {
        if (static_cast<long>(cayley[i].size()) != order)
            throw validation_error("Cayley table is not square");
        std::vector<bool> seen_row(order, false), seen_col(order, false);
        for (long j = 0; j < order; ++j) {
            long r = cayley[i][j], c = cayley[j][i];
            if (r < 0 || r >= order || c < 0 || c >= order)
                throw validation_error("Cayley entry out of range");
            if (seen_row[r] || seen_col[c])
                throw validation_error("Cayley table is not a Latin square");
            seen_row[r] = seen_col[c] = true;
        }
    }
    if (identity < 0 || identity >= order)
        throw validation_error("identity index out of range");
    for (long i = 0; i < order; ++i)
        if (cayley[identity][i] != i || cayley[i][identity] != i)
            throw validation_error("identity law fails in Cayley table");
    if (static_cast<long>(inverse.size()) != order)
        throw validation_error("inverse vector size mismatch");
    for (long i = 0; i < order; ++i)
        if (cayley[i][inverse[i]] != identity || cayley[inverse[i]][i] != identity)
            throw validation_error("inverse law fails in Cayley table");
}

std::vector<long> GroupPresentation::generating_set() const {
    if (!generators.empty()) return generators;
    std::vector<long> gens;
    std::set<long> closed{identity};
    auto close = [&]() {
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<long> cur(closed.begin(), closed.end());
            for (long a : cur)
                for (long b : cur)
                    if (closed.insert(cayley[a][b]).second) grew = true;
        }
    };
    for (long i = 0; i < order && static_cast<long>(closed.size()) < order; ++i) {
        if (closed.count(i)) continue;
        gens.push_back(i);
        closed.insert(i);
        close();
    }
    return gens;
}

long GroupPresentation::power(long g, long e) const {
    long acc = identity;
    for (long t = 0; t < e; ++t) acc = cayley[acc][g];
    return acc;
}

long GroupPresentation::centralizer_size(long g) const {
    long n = 0;
    for (long h = 0; h < order; ++h)
        if (cayley[g][h] == cayley[h][g]) ++n;
    return n;
}

long GroupPresentation::conjugacy_class_count() const {
    std::vector<bool> seen(order, false);
    long classes = 0;
    for (long g = 0; g < order; ++g) {
        if (seen[g]) continue;
        ++classes;
        for (long h = 0; h < order; ++h) seen[cayley[cayley[h][g]][inverse[h]]] = true;
    }
    return classes;
}

GroupPresentation cyclic_group(long n) {
    if (n < 1) throw validation_error("cyclic group order must be >= 1");
    GroupPresentation g;
    g.order = n;
    g.identity = 0;
    g.name = "Z/" + std::to_string(n);
    g.cayley.assign(n, std::vector<long>(n));
    g.inverse.resize(n);
    for (long i = 0; i < n; ++i) {
        g.inverse[i] = (n - i) % n;
        for (long j = 0; j < n; ++j) g.cayley[i][j] = (i + j) % n;
    }
    if (n > 1) g.generators = {1};
    g.validate();
    return g;
}

GroupPresentation symmetric_group_s3() {
    // one-line notation, lexicographic
    const std::array<std::array<long, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    auto find = [&](const std::array<long, 3>& p) {
        for (long i = 0; i < 6; ++i)
            if (perms[i] == p) return i;
        throw std::logic_error("permutation lookup");
    };
    GroupPresentation g;
    g.order = 6;
    g.identity = 0;
    g.name = "S3";
    g.cayley.assign(6, std::vector<long>(6));
    g.inverse.resize(6);
    for (long i = 0; i < 6; ++i) {
        for (long j = 0; j < 6; ++j) {
            std::array<long, 3> comp;   // (s.t)(x) = s(t(x))
            for (long x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            g.cayley[i][j] = find(comp);
        }
    }
    for (long i = 0; i < 6; ++i)
        for (long j = 0; j < 6; ++j)
            if (g.cayley[i][j] == 0) g.inverse[i] = j;
    g.generators = {1, 3};   // a transposition and a 3-cycle
    g.validate();
    return g;
}

GroupPresentation dihedral_group_d4() {
    // indices: k < 4 -> r^k, 4 + k -> s r^k
    GroupPresentation g;
    g.order = 8;
    g.identity = 0;
    g.name = "D4";
    g.cayley.assign(8, std::vector<long>(8));
    g.inverse.resize(8);
    auto idx = [](long flip, long rot) { return flip * 4 + mod_pos(rot, 4); };
    for (long f1 = 0; f1 < 2; ++f1)
        for (long r1 = 0; r1 < 4; ++r1)
            for (long f2 = 0; f2 < 2; ++f2)
                for (long r2 = 0; r2 < 4; ++r2) {
                    // (s^f1 r^r1)(s^f2 r^r2) = s^{f1+f2} r^{(-1)^{f2} r1 + r2}
                    long f = (f1 + f2) % 2;
                    long r = mod_pos((f2 ? -r1 : r1) + r2, 4);
                    g.cayley[idx(f1, r1)][idx(f2, r2)] = idx(f, r);
                }
    for (long i = 0; i < 8; ++i)
        for (long j = 0; j < 8; ++j)
            if (g.cayley[i][j] == 0) g.inverse[i] = j;
    g.generators = {1, 4};   // r and s
    g.validate();
    return g;
}

GroupPresentation quaternion_group_q8() {
    // 1, -1, i, -i, j, -j, k, -k
    GroupPresentation g;
    g.order = 8;
    g.identity = 0;
    g.name = "Q8";
    // represent as (sign, axis): axis 0 = 1, 1 = i, 2 = j, 3 = k
    auto idx = [](long sign, long axis) { return axis * 2 + (sign < 0 ? 1 : 0); };
    auto axis_of = [](long t) { return t / 2; };
    auto sign_of = [](long t) { return t % 2 ? -1L : 1L; };
    // quaternion multiplication table on axes with result sign
    static const long mul_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const long mul_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    g.cayley.assign(8, std::vector<long>(8));
    g.inverse.resize(8);
    for (long a = 0; a < 8; ++a)
        for (long b = 0; b < 8; ++b) {
            long ax = axis_of(a), bx = axis_of(b);
            long s = sign_of(a) * sign_of(b) * mul_sign[ax][bx];
            g.cayley[a][b] = idx(s, mul_axis[ax][bx]);
        }
    for (long i = 0; i < 8; ++i)
        for (long j = 0; j < 8; ++j)
            if (g.cayley[i][j] == 0) g.inverse[i] = j;
    g.generators = {2, 4};   // i and j
    g.validate();
    return g;
}

GroupPresentation builtin_group(const std::string& name) {
    if (name == "S3" || name == "s3") return symmetric_group_s3();
    if (name == "D4" || name == "d4") return dihedral_group_d4();
    if (name == "Q8" || name == "q8") return quaternion_group_q8();
    if (name.rfind("Z/", 0) == 0 || name.rfind("z/", 0) == 0) {
        long n = std::stol(name.substr(2));
        if (n < 1 || n > 12) throw validation_error("built-in cyclic groups cover Z/1..Z/12");
        return cyclic_group(n);
    }
    throw validation_error("unknown built-in group: " + name);
}

namespace {

class GroupBackend : public HopfBackend {
public:
    GroupBackend(GroupPresentation g, const CycField& f) : g_(std::move(g)), field_(&f) {}

    SparseVec product(long i, long j) const override {
        return {{g_.cayley[i][j], Cyc::one(*field_)}};
    }
    CoSparse comult(long i) const override { return {{i, i, Cyc::one(*field_)}}; }
    const MonoTerm* mono_product(long i, long j, MonoTerm& scratch) const override {
        scratch = MonoTerm{false, 1, 0, g_.cayley[i][j]};
        return &scratch;
    }
    const GroupPresentation& group() const { return g_; }

private:
    GroupPresentation g_;
    const CycField* field_;
};

} // namespace

HopfAlgebra group_algebra(const GroupPresentation& g, long cyclotomic_order) {
    g.validate();
    const CycField& f = CycField::get(cyclotomic_order);
    const long d = g.order;
    SparseVec unit{{g.identity, Cyc::one(f)}};
    SparseVec counit;
    for (long i = 0; i < d; ++i) counit.emplace_back(i, Cyc::one(f));
    std::vector<std::tuple<long, long, Cyc>> sts;
    for (long i = 0; i < d; ++i) sts.emplace_back(g.inverse[i], i, Cyc::one(f));
    Mat s = Mat::from_triplets(f, d, d, sts);
    return HopfAlgebra(f, d, std::make_shared<GroupBackend>(g, f), std::move(unit),
                       std::move(counit), std::move(s), g.generating_set(),
                       "k[" + (g.name.empty() ? "G" : g.name) + "]");
}

/* ---- book family ---------------------------------------------------------- */

void BookHopfParams::validate() const {
    if (N < 2) throw validation_error("book family needs N >= 2");
    if (m <= 0 || m >= N) throw validation_error("book family needs 0 < m < N");
    if (std::gcd(N, m) != 1) throw validation_error("book family needs gcd(N, m) = 1");
    if (std::gcd(N, mod_pos(root_exponent, N)) != 1)
        throw validation_error("root exponent must be prime to N");
}

namespace {

class BookBackend : public HopfBackend {
public:
    BookBackend(BookHopfParams p, const CycField& f) : p_(p), field_(&f) {}

    // omega^e with omega = zeta_N^s
    Cyc omega_pow(long e) const {
        return Cyc::zeta_pow(*field_, mod_pos(e * p_.root_exponent, p_.N));
    }

    const MonoTerm* mono_product(long i, long j, MonoTerm& t) const override {
        BookMonomial a = book_monomial(p_.N, i), b = book_monomial(p_.N, j);
        if (a.p + b.p >= p_.N || a.q + b.q >= p_.N) {
            t = MonoTerm{true, 1, 0, 0};
            return &t;
        }
        // commute g^r past x^P y^Q, then y^q past x^P
        long e = a.r * b.p - p_.m * a.r * b.q + p_.m * a.q * b.p;
        t.zero = false;
        t.sign = 1;
        t.zexp = mod_pos(e * p_.root_exponent, p_.N);
        t.idx = book_index(p_.N, a.p + b.p, a.q + b.q, mod_pos(a.r + b.r, p_.N));
        return &t;
    }

    SparseVec product(long i, long j) const override {
        MonoTerm t;
        mono_product(i, j, t);
        if (t.zero) return {};
        Cyc c = Cyc::zeta_pow(*field_, t.zexp);
        if (t.sign < 0) c = -c;
        return {{t.idx, std::move(c)}};
    }

    CoSparse comult(long i) const override {
        BookMonomial a = book_monomial(p_.N, i);
        ensure_tables();
        // Delta(x)^p Delta(y)^q (g^r (x) g^r); the g-twist only multiplies
        // every coefficient by a root of unity, served from a product cache
        const CoSparse& base = dxy_[a.p * p_.N + a.q];
        if (a.r == 0) return base;
        CoSparse out;
        out.reserve(base.size());
        MonoTerm l, r;
        long gi = book_index(p_.N, 0, 0, a.r);
        std::lock_guard<std::mutex> lock(mu_);
        for (const auto& [u1, u2, cu] : base) {
            mono_product(u1, gi, l);
            mono_product(u2, gi, r);
            long e = mod_pos(l.zexp + r.zexp, p_.N);
            auto key = std::make_pair(&cu.coeffs(), e);
            auto it = twist_cache_.find(key);
            if (it == twist_cache_.end())
                it = twist_cache_.emplace(key, cu * Cyc::zeta_pow(*field_, e)).first;
            out.emplace_back(l.idx, r.idx, it->second);
        }
        return out;
    }

    const BookHopfParams& params() const { return p_; }

private:
    // product inside H (x) H of sparse monomial tensors
    CoSparse tensor_mul(const CoSparse& u, const CoSparse& v) const {
        std::map<std::pair<long, long>, Cyc> acc;
        MonoTerm l, r;
        for (const auto& [u1, u2, cu] : u)
            for (const auto& [v1, v2, cv] : v) {
                mono_product(u1, v1, l);
                if (l.zero) continue;
                mono_product(u2, v2, r);
                if (r.zero) continue;
                Cyc c = cu * cv * Cyc::zeta_pow(*field_, mod_pos(l.zexp + r.zexp, p_.N));
                if (l.sign * r.sign < 0) c = -c;
                auto [it, fresh] = acc.try_emplace({l.idx, r.idx}, c);
                if (!fresh) it->second += c;
            }
        CoSparse out;
        for (auto& [key, c] : acc)
            if (!c.is_zero()) out.emplace_back(key.first, key.second, std::move(c));
        return out;
    }

    // Delta(x)^k, Delta(y)^k and their products, built on first use
    void ensure_tables() const {
        std::lock_guard<std::mutex> lock(mu_);
        if (!dxy_.empty()) return;
        const long N = p_.N;
        std::vector<CoSparse> dx(N), dy(N);
        dx[0] = dy[0] = {{0, 0, Cyc::one(*field_)}};
        CoSparse deltax{{book_index(N, 1, 0, 0), 0, Cyc::one(*field_)},
                        {book_index(N, 0, 0, 1), book_index(N, 1, 0, 0), Cyc::one(*field_)}};
        CoSparse deltay{{book_index(N, 0, 1, 0), 0, Cyc::one(*field_)},
                        {book_index(N, 0, 0, mod_pos(p_.m, N)), book_index(N, 0, 1, 0), Cyc::one(*field_)}};
        for (long k = 1; k < N; ++k) {
            dx[k] = tensor_mul(dx[k - 1], deltax);
            dy[k] = tensor_mul(dy[k - 1], deltay);
        }
        dxy_.resize(N * N);
        for (long pp = 0; pp < N; ++pp)
            for (long q = 0; q < N; ++q)
                dxy_[pp * N + q] = tensor_mul(dx[pp], dy[q]);
    }

    BookHopfParams p_;
    const CycField* field_;
    mutable std::mutex mu_;
    mutable std::vector<CoSparse> dxy_;
    mutable std::map<std::pair<const std::vector<Rat>*, long>, Cyc> twist_cache_;
};

} // namespace

HopfAlgebra book_hopf(const BookHopfParams& p) {
    p.validate();
    const long N = p.N;
    const long d = N * N * N;
    const CycField& f = CycField::get(N);
    auto backend = std::make_shared<BookBackend>(p, f);

    SparseVec unit{{0, Cyc::one(f)}};
    SparseVec counit;
    for (long r = 0; r < N; ++r) counit.emplace_back(book_index(N, 0, 0, r), Cyc::one(f));

    // S is an anti-algebra map: S(x^p y^q g^r) = S(g)^r S(y)^q S(x)^p with
    // S(x) = -g^{-1}x, S(y) = -g^{-m}y, S(g) = g^{-1}. Every image is a signed
    // zeta-power times a monomial; the whole chain runs in exponent arithmetic,
    // with normal-form scalars supplied by the backend product rule.
    MonoTerm sx, sy, t;
    backend->mono_product(book_index(N, 0, 0, mod_pos(-1, N)), book_index(N, 1, 0, 0), sx);
    sx.sign = -sx.sign;
    backend->mono_product(book_index(N, 0, 0, mod_pos(-p.m, N)), book_index(N, 0, 1, 0), sy);
    sy.sign = -sy.sign;
    auto mono_chain = [&](MonoTerm acc, const MonoTerm& factor) {
        backend->mono_product(acc.idx, factor.idx, t);
        acc.idx = t.idx;
        acc.sign *= factor.sign * t.sign;
        acc.zexp = mod_pos(acc.zexp + factor.zexp + t.zexp, N);
        return acc;
    };
    std::vector<std::tuple<long, long, Cyc>> sts;
    for (long pp = 0; pp < N; ++pp)
        for (long q = 0; q < N; ++q)
            for (long r = 0; r < N; ++r) {
                MonoTerm img{false, 1, 0, book_index(N, 0, 0, mod_pos(-r, N))};
                for (long tt = 0; tt < q; ++tt) img = mono_chain(img, sy);
                for (long tt = 0; tt < pp; ++tt) img = mono_chain(img, sx);
                Cyc v = Cyc::zeta_pow(f, img.zexp);
                if (img.sign < 0) v = -v;
                sts.emplace_back(img.idx, book_index(N, pp, q, r), std::move(v));
            }
    Mat s = Mat::from_triplets(f, d, d, sts);

    std::vector<long> gens{book_index(N, 0, 0, 1), book_index(N, 1, 0, 0), book_index(N, 0, 1, 0)};
    std::string nm = "book(" + std::to_string(N) + "," + std::to_string(p.m);
    if (p.root_exponent != 1) nm += ",s=" + std::to_string(p.root_exponent);
    nm += ")";
    return HopfAlgebra(f, d, backend, std::move(unit), std::move(counit), std::move(s),
                       std::move(gens), nm);
}

std::vector<GeneratorOps> generator_bundle(const HopfAlgebra& h) {
    std::vector<GeneratorOps> ops;
    Mat st = h.antipode().transpose();
    for (long g : h.generators_or_all()) {
        GeneratorOps op{g, h.left_mult(g), h.right_mult(g), Mat(h.field(), h.dim(), h.dim())};
        // adjoint column a: sum over Delta(g) of  h_(1) a S(h_(2))
        std::vector<std::tuple<long, long, Cyc>> ts;
        CoSparse dg = h.comult(g);
        for (long a = 0; a < h.dim(); ++a) {
            SparseVec col;
            for (const auto& [j, k, w] : dg) {
                SparseVec left = h.product(j, a);
                for (const auto& [t, v] : h.product(left, st.row(k))) {
                    Cyc c = w * v;
                    if (!c.is_zero()) col.emplace_back(t, std::move(c));
                }
            }
            for (const auto& [t, v] : sv_normalize(std::move(col))) ts.emplace_back(t, a, v);
        }
        op.adjoint = Mat::from_triplets(h.field(), h.dim(), h.dim(), ts);
        ops.push_back(std::move(op));
    }
    return ops;
}

} // namespace hopfind
