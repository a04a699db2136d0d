#include <doctest.h>

#include <memory>

#include "hopfind/matrix.hpp"

using namespace hopfind;

namespace {

const CycField& F1 = CycField::get(1);
const CycField& F3 = CycField::get(3);

Cyc k(long v) { return Cyc::from_long(F1, v); }
Cyc z3(long e) { return Cyc::zeta_pow(F3, e); }

Mat mat(const CycField& f, long r, long c, std::vector<long> vals) {
    std::vector<Cyc> d;
    d.reserve(vals.size());
    for (long v : vals) d.push_back(Cyc::from_long(f, v));
    return Mat::from_dense(f, r, c, d);
}

struct Rng {
    unsigned long s = 777;
    long next(long lo, long hi) {
        s = s * 6364136223846793005UL + 1442695040888963407UL;
        return lo + static_cast<long>((s >> 33) % static_cast<unsigned long>(hi - lo + 1));
    }
};

Mat random_mat(const CycField& f, long r, long c, Rng& rng, int density_pct = 60) {
    Mat m(f, r, c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j)
            if (rng.next(0, 99) < density_pct) m.set(i, j, Cyc::from_long(f, rng.next(-3, 3)));
    return m;
}

// oracle: A v == 0 entrywise
bool kills(const Mat& a, const SparseVec& v) { return a.apply(v).empty(); }

} // namespace

TEST_CASE("kernel of identity and zero matrices") {
    CHECK(kernel_basis(Mat::identity(F1, 3)).empty());
    auto ker = kernel_basis(Mat(F1, 2, 2));
    REQUIRE(ker.size() == 2);
    CHECK(ker[0] == SparseVec{{0, k(1)}});
    CHECK(ker[1] == SparseVec{{1, k(1)}});
}

TEST_CASE("kernel over Q(zeta_3): rank-1 dependency") {
    // row 2 = zeta^2 * row 1 because zeta^3 = 1
    Mat a(F3, 2, 2);
    a.set(0, 0, Cyc::one(F3));
    a.set(0, 1, z3(1));
    a.set(1, 0, z3(2));
    a.set(1, 1, Cyc::one(F3));
    REQUIRE(rank(a) == 1);
    auto ker = kernel_basis(a);
    REQUIRE(ker.size() == 1);
    CHECK(kills(a, ker[0]));
    // canonical form (1, -zeta^2); rescaling by -zeta^2 recovers (-zeta, 1)
    CHECK(ker[0] == SparseVec{{0, Cyc::one(F3)}, {1, -z3(2)}});
    CHECK(sv_scale(ker[0], -z3(1)) == SparseVec{{0, -z3(1)}, {1, Cyc::one(F3)}});
}

TEST_CASE("rank-nullity and kernel exactness on random matrices") {
    Rng rng;
    for (int t = 0; t < 15; ++t) {
        long r = rng.next(1, 6), c = rng.next(1, 6);
        Mat a = random_mat(t % 2 ? F3 : F1, r, c, rng);
        auto ker = kernel_basis(a);
        CHECK(rank(a) + static_cast<long>(ker.size()) == c);
        for (const auto& v : ker) CHECK(kills(a, v));
        // canonical: ordered by leading index, leading coefficient 1
        for (size_t i = 0; i + 1 < ker.size(); ++i)
            CHECK(ker[i].front().first < ker[i + 1].front().first);
        for (const auto& v : ker) CHECK(v.front().second.is_one());
    }
}

TEST_CASE("dense/sparse round trip and representation independence") {
    Rng rng;
    Mat a = random_mat(F3, 4, 5, rng);
    Mat b = Mat::from_dense(F3, 4, 5, a.dense());
    CHECK(a == b);
    Mat c = Mat::from_triplets(F3, 4, 5, a.triplets());
    CHECK(a == c);
    CHECK(kernel_basis(a) == kernel_basis(c));
    CHECK(rank(a) == rank(c));
}

TEST_CASE("inverse") {
    Rng rng;
    int found = 0;
    while (found < 8) {
        long n = rng.next(1, 5);
        Mat a = random_mat(F1, n, n, rng, 80);
        if (rank(a) != n) continue;
        ++found;
        CHECK(a * inverse(a) == Mat::identity(F1, n));
        CHECK(inverse(a) * a == Mat::identity(F1, n));
    }
    Mat sing(F1, 2, 2);
    sing.set(0, 0, k(1));
    sing.set(1, 0, k(2));
    CHECK_THROWS_AS(inverse(sing), singular_matrix_error);
}

TEST_CASE("mat_pow") {
    Mat any = mat(F1, 2, 2, {3, 1, 4, 1});
    CHECK(mat_pow(any, 0) == Mat::identity(F1, 2));

    const CycField& F4 = CycField::get(4);
    Mat d4(F4, 1, 1);
    d4.set(0, 0, Cyc::zeta_pow(F4, 1));
    Mat d4inv = mat_pow(d4, -1);
    CHECK(d4inv.at(0, 0) == Cyc::zeta_pow(F4, 3));

    Mat perm = mat(F1, 2, 2, {0, 1, 1, 0});
    CHECK(mat_pow(perm, 2) == Mat::identity(F1, 2));

    Rng rng;
    int found = 0;
    while (found < 5) {
        Mat a = random_mat(F3, 3, 3, rng, 80);
        if (rank(a) != 3) continue;
        ++found;
        for (long r = -2; r <= 2; ++r)
            for (long s = -2; s <= 2; ++s)
                CHECK(mat_pow(a, r + s) == mat_pow(a, r) * mat_pow(a, s));
    }
    CHECK_THROWS_AS(mat_pow(Mat(F1, 2, 2), -1), singular_matrix_error);
}

TEST_CASE("trace commutes under cyclic exchange") {
    Rng rng;
    for (int t = 0; t < 10; ++t) {
        long n = rng.next(1, 5);
        Mat a = random_mat(F3, n, n, rng), b = random_mat(F3, n, n, rng);
        CHECK(trace(a * b) == trace(b * a));
    }
    CHECK(trace(Mat::identity(F1, 7)) == k(7));
}

TEST_CASE("kron") {
    CHECK(kron(Mat::identity(F1, 2), Mat::identity(F1, 3)) == Mat::identity(F1, 6));
    Rng rng;
    Mat a = random_mat(F3, 2, 3, rng), b = random_mat(F3, 3, 2, rng);
    Mat kr = kron(a, b);
    REQUIRE(kr.rows() == 6);
    REQUIRE(kr.cols() == 6);
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 3; ++j)
            for (long p = 0; p < 3; ++p)
                for (long q = 0; q < 2; ++q)
                    CHECK(kr.at(i * 3 + p, j * 2 + q) == a.at(i, j) * b.at(p, q));
    // mixed-product property
    Mat c = random_mat(F3, 3, 2, rng), d = random_mat(F3, 2, 3, rng);
    CHECK(kron(a * c, b * d) == kron(a, b) * kron(c, d));
}

TEST_CASE("solve_in_span") {
    std::vector<SparseVec> basis{{{0, k(1)}}, {{1, k(1)}}};
    auto c = solve_in_span(F1, 3, basis, SparseVec{{0, k(1)}, {1, k(1)}});
    CHECK(c == std::vector<Cyc>{k(1), k(1)});

    std::vector<SparseVec> b2{{{0, Cyc::one(F3)}, {1, z3(1)}}};
    auto c2 = solve_in_span(F3, 2, b2, SparseVec{{0, z3(1)}, {1, z3(2)}});
    REQUIRE(c2.size() == 1);
    CHECK(c2[0] == z3(1));

    CHECK_THROWS_AS(solve_in_span(F1, 2, {{{0, k(1)}}}, SparseVec{{1, k(1)}}), outside_span_error);
    // dependent basis rejected
    CHECK_THROWS_AS(SpanSolver(F1, 2, {{{0, k(1)}}, {{0, k(2)}}}), validation_error);
}

TEST_CASE("SpanSolver reproduces combinations on random spans") {
    Rng rng;
    for (int t = 0; t < 10; ++t) {
        long dim = rng.next(3, 7), nb = rng.next(1, 3);
        std::vector<SparseVec> basis;
        for (long i = 0; i < nb; ++i) {
            SparseVec v;
            for (long j = 0; j < dim; ++j)
                if (rng.next(0, 1)) v.emplace_back(j, k(rng.next(-3, 3)));
            v = sv_normalize(std::move(v));
            if (!v.empty()) basis.push_back(v);
        }
        if (basis.empty()) continue;
        std::unique_ptr<SpanSolver> solver;
        try {
            solver = std::make_unique<SpanSolver>(F1, dim, basis);
        } catch (const validation_error&) {
            continue;   // randomly dependent basis
        }
        SparseVec target;
        std::vector<Cyc> want;
        for (const auto& b : basis) {
            Cyc coef = k(rng.next(-2, 2));
            want.push_back(coef);
            target = sv_axpy(target, coef, b);
        }
        auto got = solver->solve(target);
        CHECK(got == want);
    }
}

TEST_CASE("vstack and apply") {
    Mat a = Mat::identity(F1, 2);
    Mat b(F1, 1, 2);
    b.set(0, 0, k(5));
    Mat s = vstack({a, b});
    REQUIRE(s.rows() == 3);
    CHECK(s.at(2, 0) == k(5));
    SparseVec v{{0, k(2)}, {1, k(-1)}};
    auto img = s.apply(v);
    CHECK(sv_get(img, 0, F1) == k(2));
    CHECK(sv_get(img, 1, F1) == k(-1));
    CHECK(sv_get(img, 2, F1) == k(10));
}
