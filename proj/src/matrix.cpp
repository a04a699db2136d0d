#include "hopfind/matrix.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace hopfind {

SparseVec sv_axpy(const SparseVec& y, const Cyc& c, const SparseVec& x) {
    if (c.is_zero()) return y;
    SparseVec out;
    out.reserve(y.size() + x.size());
    size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            Cyc v = c * x[j].second;
            if (!v.is_zero()) out.emplace_back(x[j].first, std::move(v));
            ++j;
        } else {
            Cyc v = y[i].second + c * x[j].second;
            if (!v.is_zero()) out.emplace_back(y[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sv_scale(const SparseVec& x, const Cyc& c) {
    SparseVec out;
    if (c.is_zero()) return out;
    out.reserve(x.size());
    for (const auto& [i, v] : x) {
        Cyc w = c * v;
        if (!w.is_zero()) out.emplace_back(i, std::move(w));
    }
    return out;
}

SparseVec sv_normalize(SparseVec x) {
    std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    out.reserve(x.size());
    for (auto& [i, v] : x) {
        if (!out.empty() && out.back().first == i)
            out.back().second += v;
        else
            out.emplace_back(i, std::move(v));
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    }
    return out;
}

Cyc sv_get(const SparseVec& x, long i, const CycField& f) {
    auto it = std::lower_bound(x.begin(), x.end(), i,
                               [](const auto& p, long k) { return p.first < k; });
    if (it != x.end() && it->first == i) return it->second;
    return Cyc::zero(f);
}

Mat Mat::identity(const CycField& f, long n) {
    Mat m(f, n, n);
    for (long i = 0; i < n; ++i) m.r_[i] = {{i, Cyc::one(f)}};
    return m;
}

Mat Mat::from_dense(const CycField& f, long rows, long cols, const std::vector<Cyc>& rowmajor) {
    Mat m(f, rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
            if (!rowmajor[i * cols + j].is_zero()) m.r_[i].emplace_back(j, rowmajor[i * cols + j]);
    return m;
}

Mat Mat::from_triplets(const CycField& f, long rows, long cols,
                       const std::vector<std::tuple<long, long, Cyc>>& ts) {
    Mat m(f, rows, cols);
    for (const auto& [i, j, v] : ts) m.r_[i].emplace_back(j, v);
    for (auto& row : m.r_) row = sv_normalize(std::move(row));
    return m;
}

long Mat::nnz() const {
    long n = 0;
    for (const auto& row : r_) n += static_cast<long>(row.size());
    return n;
}

Cyc Mat::at(long i, long j) const { return sv_get(r_[i], j, *field_); }

void Mat::set(long i, long j, const Cyc& v) {
    auto& row = r_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& p, long k) { return p.first < k; });
    if (it != row.end() && it->first == j) {
        if (v.is_zero()) row.erase(it);
        else it->second = v;
    } else if (!v.is_zero()) {
        row.insert(it, {j, v});
    }
}

std::vector<Cyc> Mat::dense() const {
    std::vector<Cyc> d(rows_ * cols_, Cyc::zero(*field_));
    for (long i = 0; i < rows_; ++i)
        for (const auto& [j, v] : r_[i]) d[i * cols_ + j] = v;
    return d;
}

std::vector<std::tuple<long, long, Cyc>> Mat::triplets() const {
    std::vector<std::tuple<long, long, Cyc>> ts;
    ts.reserve(nnz());
    for (long i = 0; i < rows_; ++i)
        for (const auto& [j, v] : r_[i]) ts.emplace_back(i, j, v);
    return ts;
}

Mat Mat::transpose() const {
    Mat t(*field_, cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (const auto& [j, v] : r_[i]) t.r_[j].emplace_back(i, v);
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    if (field_ != &o.field()) throw field_mismatch_error("matrix product across fields");
    if (cols_ != o.rows_) throw validation_error("matrix product shape mismatch");
    Mat c(*field_, rows_, o.cols_);
    for (long i = 0; i < rows_; ++i) {
        SparseVec acc;
        for (const auto& [k, v] : r_[i]) acc = sv_axpy(acc, v, o.r_[k]);
        c.r_[i] = std::move(acc);
    }
    return c;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw validation_error("matrix sum shape mismatch");
    Mat c(*field_, rows_, cols_);
    Cyc one = Cyc::one(*field_);
    for (long i = 0; i < rows_; ++i) c.r_[i] = sv_axpy(r_[i], one, o.r_[i]);
    return c;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw validation_error("matrix diff shape mismatch");
    Mat c(*field_, rows_, cols_);
    Cyc mone = -Cyc::one(*field_);
    for (long i = 0; i < rows_; ++i) c.r_[i] = sv_axpy(r_[i], mone, o.r_[i]);
    return c;
}

Mat Mat::scaled(const Cyc& c) const {
    Mat m(*field_, rows_, cols_);
    for (long i = 0; i < rows_; ++i) m.r_[i] = sv_scale(r_[i], c);
    return m;
}

bool Mat::operator==(const Mat& o) const {
    return field_ == &o.field() && rows_ == o.rows_ && cols_ == o.cols_ && r_ == o.r_;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (long i = 0; i < rows_; ++i)
        if (!(r_[i].size() == 1 && r_[i][0].first == i && r_[i][0].second.is_one())) return false;
    return true;
}

SparseVec Mat::apply(const SparseVec& v) const {
    SparseVec out;
    for (long i = 0; i < rows_; ++i) {
        // sparse dot of row i with v
        Cyc s = Cyc::zero(*field_);
        size_t a = 0, b = 0;
        const SparseVec& row = r_[i];
        while (a < row.size() && b < v.size()) {
            if (row[a].first < v[b].first) ++a;
            else if (v[b].first < row[a].first) ++b;
            else { s += row[a].second * v[b].second; ++a; ++b; }
        }
        if (!s.is_zero()) out.emplace_back(i, std::move(s));
    }
    return out;
}

Mat vstack(const std::vector<Mat>& blocks) {
    long rows = 0;
    for (const Mat& b : blocks) rows += b.rows();
    Mat m(blocks.front().field(), rows, blocks.front().cols());
    long off = 0;
    for (const Mat& b : blocks) {
        for (long i = 0; i < b.rows(); ++i) m.set_row(off + i, b.row(i));
        off += b.rows();
    }
    return m;
}

namespace {

/*
 * Forward elimination with pivoting on sparsity count: pivot column chosen by
 * smallest live-entry count, pivot row within it by smallest nnz. Produces
 * pivot rows (normalized, mutually reduced afterwards) plus the pivot column
 * set. Deterministic: ties break on the smaller index.
 */
struct Echelon {
    std::vector<SparseVec> pivot_rows;   // mutually reduced, pivot coefficient 1
    std::vector<long> pivot_cols;        // parallel to pivot_rows
};

Echelon eliminate_sparse(const CycField& f, long cols, std::vector<SparseVec> rows) {
    const size_t nrows = rows.size();
    std::vector<bool> live(nrows, true);
    std::vector<std::vector<size_t>> col_rows(cols);   // may hold stale ids
    for (size_t r = 0; r < nrows; ++r)
        for (const auto& [c, v] : rows[r]) col_rows[c].push_back(r);

    auto live_count = [&](long c) {
        auto& lst = col_rows[c];
        lst.erase(std::remove_if(lst.begin(), lst.end(),
                                 [&](size_t r) {
                                     return !live[r] || sv_get(rows[r], c, f).is_zero();
                                 }),
                  lst.end());
        return static_cast<long>(lst.size());
    };

    using Entry = std::pair<long, long>;   // (count, col), lazy
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    for (long c = 0; c < cols; ++c)
        if (!col_rows[c].empty()) heap.emplace(static_cast<long>(col_rows[c].size()), c);

    Echelon e;
    std::vector<bool> is_pivot_col(cols, false);
    while (!heap.empty()) {
        auto [cnt, c] = heap.top();
        heap.pop();
        if (is_pivot_col[c]) continue;
        long actual = live_count(c);
        if (actual == 0) continue;
        if (actual != cnt) { heap.emplace(actual, c); continue; }

        size_t prow = col_rows[c][0];
        for (size_t r : col_rows[c])
            if (rows[r].size() < rows[prow].size() || (rows[r].size() == rows[prow].size() && r < prow))
                prow = r;

        // single-entry pivot rows clear their column with no arithmetic
        SparseVec pivot;
        if (rows[prow].size() == 1)
            pivot = {{c, Cyc::one(f)}};
        else
            pivot = sv_scale(rows[prow], sv_get(rows[prow], c, f).inverse());
        live[prow] = false;
        const bool trivial = pivot.size() == 1;
        for (size_t r : col_rows[c]) {
            if (r == prow || !live[r]) continue;
            if (trivial) {
                auto it = std::lower_bound(rows[r].begin(), rows[r].end(), c,
                                           [](const auto& p, long k) { return p.first < k; });
                if (it != rows[r].end() && it->first == c) rows[r].erase(it);
                continue;
            }
            Cyc coef = sv_get(rows[r], c, f);
            if (coef.is_zero()) continue;
            rows[r] = sv_axpy(rows[r], -coef, pivot);
            for (const auto& [nc, nv] : rows[r]) {
                col_rows[nc].push_back(r);
                if (!is_pivot_col[nc]) heap.emplace(static_cast<long>(col_rows[nc].size()), nc);
            }
        }
        is_pivot_col[c] = true;
        e.pivot_cols.push_back(c);
        e.pivot_rows.push_back(std::move(pivot));
    }

    // mutual reduction: row t may still contain pivot columns chosen after t
    for (long t = static_cast<long>(e.pivot_rows.size()) - 1; t >= 0; --t)
        for (size_t u = t + 1; u < e.pivot_rows.size(); ++u) {
            Cyc coef = sv_get(e.pivot_rows[t], e.pivot_cols[u], f);
            if (!coef.is_zero()) e.pivot_rows[t] = sv_axpy(e.pivot_rows[t], -coef, e.pivot_rows[u]);
        }
    return e;
}

/*
 * Leftmost-pivot Gauss-Jordan: the unique reduced echelon form of the row
 * space, rows ordered by pivot column. Pivot search is limited to columns
 * < pivot_limit; trailing columns ride along (used for augmented solves).
 */
struct Rref {
    std::vector<SparseVec> rows;
    std::vector<long> pivot_cols;
};

Rref rref_leftmost(const CycField& f, long pivot_limit, std::vector<SparseVec> in_rows) {
    std::vector<std::vector<size_t>> bucket(pivot_limit);   // leading col -> row ids
    std::vector<SparseVec> rows = std::move(in_rows);
    auto lead_of = [&](size_t r) -> long {
        if (rows[r].empty()) return -1;
        long c = rows[r][0].first;
        return c < pivot_limit ? c : -1;
    };
    for (size_t r = 0; r < rows.size(); ++r) {
        long c = lead_of(r);
        if (c >= 0) bucket[c].push_back(r);
        // rows whose support lies entirely in the augmented tail are dropped
    }
    Rref out;
    for (long c = 0; c < pivot_limit; ++c) {
        while (!bucket[c].empty()) {
            size_t pr = *std::min_element(bucket[c].begin(), bucket[c].end());
            bucket[c].erase(std::find(bucket[c].begin(), bucket[c].end(), pr));
            SparseVec pivot = sv_scale(rows[pr], rows[pr][0].second.inverse());
            // clear column c from remaining bucket rows
            for (size_t r : bucket[c]) {
                rows[r] = sv_axpy(rows[r], -rows[r][0].second, pivot);
                long nl = lead_of(r);
                if (nl >= 0) bucket[nl].push_back(r);
            }
            bucket[c].clear();
            // clear column c from earlier pivot rows (full reduction)
            for (size_t t = 0; t < out.rows.size(); ++t) {
                Cyc coef = sv_get(out.rows[t], c, f);
                if (!coef.is_zero()) out.rows[t] = sv_axpy(out.rows[t], -coef, pivot);
            }
            out.pivot_cols.push_back(c);
            out.rows.push_back(std::move(pivot));
            break;
        }
    }
    return out;
}

} // namespace

std::vector<SparseVec> kernel_basis(const Mat& A) {
    const CycField& f = A.field();
    std::vector<SparseVec> rows(A.rows());
    for (long i = 0; i < A.rows(); ++i) rows[i] = A.row(i);
    Echelon e = eliminate_sparse(f, A.cols(), std::move(rows));

    std::vector<bool> is_pivot(A.cols(), false);
    for (long c : e.pivot_cols) is_pivot[c] = true;

    std::vector<SparseVec> ker;
    for (long fc = 0; fc < A.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        SparseVec v{{fc, Cyc::one(f)}};
        for (size_t t = 0; t < e.pivot_rows.size(); ++t) {
            Cyc coef = sv_get(e.pivot_rows[t], fc, f);
            if (!coef.is_zero()) v.emplace_back(e.pivot_cols[t], -coef);
        }
        ker.push_back(sv_normalize(std::move(v)));
    }
    if (ker.empty()) return ker;

    // canonicalize: unique reduced echelon basis of the kernel space,
    // leading coefficient of every vector = 1
    Rref canon = rref_leftmost(f, A.cols(), std::move(ker));
    return canon.rows;
}

long rank(const Mat& A) {
    std::vector<SparseVec> rows(A.rows());
    for (long i = 0; i < A.rows(); ++i) rows[i] = A.row(i);
    return static_cast<long>(eliminate_sparse(A.field(), A.cols(), std::move(rows)).pivot_cols.size());
}

Mat inverse(const Mat& A) {
    if (A.rows() != A.cols()) throw validation_error("inverse of non-square matrix");
    const CycField& f = A.field();
    const long n = A.rows();
    std::vector<SparseVec> rows(n);
    for (long i = 0; i < n; ++i) {
        rows[i] = A.row(i);
        rows[i].emplace_back(n + i, Cyc::one(f));
    }
    Rref r = rref_leftmost(f, n, std::move(rows));
    if (static_cast<long>(r.pivot_cols.size()) != n)
        throw singular_matrix_error("matrix is singular");
    Mat inv(f, n, n);
    for (long i = 0; i < n; ++i) {
        SparseVec out;
        for (const auto& [c, v] : r.rows[i])
            if (c >= n) out.emplace_back(c - n, v);
        inv.set_row(i, std::move(out));
    }
    return inv;
}

Mat mat_pow(const Mat& A, long r) {
    if (A.rows() != A.cols()) throw validation_error("power of non-square matrix");
    Mat base = r < 0 ? inverse(A) : A;
    unsigned long e = r < 0 ? static_cast<unsigned long>(-r) : static_cast<unsigned long>(r);
    Mat acc = Mat::identity(A.field(), A.rows());
    while (e) {
        if (e & 1UL) acc = acc * base;
        e >>= 1UL;
        if (e) base = base * base;
    }
    return acc;
}

Cyc trace(const Mat& A) {
    if (A.rows() != A.cols()) throw validation_error("trace of non-square matrix");
    Cyc t = Cyc::zero(A.field());
    for (long i = 0; i < A.rows(); ++i) t += A.at(i, i);
    return t;
}

Mat kron(const Mat& A, const Mat& B) {
    if (&A.field() != &B.field()) throw field_mismatch_error("kron across fields");
    Mat k(A.field(), A.rows() * B.rows(), A.cols() * B.cols());
    for (long i = 0; i < A.rows(); ++i) {
        for (long p = 0; p < B.rows(); ++p) {
            SparseVec row;
            for (const auto& [j, a] : A.row(i))
                for (const auto& [q, b] : B.row(p)) {
                    Cyc v = a * b;
                    if (!v.is_zero()) row.emplace_back(j * B.cols() + q, std::move(v));
                }
            k.set_row(i * B.rows() + p, sv_normalize(std::move(row)));
        }
    }
    return k;
}

SpanSolver::SpanSolver(const CycField& f, long dim, const std::vector<SparseVec>& basis)
    : field_(&f), dim_(dim), nbasis_(static_cast<long>(basis.size())) {
    // augmented rows [basis_i | e_i]; elimination records the transform
    std::vector<SparseVec> rows(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) {
        rows[i] = basis[i];
        rows[i].emplace_back(dim + static_cast<long>(i), Cyc::one(f));
    }
    Rref r = rref_leftmost(f, dim, std::move(rows));
    if (static_cast<long>(r.pivot_cols.size()) != nbasis_)
        throw validation_error("SpanSolver: basis is linearly dependent");
    pivot_cols_ = std::move(r.pivot_cols);
    rref_rows_.resize(nbasis_);
    transform_.assign(nbasis_, std::vector<Cyc>(nbasis_, Cyc::zero(f)));
    for (long i = 0; i < nbasis_; ++i)
        for (const auto& [c, v] : r.rows[i]) {
            if (c < dim) rref_rows_[i].emplace_back(c, v);
            else transform_[i][c - dim] = v;
        }
}

std::vector<Cyc> SpanSolver::solve(const SparseVec& target) const {
    // coefficients against the reduced rows are read off at the pivots
    std::vector<Cyc> cprime(nbasis_, Cyc::zero(*field_));
    for (long i = 0; i < nbasis_; ++i) cprime[i] = sv_get(target, pivot_cols_[i], *field_);
    SparseVec residual = target;
    for (long i = 0; i < nbasis_; ++i)
        if (!cprime[i].is_zero()) residual = sv_axpy(residual, -cprime[i], rref_rows_[i]);
    if (!residual.empty())
        throw outside_span_error("target vector lies outside the spanned subspace");
    std::vector<Cyc> c(nbasis_, Cyc::zero(*field_));
    for (long i = 0; i < nbasis_; ++i) {
        if (cprime[i].is_zero()) continue;
        for (long j = 0; j < nbasis_; ++j) c[j] += cprime[i] * transform_[i][j];
    }
    return c;
}

bool SpanSolver::contains(const SparseVec& target) const {
    SparseVec residual = target;
    for (long i = 0; i < nbasis_; ++i) {
        Cyc cp = sv_get(residual, pivot_cols_[i], *field_);
        if (!cp.is_zero()) residual = sv_axpy(residual, -cp, rref_rows_[i]);
    }
    return residual.empty();
}

std::vector<Cyc> solve_in_span(const CycField& f, long dim,
                               const std::vector<SparseVec>& basis, const SparseVec& target) {
    return SpanSolver(f, dim, basis).solve(target);
}

} // namespace hopfind
