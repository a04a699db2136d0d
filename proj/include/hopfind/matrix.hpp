#pragma once

#include <tuple>
#include <vector>

#include "hopfind/cyclotomic.hpp"

namespace hopfind {

/* Sparse vector: (index, value) pairs, sorted by index, values nonzero. */
using SparseVec = std::vector<std::pair<long, Cyc>>;

// y += c * x, both sorted-sparse
SparseVec sv_axpy(const SparseVec& y, const Cyc& c, const SparseVec& x);
SparseVec sv_scale(const SparseVec& x, const Cyc& c);
// sort by index, combine duplicates, drop zeros
SparseVec sv_normalize(SparseVec x);
Cyc sv_get(const SparseVec& x, long i, const CycField& f);
inline SparseVec sv_unit(long i, const Cyc& c) { return c.is_zero() ? SparseVec{} : SparseVec{{i, c}}; }

/*
 * Exact matrix over one cyclotomic field. Storage is sparse rows; dense
 * round-trips are provided and every operation gives identical results on
 * either form. Elimination-based operations (kernel, rank, inverse) use
 * rational Gaussian elimination with pivoting on sparsity count, which keeps
 * the monomial-shaped operators of the large solves fill-free.
 */
class Mat {
public:
    Mat(const CycField& f, long rows, long cols)
        : field_(&f), rows_(rows), cols_(cols), r_(rows) {}

    static Mat identity(const CycField& f, long n);
    static Mat from_dense(const CycField& f, long rows, long cols, const std::vector<Cyc>& rowmajor);
    static Mat from_triplets(const CycField& f, long rows, long cols,
                             const std::vector<std::tuple<long, long, Cyc>>& ts);

    const CycField& field() const { return *field_; }
    long rows() const { return rows_; }
    long cols() const { return cols_; }
    long nnz() const;

    Cyc at(long i, long j) const;
    void set(long i, long j, const Cyc& v);
    const SparseVec& row(long i) const { return r_[i]; }
    void set_row(long i, SparseVec v) { r_[i] = std::move(v); }

    std::vector<Cyc> dense() const;                       // row-major
    std::vector<std::tuple<long, long, Cyc>> triplets() const;

    Mat transpose() const;
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Cyc& c) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_identity() const;

    SparseVec apply(const SparseVec& v) const;            // A * v

private:
    const CycField* field_;
    long rows_, cols_;
    std::vector<SparseVec> r_;
};

// stack blocks vertically (equal column counts)
Mat vstack(const std::vector<Mat>& blocks);

/*
 * Basis of the right kernel {v : Av = 0} in canonical reduced echelon form:
 * vectors ordered by leading index, each with leading coefficient 1. Empty
 * iff A is injective.
 */
std::vector<SparseVec> kernel_basis(const Mat& A);

long rank(const Mat& A);
Mat inverse(const Mat& A);                  // throws singular_matrix_error
Mat mat_pow(const Mat& A, long r);          // r < 0 needs A invertible
Cyc trace(const Mat& A);
// (A kron B)[i*rB+k][j*cB+l] = A[i][j] * B[k][l]
Mat kron(const Mat& A, const Mat& B);

/*
 * Repeated coordinate solves against one fixed independent basis: the basis
 * is eliminated once, each solve is then a cheap substitution. Used to express
 * operator images inside an invariant subspace.
 */
class SpanSolver {
public:
    SpanSolver(const CycField& f, long dim, const std::vector<SparseVec>& basis);

    long dim() const { return dim_; }
    long size() const { return nbasis_; }
    bool contains(const SparseVec& target) const;
    // c with sum_i c_i basis_i = target; throws outside_span_error
    std::vector<Cyc> solve(const SparseVec& target) const;

private:
    const CycField* field_;
    long dim_;
    long nbasis_;
    std::vector<SparseVec> rref_rows_;      // reduced rows spanning the basis
    std::vector<long> pivot_cols_;
    std::vector<std::vector<Cyc>> transform_;  // rref_rows_[i] = sum_j transform_[i][j] * basis_j
};

// one-shot wrapper around SpanSolver
std::vector<Cyc> solve_in_span(const CycField& f, long dim,
                               const std::vector<SparseVec>& basis, const SparseVec& target);

} // namespace hopfind
