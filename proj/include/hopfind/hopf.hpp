#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "hopfind/matrix.hpp"

namespace hopfind {

/* Delta(a_i) = sum of c * a_j (x) a_k, stored as (j, k, c) triples. */
using CoSparse = std::vector<std::tuple<long, long, Cyc>>;

/* One term of an iterated-comultiplication expansion: basis multi-index + coefficient. */
using MultiTerm = std::pair<std::vector<long>, Cyc>;

/* Product of two basis elements when it is a scalar times a single basis
 * element (group algebras, monomial PBW bases). zero => the product vanishes;
 * otherwise value = sign * zeta^zexp * a_idx. Lets structural checks run on
 * integer exponent arithmetic instead of field elements. */
struct MonoTerm {
    bool zero = false;
    int sign = 1;
    long zexp = 0;
    long idx = 0;
};

/* Internal product/coproduct provider; table-backed for small or loaded
 * algebras, rule-backed for the monomial families where materializing the
 * full multiplication tensor is out of the question. */
class HopfBackend {
public:
    virtual ~HopfBackend() = default;
    virtual SparseVec product(long i, long j) const = 0;
    virtual CoSparse comult(long i) const = 0;
    virtual const MonoTerm* mono_product(long i, long j, MonoTerm& scratch) const {
        (void)i; (void)j; (void)scratch;
        return nullptr;
    }
};

/*
 * A finite-dimensional Hopf algebra by structure constants over Q(zeta_N):
 * unit, multiplication, comultiplication, counit, antipode. Immutable and
 * shared; copies are cheap and thread-safe.
 */
class HopfAlgebra {
public:
    HopfAlgebra(const CycField& f, long dim, std::shared_ptr<const HopfBackend> backend,
                SparseVec unit, SparseVec counit, Mat antipode,
                std::vector<long> generators, std::string name);

    const CycField& field() const { return *impl_->field; }
    long dim() const { return impl_->dim; }
    const std::string& name() const { return impl_->name; }
    const SparseVec& unit() const { return impl_->unit; }
    const SparseVec& counit() const { return impl_->counit; }
    Cyc counit_at(long i) const { return sv_get(impl_->counit, i, *impl_->field); }
    Cyc counit_of(const SparseVec& v) const;
    const Mat& antipode() const { return impl_->antipode; }
    const Mat& antipode_inv() const { return impl_->antipode_inv; }
    Mat antipode_sq() const { return impl_->antipode * impl_->antipode; }

    /* Algebra generating set (basis indices); empty means "use every basis
     * element". Invariance-style conditions are multiplicative, so imposing
     * them on a generating set is sufficient. */
    const std::vector<long>& generators() const { return impl_->generators; }
    std::vector<long> generators_or_all() const;

    SparseVec product(long i, long j) const { return impl_->backend->product(i, j); }
    SparseVec product(const SparseVec& a, const SparseVec& b) const;
    CoSparse comult(long i) const { return impl_->backend->comult(i); }
    const HopfBackend& backend() const { return *impl_->backend; }

    Mat left_mult(long i) const;                  // L_{a_i}
    Mat right_mult(long i) const;                 // R_{a_i}
    Mat left_mult_op(const SparseVec& a) const;   // L_a
    Mat right_mult_op(const SparseVec& a) const;

private:
    struct Impl {
        const CycField* field;
        long dim;
        std::shared_ptr<const HopfBackend> backend;
        SparseVec unit;
        SparseVec counit;
        Mat antipode;
        Mat antipode_inv;
        std::vector<long> generators;
        std::string name;
        Impl(const CycField& f, long d, Mat s, Mat sinv)
            : field(&f), dim(d), antipode(std::move(s)), antipode_inv(std::move(sinv)) {}
    };
    std::shared_ptr<const Impl> impl_;
};

/* ---- axiom verification ------------------------------------------------ */

struct AxiomCheck {
    std::string name;
    bool pass = true;
    long first_failure = -1;   // basis index (or flattened pair/triple index)
    std::string note;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;   // always the eight checks, fixed order
    bool sampled = false;             // true if the O(d^3) checks were sampled
    long triples_checked = 0;
    bool all_pass() const;
};

struct VerifyOptions {
    // full associativity/compatibility scan up to this dimension, sampled above
    long full_scan_dim = 216;
    long sample_triples = 20000;
    unsigned long seed = 0x5eed;
};

AxiomReport verify_hopf_axioms(const HopfAlgebra& h, const VerifyOptions& opts = {});

/* ---- coalgebra utilities ------------------------------------------------ */

// Delta^{(n)}(a_i) expanded over basis multi-indices; n >= 1
std::vector<MultiTerm> iterated_comult_terms(const HopfAlgebra& h, long n, long i);
// Delta^{(n)} as a d^n x d matrix (small algebras)
Mat iterated_comult(const HopfAlgebra& h, long n);
// flat index of a multi-index, first leg most significant
long flat_index(const std::vector<long>& idx, long dim);

/* ---- convolution calculus ----------------------------------------------- */

/* (f * g)(h) = f(h_(1)) g(h_(2)) on endomorphisms of H. */
Mat convolution(const Mat& f, const Mat& g, const HopfAlgebra& h);
// id^{*m}; m = 0 gives the convolution unit u.eps, m < 0 gives S^{*(-m)}
Mat conv_power_of_id(const HopfAlgebra& h, long m);
// Trace(S o id^{*(n-1)}), defined for every integer n
Cyc kmn_indicator(const HopfAlgebra& h, long n);

/* ---- integrals, center, antipode analysis ------------------------------- */

std::vector<SparseVec> left_integrals(const HopfAlgebra& h);
std::vector<SparseVec> right_integrals(const HopfAlgebra& h);
// lambda with lambda(h_(1)) h_(2) = lambda(h) 1 and <lambda, Lambda> = 1
std::vector<Cyc> dual_right_integral(const HopfAlgebra& h, const SparseVec& Lambda);
bool is_semisimple(const HopfAlgebra& h);
std::vector<SparseVec> center_basis(const HopfAlgebra& h);
// c with S^2(Lambda) = c Lambda for a nonzero left integral Lambda
Cyc s2_integral_scalar(const HopfAlgebra& h);

struct InnerOrderOptions {
    long trials = 64;
    long coeff_range = 3;       // sampled coefficients in [-range, range]
    unsigned long seed = 0xabcdef;
};

// smallest m <= limit with S^{2m} inner, certified by an invertible witness;
// nullopt means "unknown within the search budget", never a false negative
std::optional<long> inner_order_of_s2(const HopfAlgebra& h, long limit,
                                      const InnerOrderOptions& opts = {});

} // namespace hopfind
