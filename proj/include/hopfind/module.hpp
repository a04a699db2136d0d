#pragma once

#include "hopfind/hopf.hpp"

namespace hopfind {

class ActionProvider {
public:
    virtual ~ActionProvider() = default;
    virtual Mat action(long i) const = 0;   // matrix of a_i on the module
};

/*
 * Left H-module: one action matrix per basis element of the parent algebra,
 * produced on demand. Invariance-type solves only touch a generating set of
 * the parent, so large modules never materialize all actions.
 */
class HModule {
public:
    HModule(HopfAlgebra parent, long dim, std::shared_ptr<const ActionProvider> provider)
        : parent_(std::move(parent)), dim_(dim), provider_(std::move(provider)) {}

    const HopfAlgebra& parent() const { return parent_; }
    long dim() const { return dim_; }
    Mat action(long i) const { return provider_->action(i); }
    Mat action_of(const SparseVec& a) const;

private:
    HopfAlgebra parent_;
    long dim_;
    std::shared_ptr<const ActionProvider> provider_;
};

HModule module_from_actions(const HopfAlgebra& h, std::vector<Mat> actions);
// V* with action rho(S(h))^T; applying it twice gives rho(S^2(h))
HModule dual_module(const HModule& v);
// V^{(x)n}, action through Delta^{(n)}
HModule tensor_power(const HModule& v, long n);
// regular module: H acting on itself by left multiplication
HModule regular_module(const HopfAlgebra& h);
// adjoint module: h |> a = h_(1) a S(h_(2))
HModule adjoint_module(const HopfAlgebra& h);

// module law check (rho(1) = I and rho(a_i)rho(a_j) = rho(a_i a_j)); small dims
bool verify_module(const HModule& v);

// basis of {w : rho(h) w = eps(h) w} = Hom_H(k, V) in coordinates
std::vector<SparseVec> invariants(const HModule& v);

// basis of {f : f rho_V(h) = rho_W(h) f}
std::vector<Mat> hom_space(const HModule& v, const HModule& w);

/*
 * Pivotal pair (V, phi): phi invertible with phi rho(h) = rho(S^2 h) phi,
 * i.e. an H-isomorphism V -> V** in the canonical double-dual coordinates.
 */
struct PivotalModule {
    HModule module;
    Mat phi;
};

// validates invertibility and the intertwining law (throws validation_error)
PivotalModule make_pivotal(HModule module, Mat phi);
// dual pivotal object (V*, inverse transpose of phi)
PivotalModule dual_pivotal(const PivotalModule& p);
// regular pivotal object: regular module with phi = matrix of S^2
PivotalModule regular_pivotal(const HopfAlgebra& h);

/* search for an invertible element of Hom(V, V**): basis elements first, then
 * small-integer combinations (deterministic seeded budget) */
struct PivotalSearchOptions {
    long trials = 64;
    long coeff_range = 3;
    unsigned long seed = 0x9142;
};
std::optional<PivotalModule> find_pivotal(const HModule& v, const PivotalSearchOptions& opts = {});

struct IndicatorReport {
    Cyc value;
    long n = 0;
    long r = 0;
    long invariant_dim = 0;                  // dim of the invariant space used
    std::optional<long> e_matrix_order;      // exact order of E, when searched
    std::string method;
};

struct NuOptions {
    long order_search_limit = 0;   // > 0: search the multiplicative order of E
};

/*
 * nu_{n,r}(V, phi) = Trace(E^r), E the rotate-and-twist operator on the
 * invariants of V^{(x)n} with twist phi^{-1}. n = 0 uses the pivotal
 * dimensions (ldim^r for r >= 0, rdim^{-r} for r < 0); n < 0 reduces to
 * nu_{-n,-r} of the dual pivotal object.
 */
IndicatorReport nu(const PivotalModule& p, long n, long r, const NuOptions& opts = {});

/* Matrix of the rotate-and-twist operator E on a given invariant basis of
 * V^{(x)n}; twist = phi^{-1}. Exposed for the fast adjoint path and order
 * searches. */
Mat indicator_e_on_basis(const CycField& f, const std::vector<SparseVec>& basis,
                         long module_dim, long n, const Mat& phi);

Cyc left_pivotal_dim(const PivotalModule& p);    // trace(phi^{-1})
Cyc right_pivotal_dim(const PivotalModule& p);   // trace(phi)

// mu_n(V) = nu_{n,1}(V, phi) * nu_{0,-1}(V, phi); phi-independent
Cyc mu_n(const HModule& v, long n);

// trace of the map induced by the antipode on H / Ann(V)
Cyc jedwab_mu(const HModule& v);

} // namespace hopfind
