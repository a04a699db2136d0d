#pragma once

#include "hopfind/constructors.hpp"
#include "hopfind/module.hpp"

namespace hopfind {

// (H_ad, phi) with h |> a = h_(1) a S(h_(2)) and phi = matrix of S^2;
// its invariants are exactly the center of H
PivotalModule adjoint_pivotal(const HopfAlgebra& h);

enum class AdjointMethod {
    fast,        // n = 1 only: E = S^{-2} restricted to the center
    general,     // tensor-power invariant solve
};

/*
 * nu_{n,r} of the adjoint object, n >= 1. The fast path solves for the center
 * with the generator operators and traces powers of S^{-2} on it; the general
 * path runs the full rotate-and-twist machinery on (H_ad^{(x)n})^H.
 */
IndicatorReport nu_adjoint(const HopfAlgebra& h, long n, long r,
                           AdjointMethod method = AdjointMethod::fast,
                           const NuOptions& opts = {});

/* chi_ad two ways: the integral formula
 *   <chi_ad, h> = <lambda, h_(1) Lambda_(1) S(h_(2)) S(Lambda_(2))>
 * (semisimple only) and the direct trace of the adjoint action. The two agree
 * for semisimple algebras in characteristic zero. */
std::vector<Cyc> chi_ad_integral(const HopfAlgebra& h);    // throws not_semisimple_error
std::vector<Cyc> chi_ad_trace(const HopfAlgebra& h);

/*
 * Semisimple closed form: with d = gcd(n, r) and the index pattern
 * i_{a,b} = a + b r + 1 (mod n), the indicator is the product over the d
 * cyclic blocks of chi_ad applied to the corresponding Sweedler-leg products
 * of the normalized integral.
 */
Cyc semisimple_nu(const HopfAlgebra& h, long n, long r);

// (1/|G|) sum_g |C_G(g^{n/d})|^d, d = gcd(n, r); pure counting, no linear algebra
Rat group_nu(const GroupPresentation& g, long n, long r);

// exact multiplicative order of the E matrix of the adjoint object at tensor
// power n, searched up to limit; nullopt if not reached
std::optional<long> e_ad_order(const HopfAlgebra& h, long n, long limit);

// gcd(n, r) with gcd(n, 0) = n
inline long block_gcd(long n, long r) { return r == 0 ? n : gcd_long(n, r); }

} // namespace hopfind
