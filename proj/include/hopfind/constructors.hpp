#pragma once

#include "hopfind/hopf.hpp"

namespace hopfind {

/*
 * Finite group by Cayley table. Validation covers the Latin-square property,
 * identity and inverses; associativity is deliberately left to the Hopf axiom
 * verifier so that corrupted tables can be constructed as negative controls.
 */
struct GroupPresentation {
    long order = 0;
    std::vector<std::vector<long>> cayley;   // cayley[i][j] = index of g_i g_j
    long identity = 0;
    std::vector<long> inverse;
    std::vector<long> generators;            // may be empty; computed on demand
    std::string name;

    void validate() const;                   // throws validation_error
    std::vector<long> generating_set() const;
    long power(long g, long e) const;        // g^e, e >= 0
    long centralizer_size(long g) const;
    long conjugacy_class_count() const;
};

// Built-ins with documented element orderings:
//   Z/n   : 0,1,...,n-1 (addition)
//   S3    : permutations of {0,1,2} in lexicographic one-line order
//           [012],[021],[102],[120],[201],[210]; (s.t)(x) = s(t(x))
//   D4    : r^0..r^3, s, sr, sr^2, sr^3 with r^4 = s^2 = 1, s r s = r^-1
//   Q8    : 1, -1, i, -i, j, -j, k, -k
GroupPresentation cyclic_group(long n);
GroupPresentation symmetric_group_s3();
GroupPresentation dihedral_group_d4();
GroupPresentation quaternion_group_q8();
// "Z/6", "S3", "D4", "Q8"
GroupPresentation builtin_group(const std::string& name);

// group algebra kG over Q(zeta_N); Delta(g) = g (x) g, eps = 1, S(g) = g^{-1}
HopfAlgebra group_algebra(const GroupPresentation& g, long cyclotomic_order = 1);

/*
 * The liftings-of-quantum-planes family: dimension N^3 on the monomial basis
 * x^p y^q g^r (lexicographic in (p,q,r)), generated by g, x, y with
 *   g^N = 1, x^N = y^N = 0, gx = w xg, gy = w^{-m} yg, yx = w^m xy,
 *   Delta(x) = x(x)1 + g(x)x, Delta(y) = y(x)1 + g^m(x)y, Delta(g) = g(x)g,
 *   eps(x) = eps(y) = 0, eps(g) = 1,
 *   S(x) = -g^{-1}x, S(y) = -g^{-m}y, S(g) = g^{-1},
 * where w = zeta_N^s is a primitive N-th root of unity.
 */
struct BookHopfParams {
    long N = 2;
    long m = 1;
    long root_exponent = 1;   // s with gcd(s, N) = 1

    void validate() const;    // N >= 2, 0 < m < N, gcd(N,m) = gcd(s,N) = 1
};

HopfAlgebra book_hopf(const BookHopfParams& p);
inline HopfAlgebra book_hopf(long N, long m, long s = 1) { return book_hopf(BookHopfParams{N, m, s}); }

// monomial index helpers for the book family
inline long book_index(long N, long p, long q, long r) { return (p * N + q) * N + r; }
struct BookMonomial { long p, q, r; };
inline BookMonomial book_monomial(long N, long idx) {
    return {idx / (N * N), (idx / N) % N, idx % N};
}

/* Sparse operator bundle for the generators g, x, y: left multiplication,
 * right multiplication and adjoint action h |> a = h_(1) a S(h_(2)), computed
 * from the structure constants. The adjoint operators have at most two
 * nonzero entries per column, which keeps the dimension-N^3 solves cheap. */
struct GeneratorOps {
    long index;        // basis index of the generator
    Mat left;
    Mat right;
    Mat adjoint;
};

std::vector<GeneratorOps> generator_bundle(const HopfAlgebra& h);

} // namespace hopfind
