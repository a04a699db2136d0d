#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hopfind/errors.hpp"
#include "hopfind/rational.hpp"

namespace hopfind {

/*
 * Q(zeta_N) realized as Q[X]/(Phi_N), Phi_N the N-th cyclotomic polynomial.
 * Working mod Phi_N (degree phi(N)) rather than mod X^N - 1 keeps the ring a
 * field, so every nonzero element is invertible. Elements are kept reduced to
 * degree < phi(N) at all times; equality is coefficient-wise.
 *
 * CycField instances are flyweights: one immutable object per N, shared by
 * pointer. Safe to use from several threads.
 */
class CycField {
public:
    static const CycField& get(long order);

    long order() const { return order_; }            // N
    long degree() const { return degree_; }          // phi(N) = deg Phi_N
    const std::vector<Int>& modulus() const { return modulus_; }

    // X^k reduced mod Phi_N, valid for 0 <= k <= max(2*degree-2, N-1).
    // The returned references are immortal: fields live for the process.
    const std::vector<Rat>& xpow(long k) const { return xpow_[k]; }
    const std::vector<Rat>& zero_vec() const { return zero_; }
    const std::vector<Rat>& xneg(long k) const { return xneg_[k]; }
    // (exponent mod N, sign) when the pointer is a +-zeta^k field table
    std::optional<std::pair<long, int>> xpow_exponent(const std::vector<Rat>* p) const {
        auto it = xpow_of_.find(p);
        if (it == xpow_of_.end()) return std::nullopt;
        return it->second;
    }

    // Phi_N as an integer coefficient vector (index = degree), computed by
    // exact division Phi_N = (X^N - 1) / prod_{d | N, d < N} Phi_d
    static std::vector<Int> cyclotomic_polynomial(long order);

private:
    explicit CycField(long order);

    long order_;
    long degree_;
    std::vector<Int> modulus_;
    std::vector<std::vector<Rat>> xpow_;
    std::vector<std::vector<Rat>> xneg_;
    std::vector<Rat> zero_;
    std::unordered_map<const std::vector<Rat>*, std::pair<long, int>> xpow_of_;
};

/*
 * Immutable value; copies are O(1). Field constants (zero, powers of zeta)
 * are raw views into the immortal field tables, costing neither allocation
 * nor reference-count traffic; computed values carry shared ownership.
 */
class Cyc {
public:
    Cyc() : field_(&CycField::get(1)), v_(&field_->zero_vec()) {}   // 0 in Q

    static Cyc zero(const CycField& f) { return Cyc(f, &f.zero_vec()); }
    static Cyc one(const CycField& f) { return Cyc(f, &f.xpow(0)); }
    static Cyc from_rat(const CycField& f, const Rat& q);
    static Cyc from_long(const CycField& f, long v) { return from_rat(f, Rat(v)); }
    // canonical coefficient vector, length phi(N)
    static Cyc from_coeffs(const CycField& f, std::vector<Rat> coeffs);
    // zeta_N^(e mod N), any integer exponent
    static Cyc zeta_pow(const CycField& f, long e) {
        return Cyc(f, &f.xpow(mod_pos(e, f.order())));
    }

    const CycField& field() const { return *field_; }
    const std::vector<Rat>& coeffs() const { return *v_; }

    bool is_zero() const;
    bool is_one() const;
    // degree-0 elements are the rationals inside Q(zeta_N)
    std::optional<Rat> as_rational() const;
    // e with *this == zeta_N^e, if the value is a pure root of unity power
    std::optional<long> as_zeta_power() const;

    Cyc operator-() const;
    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator*(const Cyc& o) const;
    Cyc& operator+=(const Cyc& o) { *this = *this + o; return *this; }
    Cyc& operator-=(const Cyc& o) { *this = *this - o; return *this; }
    Cyc& operator*=(const Cyc& o) { *this = *this * o; return *this; }
    Cyc operator*(const Rat& q) const;

    // multiplicative inverse via the extended Euclidean algorithm on
    // (representative polynomial, Phi_N) over Q
    Cyc inverse() const;

    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    // "3/2 - zeta12^2 + 5*zeta12^3"; "0" for zero
    std::string str() const;

private:
    Cyc(const CycField& f, const std::vector<Rat>* immortal) : field_(&f), v_(immortal) {}
    Cyc(const CycField& f, std::shared_ptr<const std::vector<Rat>> owned)
        : field_(&f), v_(owned.get()), own_(std::move(owned)) {}
    void check_field(const Cyc& o) const;

    const CycField* field_;
    const std::vector<Rat>* v_;
    std::shared_ptr<const std::vector<Rat>> own_;   // null for field constants
};

inline Cyc operator*(const Rat& q, const Cyc& a) { return a * q; }

enum class ArithOp { add, sub, mul };

inline Cyc arith(const Cyc& a, const Cyc& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        default: return a * b;
    }
}

} // namespace hopfind
