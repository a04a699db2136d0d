#include "hopfind/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace hopfind {

namespace {

// quotient of exact division a / b over Z, highest-index coefficient = leading
std::vector<Int> poly_div_exact(std::vector<Int> a, const std::vector<Int>& b) {
    std::vector<Int> q(a.size() - b.size() + 1);
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        Int& lead = a[i + b.size() - 1];
        if (lead == 0) { q[i] = 0; continue; }
        q[i] = lead / b.back();
        for (size_t j = 0; j < b.size(); ++j)
            a[i + j] -= q[i] * b[j];
    }
    return q;
}

} // namespace

std::vector<Int> CycField::cyclotomic_polynomial(long order) {
    if (order < 1) throw validation_error("cyclotomic_polynomial: order must be >= 1");
    static std::mutex mu;
    static std::map<long, std::vector<Int>> memo;
    std::lock_guard<std::mutex> lock(mu);

    // iterative over divisors so the memo fills bottom-up
    std::vector<long> divs;
    for (long d = 1; d <= order; ++d)
        if (order % d == 0) divs.push_back(d);
    for (long d : divs) {
        if (memo.count(d)) continue;
        std::vector<Int> xn(d + 1);
        xn[0] = -1;
        xn[d] = 1;
        std::vector<Int> denom{1};   // prod of Phi_e, e | d, e < d
        for (long e : divs) {
            if (e >= d || d % e != 0) continue;
            const std::vector<Int>& phe = memo.at(e);
            std::vector<Int> prod(denom.size() + phe.size() - 1);
            for (size_t i = 0; i < denom.size(); ++i)
                for (size_t j = 0; j < phe.size(); ++j)
                    prod[i + j] += denom[i] * phe[j];
            denom = std::move(prod);
        }
        memo[d] = denom.size() == 1 ? xn : poly_div_exact(std::move(xn), denom);
    }
    return memo.at(order);
}

CycField::CycField(long order) : order_(order) {
    modulus_ = cyclotomic_polynomial(order);
    degree_ = static_cast<long>(modulus_.size()) - 1;
    zero_.assign(degree_, Rat(0));
    long top = std::max(2 * degree_ - 2, order_ - 1);
    xpow_.resize(top + 1);
    std::vector<Rat> cur(degree_);
    if (degree_ > 0) cur[0] = 1;
    xpow_[0] = cur;
    for (long k = 1; k <= top; ++k) {
        // cur <- X * cur mod Phi
        Rat carry = degree_ > 0 ? cur[degree_ - 1] : Rat(0);
        for (long i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        if (degree_ > 0) cur[0] = 0;
        if (carry != 0)
            for (long i = 0; i < degree_; ++i)
                cur[i] -= carry * Rat(modulus_[i]);
        xpow_[k] = cur;
    }
    xneg_.resize(top + 1);
    for (long k = 0; k <= top; ++k) {
        std::vector<Rat> neg = xpow_[k];
        for (Rat& q : neg) q = -q;
        xneg_[k] = std::move(neg);
    }
    for (long k = 0; k <= top; ++k) {
        xpow_of_.emplace(&xpow_[k], std::make_pair(mod_pos(k, order_), 1));
        xpow_of_.emplace(&xneg_[k], std::make_pair(mod_pos(k, order_), -1));
    }
}

const CycField& CycField::get(long order) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<CycField>> fields;
    std::lock_guard<std::mutex> lock(mu);
    auto it = fields.find(order);
    if (it == fields.end())
        it = fields.emplace(order, std::unique_ptr<CycField>(new CycField(order))).first;
    return *it->second;
}

void Cyc::check_field(const Cyc& o) const {
    if (field_ != o.field_)
        throw field_mismatch_error("cyclotomic orders differ: " + std::to_string(field_->order()) +
                                   " vs " + std::to_string(o.field_->order()));
}

Cyc Cyc::from_rat(const CycField& f, const Rat& q) {
    if (q == 0) return zero(f);
    if (q == 1) return one(f);
    std::vector<Rat> c(f.degree());
    if (f.degree() > 0) c[0] = q;
    return Cyc(f, std::make_shared<const std::vector<Rat>>(std::move(c)));
}

Cyc Cyc::from_coeffs(const CycField& f, std::vector<Rat> coeffs) {
    if (static_cast<long>(coeffs.size()) != f.degree())
        throw validation_error("coefficient vector length must equal phi(N)");
    return Cyc(f, std::make_shared<const std::vector<Rat>>(std::move(coeffs)));
}

bool Cyc::is_zero() const {
    if (v_ == &field_->zero_vec()) return true;
    return std::all_of(v_->begin(), v_->end(), [](const Rat& q) { return q == 0; });
}

bool Cyc::is_one() const {
    if (v_ == &field_->xpow(0)) return true;
    const std::vector<Rat>& c = *v_;
    if (c.empty() || c[0] != 1) return false;
    return std::all_of(c.begin() + 1, c.end(), [](const Rat& q) { return q == 0; });
}

std::optional<Rat> Cyc::as_rational() const {
    const std::vector<Rat>& c = *v_;
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return std::nullopt;
    return c.empty() ? Rat(0) : c[0];
}

std::optional<long> Cyc::as_zeta_power() const {
    for (long e = 0; e < field_->order(); ++e) {
        if (v_ == &field_->xpow(e)) return e;
        if (*v_ == field_->xpow(e)) return e;
    }
    return std::nullopt;
}

Cyc Cyc::operator-() const {
    if (auto es = field_->xpow_exponent(v_)) {
        auto [e, sign] = *es;
        return Cyc(*field_, sign > 0 ? &field_->xneg(e) : &field_->xpow(e));
    }
    std::vector<Rat> c = *v_;
    for (Rat& q : c) q = -q;
    return Cyc(*field_, std::make_shared<const std::vector<Rat>>(std::move(c)));
}

Cyc Cyc::operator+(const Cyc& o) const {
    check_field(o);
    std::vector<Rat> c = *v_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += (*o.v_)[i];
    return Cyc(*field_, std::make_shared<const std::vector<Rat>>(std::move(c)));
}

Cyc Cyc::operator-(const Cyc& o) const {
    check_field(o);
    std::vector<Rat> c = *v_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= (*o.v_)[i];
    return Cyc(*field_, std::make_shared<const std::vector<Rat>>(std::move(c)));
}

Cyc Cyc::operator*(const Cyc& o) const {
    check_field(o);
    // roots of unity multiply by exponent addition, with no allocation
    if (auto ea = field_->xpow_exponent(v_)) {
        if (auto eb = field_->xpow_exponent(o.v_)) {
            long e = mod_pos(ea->first + eb->first, field_->order());
            return Cyc(*field_, ea->second * eb->second > 0 ? &field_->xpow(e) : &field_->xneg(e));
        }
    }
    const long deg = field_->degree();
    const std::vector<Rat>& a = *v_;
    const std::vector<Rat>& b = *o.v_;
    long na = 0, nb = 0;
    for (long i = 0; i < deg; ++i) na += a[i] != 0;
    for (long j = 0; j < deg; ++j) nb += b[j] != 0;
    if (na == 0 || nb == 0) return zero(*field_);
    std::vector<Rat> out(deg);
    // sparse path: most scalars in play are short (powers of zeta, 1 - zeta^e)
    if (na * nb <= 2 * deg) {
        for (long i = 0; i < deg; ++i) {
            if (a[i] == 0) continue;
            for (long j = 0; j < deg; ++j) {
                if (b[j] == 0) continue;
                Rat p = a[i] * b[j];
                long k = i + j;
                if (k < deg) {
                    out[k] += p;
                } else {
                    const std::vector<Rat>& red = field_->xpow(k);
                    for (long t = 0; t < deg; ++t)
                        if (red[t] != 0) out[t] += p * red[t];
                }
            }
        }
        return Cyc(*field_, std::make_shared<const std::vector<Rat>>(std::move(out)));
    }
    std::vector<Rat> prod(2 * deg - 1);
    for (long i = 0; i < deg; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < deg; ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    for (long k = 0; k < static_cast<long>(prod.size()); ++k) {
        if (prod[k] == 0) continue;
        if (k < deg) {
            out[k] += prod[k];
        } else {
            const std::vector<Rat>& red = field_->xpow(k);
            for (long i = 0; i < deg; ++i)
                if (red[i] != 0) out[i] += prod[k] * red[i];
        }
    }
    return Cyc(*field_, std::make_shared<const std::vector<Rat>>(std::move(out)));
}

Cyc Cyc::operator*(const Rat& q) const {
    if (q == 0) return zero(*field_);
    if (q == 1) return *this;
    std::vector<Rat> c = *v_;
    for (Rat& v : c) v *= q;
    return Cyc(*field_, std::make_shared<const std::vector<Rat>>(std::move(c)));
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw division_by_zero_error("inverse of zero cyclotomic element");
    // unit fast paths: +-zeta^e inverts to +-zeta^{-e}
    if (auto es = field_->xpow_exponent(v_)) {
        auto [e, sign] = *es;
        long einv = mod_pos(-e, field_->order());
        return Cyc(*field_, sign > 0 ? &field_->xpow(einv) : &field_->xneg(einv));
    }
    if (auto e = as_zeta_power()) return zeta_pow(*field_, -*e);
    {
        Cyc neg = -*this;
        if (auto e = neg.as_zeta_power()) return -zeta_pow(*field_, -*e);
    }
    const long deg = field_->degree();
    // r0 = Phi_N, r1 = this; Bezout coefficients tracked for r1 only
    std::vector<Rat> r0(deg + 1), r1(v_->begin(), v_->end()), t0(deg + 1), t1(deg + 1);
    r1.resize(deg + 1);
    for (long i = 0; i <= deg; ++i) r0[i] = Rat(field_->modulus()[i]);
    t1[0] = 1;
    auto degree_of = [](const std::vector<Rat>& p) {
        for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1L;
    };
    while (true) {
        long d1 = degree_of(r1);
        if (d1 < 0)
            throw std::logic_error("gcd(a, Phi_N) degenerate; modulus not irreducible?");
        if (d1 == 0) break;   // r1 a nonzero constant: gcd reached
        long d0 = degree_of(r0);
        // r0 <- r0 mod r1, same combination applied to t0
        while (d0 >= d1) {
            Rat f = r0[d0] / r1[d1];
            for (long i = 0; i <= d1; ++i) r0[d0 - d1 + i] -= f * r1[i];
            // t0 -= f * X^(d0-d1) * t1
            for (long i = 0; i + d0 - d1 <= deg; ++i)
                t0[i + d0 - d1] -= f * t1[i];
            d0 = degree_of(r0);
            if (d0 < 0) break;
        }
        std::swap(r0, r1);
        std::swap(t0, t1);
    }
    Rat g = r1[0];
    std::vector<Rat> inv(deg);
    for (long i = 0; i < deg; ++i) inv[i] = t1[i] / g;
    return Cyc(*field_, std::make_shared<const std::vector<Rat>>(std::move(inv)));
}

bool Cyc::operator==(const Cyc& o) const {
    if (field_ != o.field_) return false;
    if (v_ == o.v_) return true;
    return *v_ == *o.v_;
}

std::string Cyc::str() const {
    std::ostringstream os;
    const std::vector<Rat>& c = *v_;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Rat v = c[i];
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (i == 0) {
            os << to_string(v);
        } else {
            if (v != 1) os << to_string(v) << "*";
            os << "zeta" << field_->order();
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace hopfind
