#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include <symres/errors.hpp>
#include <symres/ring.hpp>

namespace symres {

/// Exponent storage. 64-bit with checked arithmetic; overflow throws
/// instead of wrapping.
using Exp = std::int64_t;

inline Exp checked_exp_add(Exp a, Exp b) {
    Exp r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("monomial exponent overflow");
    return r;
}

inline Exp checked_exp_mul(Exp a, Exp b) {
    Exp r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("monomial exponent overflow");
    return r;
}

/// Monomial as an exponent vector over one ring context. Immutable value;
/// the all-zero vector is the unit monomial 1.
class Monomial {
public:
    Monomial(RingPtr ring, std::vector<Exp> exponents)
        : ring_(std::move(ring)), exps_(std::move(exponents)) {
        if (!ring_) throw domain_error("monomial without ring context");
        if (exps_.size() != ring_->size())
            throw domain_error("exponent vector length does not match ring");
        for (Exp e : exps_)
            if (e < 0) throw domain_error("negative exponent in monomial");
    }

    static Monomial unit(RingPtr ring) {
        std::size_t n = ring->size();
        return Monomial(std::move(ring), std::vector<Exp>(n, 0));
    }

    static Monomial variable(RingPtr ring, std::size_t index, Exp exponent = 1) {
        if (index >= ring->size()) throw domain_error("variable index out of range");
        if (exponent < 0) throw domain_error("negative exponent in monomial");
        std::vector<Exp> e(ring->size(), 0);
        e[index] = exponent;
        return Monomial(std::move(ring), std::move(e));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Exp>& exponents() const { return exps_; }
    Exp exponent(std::size_t i) const { return exps_[i]; }

    Exp degree() const {
        Exp d = 0;
        for (Exp e : exps_) d = checked_exp_add(d, e);
        return d;
    }

    bool is_unit() const {
        return std::all_of(exps_.begin(), exps_.end(), [](Exp e) { return e == 0; });
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0) s.push_back(i);
        return s;
    }

    std::size_t support_size() const {
        return static_cast<std::size_t>(
            std::count_if(exps_.begin(), exps_.end(), [](Exp e) { return e > 0; }));
    }

    Monomial pow(Exp k) const {
        if (k < 0) throw domain_error("negative monomial power");
        std::vector<Exp> e(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = checked_exp_mul(exps_[i], k);
        return Monomial(ring_, std::move(e));
    }

    /// Textual form `x^3*y^2*z`; exponent 1 omits `^1`; the unit is `1`.
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += ring_->name(i);
            if (exps_[i] != 1) out += "^" + std::to_string(exps_[i]);
        }
        return out.empty() ? "1" : out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return same_ring(a.ring_, b.ring_) && a.exps_ == b.exps_;
    }

private:
    RingPtr ring_;
    std::vector<Exp> exps_;
};

inline bool divides(const Monomial& a, const Monomial& b) {
    require_same_ring(a.ring(), b.ring());
    for (std::size_t i = 0; i < a.exponents().size(); ++i)
        if (a.exponent(i) > b.exponent(i)) return false;
    return true;
}

/// Divisibility restricted to the given variable indices; the remaining
/// coordinates are ignored. This is divisibility after localizing at the
/// prime generated by `vars`.
inline bool divides_on(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& vars) {
    require_same_ring(a.ring(), b.ring());
    for (std::size_t i : vars)
        if (a.exponent(i) > b.exponent(i)) return false;
    return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Exp> e(a.exponents().size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponent(i), b.exponent(i));
    return Monomial(a.ring(), std::move(e));
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Exp> e(a.exponents().size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exponent(i), b.exponent(i));
    return Monomial(a.ring(), std::move(e));
}

inline Monomial mul(const Monomial& a, const Monomial& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Exp> e(a.exponents().size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = checked_exp_add(a.exponent(i), b.exponent(i));
    return Monomial(a.ring(), std::move(e));
}

/// f / gcd(f, m): clamp-to-zero componentwise difference.
inline Monomial colon_quotient(const Monomial& f, const Monomial& m) {
    require_same_ring(f.ring(), m.ring());
    std::vector<Exp> e(f.exponents().size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max<Exp>(f.exponent(i) - m.exponent(i), 0);
    return Monomial(f.ring(), std::move(e));
}

/// Canonical order for all deterministic output: lower total degree first,
/// then the lexicographically larger exponent vector first, so that within
/// one degree x-heavy monomials precede (x^3, then x*y^2, then y^3).
inline bool canonical_less(const Monomial& a, const Monomial& b) {
    Exp da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() > b.exponents();
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.str(); }

} // namespace symres
