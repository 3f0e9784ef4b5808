#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <symres/monomial.hpp>

namespace symres {

/// Monomial ideal in canonical form: the unique minimal generating set,
/// sorted by the canonical monomial order, no duplicates. Equality of
/// ideals is therefore equality of generator lists.
///
/// The zero ideal has an empty generator list; the unit ideal is (1).
/// Values are immutable and safe to share across threads.
class MonomialIdeal {
public:
    static MonomialIdeal zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}); }

    static MonomialIdeal unit_ideal(RingPtr ring) {
        Monomial one = Monomial::unit(ring);
        return MonomialIdeal(std::move(ring), {std::move(one)});
    }

    /// Canonical constructor: drops every generator divisible by another,
    /// sorts, removes duplicates. Idempotent.
    static MonomialIdeal make(RingPtr ring, std::vector<Monomial> gens) {
        for (const Monomial& g : gens) require_same_ring(ring, g.ring());
        std::sort(gens.begin(), gens.end(),
                  [](const Monomial& a, const Monomial& b) { return canonical_less(a, b); });
        gens.erase(std::unique(gens.begin(), gens.end(),
                               [](const Monomial& a, const Monomial& b) {
                                   return a.exponents() == b.exponents();
                               }),
                   gens.end());
        // A strict divisor has strictly smaller degree, so it precedes its
        // multiples in the sorted list; one forward pass keeps exactly the
        // minimal generators.
        std::vector<Monomial> minimal;
        minimal.reserve(gens.size());
        for (Monomial& g : gens) {
            bool covered = false;
            for (const Monomial& kept : minimal) {
                if (divides(kept, g)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) minimal.push_back(std::move(g));
        }
        return MonomialIdeal(std::move(ring), std::move(minimal));
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
    bool is_proper() const { return !is_unit(); }

    /// Membership: a monomial lies in the ideal iff some generator divides it.
    bool contains(const Monomial& m) const {
        require_same_ring(ring_, m.ring());
        for (const Monomial& g : gens_)
            if (divides(g, m)) return true;
        return false;
    }

    bool contains(const MonomialIdeal& other) const {
        require_same_ring(ring_, other.ring_);
        return std::all_of(other.gens_.begin(), other.gens_.end(),
                           [&](const Monomial& g) { return contains(g); });
    }

    /// Ideal literal form `(x^3, x*y^2, y^3*z)`; the zero ideal prints `(0)`.
    std::string str() const {
        if (gens_.empty()) return "(0)";
        std::string out = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) out += ", ";
            out += gens_[i].str();
        }
        return out + ")";
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        if (!same_ring(a.ring_, b.ring_)) return false;
        if (a.gens_.size() != b.gens_.size()) return false;
        for (std::size_t i = 0; i < a.gens_.size(); ++i)
            if (a.gens_[i].exponents() != b.gens_[i].exponents()) return false;
        return true;
    }

private:
    MonomialIdeal(RingPtr ring, std::vector<Monomial> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)) {}

    RingPtr ring_;
    std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens) {
    return MonomialIdeal::make(std::move(ring), std::move(gens));
}

inline MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal::make(a.ring(), std::move(gens));
}

inline MonomialIdeal mul(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Monomial& f : a.generators())
        for (const Monomial& g : b.generators()) gens.push_back(mul(f, g));
    return MonomialIdeal::make(a.ring(), std::move(gens));
}

inline MonomialIdeal mul(const MonomialIdeal& a, const Monomial& m) {
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size());
    for (const Monomial& f : a.generators()) gens.push_back(mul(f, m));
    return MonomialIdeal::make(a.ring(), std::move(gens));
}

/// I^n with minimalization after every multiplication stage, which keeps
/// intermediate generator counts small. power(I, 0) is the unit ideal.
inline MonomialIdeal power(const MonomialIdeal& a, long n) {
    if (n < 0) throw domain_error("negative ideal power");
    MonomialIdeal result = MonomialIdeal::unit_ideal(a.ring());
    for (long i = 0; i < n; ++i) result = mul(result, a);
    return result;
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Monomial& f : a.generators())
        for (const Monomial& g : b.generators()) gens.push_back(lcm(f, g));
    return MonomialIdeal::make(a.ring(), std::move(gens));
}

/// I : (m) = ({ f / gcd(f, m) : f generator of I }).
inline MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m) {
    require_same_ring(a.ring(), m.ring());
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size());
    for (const Monomial& f : a.generators()) gens.push_back(colon_quotient(f, m));
    return MonomialIdeal::make(a.ring(), std::move(gens));
}

/// I : J = intersection of I : (g) over the generators g of J.
inline MonomialIdeal colon_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a.ring(), b.ring());
    if (b.is_zero()) throw domain_error("colon by the zero ideal");
    bool first = true;
    MonomialIdeal result = MonomialIdeal::zero(a.ring());
    for (const Monomial& g : b.generators()) {
        MonomialIdeal term = colon(a, g);
        result = first ? term : intersect(result, term);
        first = false;
    }
    return result;
}

/// Saturation of I by the product w of the chosen variables: iterate
/// I <- I : (w) to the fixpoint. Each step strictly drops the positive
/// exponents of the chosen variables, so the fixpoint is reached within
/// 1 + (largest generator exponent) rounds; exceeding that bound is a bug.
inline MonomialIdeal saturate(const MonomialIdeal& a, const std::vector<std::size_t>& vars) {
    if (vars.empty()) throw domain_error("saturation needs a non-empty variable set");
    for (std::size_t v : vars)
        if (v >= a.ring()->size()) throw domain_error("saturation variable index out of range");
    if (a.is_zero()) return a;

    std::vector<Exp> we(a.ring()->size(), 0);
    for (std::size_t v : vars) we[v] = 1;
    Monomial w(a.ring(), std::move(we));

    Exp max_exp = 0;
    for (const Monomial& g : a.generators())
        for (Exp e : g.exponents()) max_exp = std::max(max_exp, e);

    MonomialIdeal current = a;
    for (Exp round = 0; round <= max_exp; ++round) {
        MonomialIdeal next = colon(current, w);
        if (next == current) return current;
        current = std::move(next);
    }
    if (colon(current, w) == current) return current;
    throw error("saturation failed to stabilize within its exponent bound");
}

/// Radical: minimalized squarefree supports of the generators.
inline MonomialIdeal radical(const MonomialIdeal& a) {
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size());
    for (const Monomial& g : a.generators()) {
        std::vector<Exp> e(g.exponents().size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = g.exponent(i) > 0 ? 1 : 0;
        gens.emplace_back(a.ring(), std::move(e));
    }
    return MonomialIdeal::make(a.ring(), std::move(gens));
}

/// Rename-preserving embedding into a larger ring: every variable of the
/// source ring must exist (by name) in the target ring.
inline Monomial embed(const Monomial& m, const RingPtr& target) {
    std::vector<Exp> e(target->size(), 0);
    for (std::size_t i = 0; i < m.ring()->size(); ++i) {
        if (m.exponent(i) == 0) continue;
        auto j = target->index_of(m.ring()->name(i));
        if (!j) throw ring_mismatch_error("variable '" + m.ring()->name(i) +
                                          "' does not exist in the target ring");
        e[*j] = m.exponent(i);
    }
    return Monomial(target, std::move(e));
}

inline MonomialIdeal embed(const MonomialIdeal& a, const RingPtr& target) {
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size());
    for (const Monomial& g : a.generators()) gens.push_back(embed(g, target));
    return MonomialIdeal::make(target, std::move(gens));
}

inline MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) { return add(a, b); }
inline MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) { return mul(a, b); }

/// Deterministic order on ideals of one ring (generator lists compared
/// monomial by monomial); used for sorting decomposition output.
inline bool canonical_less(const MonomialIdeal& a, const MonomialIdeal& b) {
    const auto& ga = a.generators();
    const auto& gb = b.generators();
    for (std::size_t i = 0; i < ga.size() && i < gb.size(); ++i) {
        if (canonical_less(ga[i], gb[i])) return true;
        if (canonical_less(gb[i], ga[i])) return false;
    }
    return ga.size() < gb.size();
}

/// Value key for memoization across rings.
using IdealKey = std::pair<std::vector<std::string>, std::vector<std::vector<Exp>>>;

inline IdealKey ideal_key(const MonomialIdeal& a) {
    IdealKey key;
    key.first = a.ring()->names();
    key.second.reserve(a.generators().size());
    for (const Monomial& g : a.generators()) key.second.push_back(g.exponents());
    return key;
}

inline std::ostream& operator<<(std::ostream& os, const MonomialIdeal& a) { return os << a.str(); }

} // namespace symres
