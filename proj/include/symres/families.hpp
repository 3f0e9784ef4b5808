#pragma once

#include <array>
#include <string>
#include <vector>

#include <symres/ideal.hpp>

namespace symres {

/// The three-generator family (x^{2d+1}, x^{2d-1} y^2, y^{2d+1} z) in a
/// fresh three-variable ring.
inline MonomialIdeal family_F(long d, std::array<std::string, 3> names = {"x", "y", "z"}) {
    if (d < 1) throw domain_error("family F needs d >= 1");
    RingPtr ring = make_ring({names[0], names[1], names[2]});
    Exp e = static_cast<Exp>(d);
    std::vector<Monomial> gens{
        Monomial(ring, {2 * e + 1, 0, 0}),
        Monomial(ring, {2 * e - 1, 2, 0}),
        Monomial(ring, {0, 2 * e + 1, 1}),
    };
    return MonomialIdeal::make(ring, std::move(gens));
}

/// Star configuration ideal I_{m,d}: all squarefree monomials of degree
/// d-m+1 in d variables x1..xd. Equals the intersection of the primes on
/// every m-element variable subset.
inline MonomialIdeal star_ideal(long m, long d) {
    if (m < 1 || m > d) throw domain_error("star ideal needs 1 <= m <= d");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(d));
    for (long i = 1; i <= d; ++i) names.push_back("x" + std::to_string(i));
    RingPtr ring = make_ring(std::move(names));

    long degree = d - m + 1;
    std::vector<Monomial> gens;
    std::vector<std::size_t> pick(static_cast<std::size_t>(degree));
    auto rec = [&](auto&& self, std::size_t slot, std::size_t from) -> void {
        if (slot == pick.size()) {
            std::vector<Exp> e(static_cast<std::size_t>(d), 0);
            for (std::size_t v : pick) e[v] = 1;
            gens.emplace_back(ring, std::move(e));
            return;
        }
        for (std::size_t v = from; v < static_cast<std::size_t>(d); ++v) {
            pick[slot] = v;
            self(self, slot + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return MonomialIdeal::make(ring, std::move(gens));
}

/// k renamed copies of I summed in a fresh ring with k*d variables,
/// block-major: every variable name gets the copy index appended
/// (x -> x1, x2, ...).
inline MonomialIdeal iterated_sum(const MonomialIdeal& ideal, long k) {
    if (k < 1) throw domain_error("iterated sum needs k >= 1");
    const RingPtr& base = ideal.ring();
    std::size_t d = base->size();

    std::vector<std::string> names;
    names.reserve(d * static_cast<std::size_t>(k));
    for (long j = 1; j <= k; ++j)
        for (std::size_t i = 0; i < d; ++i) names.push_back(base->name(i) + std::to_string(j));
    RingPtr ring = make_ring(std::move(names));

    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size() * static_cast<std::size_t>(k));
    for (long j = 0; j < k; ++j) {
        for (const Monomial& g : ideal.generators()) {
            std::vector<Exp> e(ring->size(), 0);
            for (std::size_t i = 0; i < d; ++i)
                e[static_cast<std::size_t>(j) * d + i] = g.exponent(i);
            gens.emplace_back(ring, std::move(e));
        }
    }
    return MonomialIdeal::make(ring, std::move(gens));
}

/// P_m: three copies of the star ideal I_{m,2m-1} on disjoint variable
/// blocks, 3(2m-1) variables in total.
inline MonomialIdeal pm_ideal(long m) {
    if (m < 2) throw domain_error("P_m needs m >= 2");
    return iterated_sum(star_ideal(m, 2 * m - 1), 3);
}

namespace detail {

inline long floor_div(long a, long b) {
    long q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

inline long ceil_div(long a, long b) {
    return -floor_div(-a, b);
}

} // namespace detail

/// The two-unknown integer system behind membership of x^a y^b z^c in the
/// n-th power of the family-F ideal:
///     p, q >= 0,   n - c <= p + q <= n,
///     (2d+1)n - b <= (2d+1)p + (2d-1)q <= a.
struct FdMembershipSystem {
    long d = 1;
    long n = 1;
    long a = 0; // exponent of x
    long b = 0; // exponent of y
    long c = 0; // exponent of z

    /// Only p is enumerated; each p forces q into an interval.
    bool has_solution() const {
        long w = 2 * d - 1;
        for (long p = 0; p <= n; ++p) {
            long q_lo = std::max<long>(0, (n - c) - p);
            long q_hi = n - p;
            q_lo = std::max(q_lo, detail::ceil_div((2 * d + 1) * (n - p) - b, w));
            q_hi = std::min(q_hi, detail::floor_div(a - (2 * d + 1) * p, w));
            if (q_lo <= q_hi) return true;
        }
        return false;
    }
};

/// Decides x^a y^b z^c ∈ ((x^{2d+1}, x^{2d-1} y^2, y^{2d+1} z))^n by
/// solving the integer system above. O(n), no search over q.
inline bool fd_membership_oracle(long d, long n, const Monomial& mono) {
    if (d < 1 || n < 1) throw domain_error("membership oracle needs d, n >= 1");
    if (mono.ring()->size() != 3)
        throw domain_error("membership oracle expects a 3-variable ring");

    FdMembershipSystem system{d, n, static_cast<long>(mono.exponent(0)),
                              static_cast<long>(mono.exponent(1)),
                              static_cast<long>(mono.exponent(2))};
    return system.has_solution();
}

/// Closed form of the symbolic powers of family F:
///   I^(n) = I^n                                  for n <= d,
///   I^(n) = I^n + (x^d y)^{2d+1} I^{n-d-1}       for n >= d+1,
/// with I^0 the unit ideal.
inline MonomialIdeal fd_symbolic_closed_form(long d, long n,
                                             std::array<std::string, 3> names = {"x", "y", "z"}) {
    if (d < 1 || n < 1) throw domain_error("closed form needs d, n >= 1");
    MonomialIdeal ideal = family_F(d, names);
    MonomialIdeal ordinary = power(ideal, n);
    if (n <= d) return ordinary;
    Exp e = static_cast<Exp>(d);
    Monomial witness(ideal.ring(), {e * (2 * e + 1), 2 * e + 1, 0}); // (x^d y)^{2d+1}
    return add(ordinary, mul(power(ideal, n - d - 1), witness));
}

} // namespace symres
