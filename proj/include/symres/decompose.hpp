#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include <symres/ideal.hpp>

namespace symres {

/// Monomial prime: the ideal generated by a subset of the variables.
struct PrimeSupport {
    std::vector<std::size_t> vars; // sorted, non-empty

    bool contains(const PrimeSupport& other) const {
        return std::includes(vars.begin(), vars.end(), other.vars.begin(), other.vars.end());
    }

    MonomialIdeal to_ideal(const RingPtr& ring) const {
        std::vector<Monomial> gens;
        gens.reserve(vars.size());
        for (std::size_t v : vars) gens.push_back(Monomial::variable(ring, v));
        return MonomialIdeal::make(ring, std::move(gens));
    }

    std::string str(const RingPtr& ring) const {
        std::string out = "(";
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (i) out += ", ";
            out += ring->name(vars[i]);
        }
        return out + ")";
    }

    auto operator<=>(const PrimeSupport&) const = default;
};

/// Ideal generated by pure variable powers x_i^{e_i}; the building block
/// of irreducible decompositions. Its radical is the prime on its variables.
struct IrreducibleComponent {
    std::vector<std::pair<std::size_t, Exp>> assignments; // sorted by variable, e >= 1

    PrimeSupport radical() const {
        PrimeSupport p;
        p.vars.reserve(assignments.size());
        for (const auto& [v, e] : assignments) p.vars.push_back(v);
        return p;
    }

    MonomialIdeal to_ideal(const RingPtr& ring) const {
        std::vector<Monomial> gens;
        gens.reserve(assignments.size());
        for (const auto& [v, e] : assignments) gens.push_back(Monomial::variable(ring, v, e));
        return MonomialIdeal::make(ring, std::move(gens));
    }

    auto operator<=>(const IrreducibleComponent&) const = default;
};

namespace detail {

inline void require_decomposable(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw domain_error("the zero ideal has no decomposition");
    if (ideal.is_unit()) throw domain_error("the unit ideal has no decomposition");
}

/// Drops members whose removal leaves the intersection unchanged.
/// Deterministic: candidates are scanned in their given (sorted) order.
inline void make_irredundant(std::vector<MonomialIdeal>& members, const MonomialIdeal& whole) {
    std::size_t i = 0;
    while (members.size() > 1 && i < members.size()) {
        bool first = true;
        MonomialIdeal rest = MonomialIdeal::zero(whole.ring());
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (j == i) continue;
            rest = first ? members[j] : intersect(rest, members[j]);
            first = false;
        }
        if (rest == whole)
            members.erase(members.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
}

inline std::vector<IrreducibleComponent> irreducible_decomposition_impl(
    const MonomialIdeal& ideal, std::map<IdealKey, std::vector<IrreducibleComponent>>& memo) {
    IdealKey key = ideal_key(ideal);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const auto& gens = ideal.generators();

    // Base case: every generator is a pure power, so the ideal itself is
    // irreducible. Minimality guarantees the variables are distinct.
    bool pure = std::all_of(gens.begin(), gens.end(),
                            [](const Monomial& g) { return g.support_size() == 1; });
    if (pure) {
        IrreducibleComponent comp;
        for (const Monomial& g : gens) {
            std::size_t v = g.support().front();
            comp.assignments.emplace_back(v, g.exponent(v));
        }
        std::sort(comp.assignments.begin(), comp.assignments.end());
        std::vector<IrreducibleComponent> result{std::move(comp)};
        memo.emplace(std::move(key), result);
        return result;
    }

    // Split the generator with the widest support at its largest exponent:
    // g = x_v^e * (g / x_v^e) gives I = (rest, x_v^e) cap (rest, g/x_v^e).
    std::size_t pick = 0;
    for (std::size_t i = 1; i < gens.size(); ++i)
        if (gens[i].support_size() > gens[pick].support_size()) pick = i;
    const Monomial& g = gens[pick];
    std::size_t var = g.support().front();
    for (std::size_t v : g.support())
        if (g.exponent(v) > g.exponent(var)) var = v;

    std::vector<Monomial> rest;
    rest.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (i != pick) rest.push_back(gens[i]);

    std::vector<Monomial> left = rest;
    left.push_back(Monomial::variable(ideal.ring(), var, g.exponent(var)));
    std::vector<Monomial> right = std::move(rest);
    right.push_back(colon_quotient(g, Monomial::variable(ideal.ring(), var, g.exponent(var))));

    std::vector<IrreducibleComponent> comps =
        irreducible_decomposition_impl(MonomialIdeal::make(ideal.ring(), std::move(left)), memo);
    std::vector<IrreducibleComponent> more =
        irreducible_decomposition_impl(MonomialIdeal::make(ideal.ring(), std::move(right)), memo);
    comps.insert(comps.end(), more.begin(), more.end());
    std::sort(comps.begin(), comps.end());
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());

    // Delete any component that contains the intersection of the others.
    // A component containing another whole component is always redundant,
    // so those go first with pairwise checks. For a prime component that
    // survives the pairwise pass the converse holds too (the intersection
    // of the others lands in a prime only if one of them does), so only
    // non-prime survivors need the explicit re-intersection test.
    std::vector<MonomialIdeal> ideals;
    ideals.reserve(comps.size());
    for (const IrreducibleComponent& c : comps) ideals.push_back(c.to_ideal(ideal.ring()));
    for (std::size_t i = 0; i < ideals.size();) {
        bool redundant = false;
        for (std::size_t j = 0; j < ideals.size(); ++j) {
            if (i != j && ideals[i].contains(ideals[j])) {
                redundant = true;
                break;
            }
        }
        if (redundant) {
            ideals.erase(ideals.begin() + static_cast<std::ptrdiff_t>(i));
            comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    auto is_prime = [](const IrreducibleComponent& c) {
        return std::all_of(c.assignments.begin(), c.assignments.end(),
                           [](const auto& a) { return a.second == 1; });
    };
    std::size_t i = 0;
    while (ideals.size() > 1 && i < ideals.size()) {
        if (is_prime(comps[i])) {
            ++i;
            continue;
        }
        bool first = true;
        MonomialIdeal rest_meet = MonomialIdeal::zero(ideal.ring());
        for (std::size_t j = 0; j < ideals.size(); ++j) {
            if (j == i) continue;
            rest_meet = first ? ideals[j] : intersect(rest_meet, ideals[j]);
            first = false;
        }
        if (ideals[i].contains(rest_meet)) {
            ideals.erase(ideals.begin() + static_cast<std::ptrdiff_t>(i));
            comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }

    memo.emplace(std::move(key), comps);
    return comps;
}

} // namespace detail

/// Irredundant irreducible decomposition of a proper nonzero monomial
/// ideal; the intersection of the components reproduces the input exactly.
inline std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
    detail::require_decomposable(ideal);
    std::map<IdealKey, std::vector<IrreducibleComponent>> memo;
    return detail::irreducible_decomposition_impl(ideal, memo);
}

/// Associated primes: the radicals of the irredundant irreducible
/// components, deduplicated, in canonical order.
inline std::vector<PrimeSupport> associated_primes(const MonomialIdeal& ideal) {
    std::set<PrimeSupport> primes;
    for (const IrreducibleComponent& c : irreducible_decomposition(ideal))
        primes.insert(c.radical());
    return {primes.begin(), primes.end()};
}

/// Members of Ass(I) that are maximal under inclusion.
inline std::vector<PrimeSupport> maximal_associated_primes(const MonomialIdeal& ideal) {
    std::vector<PrimeSupport> all = associated_primes(ideal);
    std::vector<PrimeSupport> maximal;
    for (const PrimeSupport& p : all) {
        bool dominated = std::any_of(all.begin(), all.end(), [&](const PrimeSupport& q) {
            return q != p && q.contains(p);
        });
        if (!dominated) maximal.push_back(p);
    }
    return maximal;
}

/// Primary decomposition: irreducible components grouped by radical and
/// intersected within each group, redundant members dropped.
inline std::vector<MonomialIdeal> primary_decomposition(const MonomialIdeal& ideal) {
    std::map<PrimeSupport, std::vector<IrreducibleComponent>> groups;
    for (IrreducibleComponent& c : irreducible_decomposition(ideal)) {
        PrimeSupport p = c.radical();
        groups[std::move(p)].push_back(std::move(c));
    }

    std::vector<MonomialIdeal> members;
    members.reserve(groups.size());
    for (const auto& [p, comps] : groups) {
        MonomialIdeal primary = comps.front().to_ideal(ideal.ring());
        for (std::size_t i = 1; i < comps.size(); ++i)
            primary = intersect(primary, comps[i].to_ideal(ideal.ring()));
        members.push_back(std::move(primary));
    }
    std::sort(members.begin(), members.end(),
              [](const MonomialIdeal& a, const MonomialIdeal& b) { return canonical_less(a, b); });
    detail::make_irredundant(members, ideal);
    return members;
}

} // namespace symres
