#pragma once

#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

#include <symres/decompose.hpp>

namespace symres {

namespace detail {

/// Process-wide cache of symbolic powers and maximal associated primes,
/// keyed by canonical ideal form. Single-writer-per-key, many readers;
/// a duplicate computation produces the identical canonical value.
struct SymbolicCache {
    std::mutex mu;
    std::map<IdealKey, std::vector<PrimeSupport>> max_primes;
    std::map<std::pair<IdealKey, long>, MonomialIdeal> powers;

    static SymbolicCache& instance() {
        static SymbolicCache cache;
        return cache;
    }
};

inline std::vector<std::size_t> complement_vars(const PrimeSupport& p, std::size_t ring_size) {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t v = 0; v < ring_size; ++v) {
        while (k < p.vars.size() && p.vars[k] < v) ++k;
        if (k >= p.vars.size() || p.vars[k] != v) out.push_back(v);
    }
    return out;
}

inline constexpr long unbounded_packing = std::numeric_limits<long>::max();

/// Largest k such that some product of k generators (repetition allowed)
/// divides m on the given coordinates; everything off `coords` is ignored.
/// Exhaustive dynamic program over the exponent box of m, so it never
/// expands I^n. A generator with no exponents on `coords` packs freely,
/// which makes the answer `unbounded_packing`.
inline long max_packing(const Monomial& m, const std::vector<Monomial>& gens,
                        const std::vector<std::size_t>& coords) {
    std::vector<std::vector<Exp>> clipped;
    for (const Monomial& g : gens) {
        std::vector<Exp> e;
        e.reserve(coords.size());
        bool fits = true;
        bool unit = true;
        for (std::size_t i : coords) {
            Exp ge = g.exponent(i);
            if (ge > m.exponent(i)) fits = false;
            if (ge > 0) unit = false;
            e.push_back(ge);
        }
        if (!fits) continue; // can never divide m on these coordinates
        if (unit) return unbounded_packing;
        clipped.push_back(std::move(e));
    }
    if (clipped.empty()) return 0;

    std::vector<Exp> radix(coords.size());
    std::size_t states = 1;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        radix[i] = m.exponent(coords[i]) + 1;
        if (states > (std::size_t(1) << 26) / static_cast<std::size_t>(radix[i]))
            throw domain_error("packing state space too large for this monomial");
        states *= static_cast<std::size_t>(radix[i]);
    }

    // strides for the mixed-radix index of a capacity vector
    std::vector<std::size_t> stride(coords.size());
    std::size_t acc = 1;
    for (std::size_t i = coords.size(); i-- > 0;) {
        stride[i] = acc;
        acc *= static_cast<std::size_t>(radix[i]);
    }
    std::vector<std::ptrdiff_t> gen_offset;
    gen_offset.reserve(clipped.size());
    for (const auto& e : clipped) {
        std::ptrdiff_t off = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            off += static_cast<std::ptrdiff_t>(e[i]) * static_cast<std::ptrdiff_t>(stride[i]);
        gen_offset.push_back(off);
    }

    std::vector<long> best(states, 0);
    std::vector<Exp> v(coords.size(), 0);
    for (std::size_t idx = 0; idx < states; ++idx) {
        long here = 0;
        for (std::size_t g = 0; g < clipped.size(); ++g) {
            bool fits = true;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (clipped[g][i] > v[i]) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            long candidate = 1 + best[idx - static_cast<std::size_t>(gen_offset[g])];
            here = std::max(here, candidate);
        }
        best[idx] = here;
        for (std::size_t i = v.size(); i-- > 0;) { // next capacity vector
            if (++v[i] < radix[i]) break;
            v[i] = 0;
        }
    }
    return best[states - 1];
}

} // namespace detail

inline void clear_symbolic_cache() {
    auto& cache = detail::SymbolicCache::instance();
    std::scoped_lock lock(cache.mu);
    cache.max_primes.clear();
    cache.powers.clear();
}

inline std::vector<PrimeSupport> cached_maximal_associated_primes(const MonomialIdeal& ideal) {
    auto& cache = detail::SymbolicCache::instance();
    IdealKey key = ideal_key(ideal);
    {
        std::scoped_lock lock(cache.mu);
        if (auto it = cache.max_primes.find(key); it != cache.max_primes.end()) return it->second;
    }
    std::vector<PrimeSupport> primes = maximal_associated_primes(ideal);
    std::scoped_lock lock(cache.mu);
    return cache.max_primes.emplace(std::move(key), std::move(primes)).first->second;
}

/// n-th symbolic power: the intersection over the associated primes p of
/// the contraction of I^n from the localization at p. For a monomial prime
/// the contraction is the saturation of I^n by the variables outside p,
/// and the contractions at maximal members of Ass(I) are the smallest, so
/// intersecting those alone gives the result.
inline MonomialIdeal symbolic_power(const MonomialIdeal& ideal, long n) {
    if (ideal.is_zero() || ideal.is_unit())
        throw domain_error("symbolic power needs a proper nonzero ideal");
    if (n < 1) throw domain_error("symbolic power exponent must be >= 1");

    auto& cache = detail::SymbolicCache::instance();
    std::pair<IdealKey, long> key{ideal_key(ideal), n};
    {
        std::scoped_lock lock(cache.mu);
        if (auto it = cache.powers.find(key); it != cache.powers.end()) return it->second;
    }

    MonomialIdeal ordinary = power(ideal, n);
    MonomialIdeal result = MonomialIdeal::zero(ideal.ring());
    bool first = true;
    for (const PrimeSupport& p : cached_maximal_associated_primes(ideal)) {
        std::vector<std::size_t> outside = detail::complement_vars(p, ideal.ring()->size());
        MonomialIdeal term = outside.empty() ? ordinary : saturate(ordinary, outside);
        result = first ? term : intersect(result, term);
        first = false;
    }

    std::scoped_lock lock(cache.mu);
    return cache.powers.emplace(std::move(key), std::move(result)).first->second;
}

/// Membership in I^n without expanding the power: m lies in I^n iff n
/// generators of I (with repetition) multiply into a divisor of m.
inline bool power_contains(const MonomialIdeal& ideal, long n, const Monomial& m) {
    if (n < 0) throw domain_error("negative ideal power");
    require_same_ring(ideal.ring(), m.ring());
    if (n == 0) return true;
    if (ideal.is_zero()) return false;
    std::vector<std::size_t> all(ideal.ring()->size());
    std::iota(all.begin(), all.end(), 0);
    return detail::max_packing(m, ideal.generators(), all) >= n;
}

/// Membership in I^(n) without expanding anything: m lies in the
/// contraction of I^n at p iff some product of n generators divides m on
/// the variables of p (everything outside p is invertible locally), and
/// I^(n) is the intersection of those contractions over the maximal
/// associated primes. Independent of the saturation route in
/// symbolic_power, which makes it a genuine cross-check.
inline bool symbolic_contains(const MonomialIdeal& ideal, long n, const Monomial& m) {
    if (ideal.is_zero() || ideal.is_unit())
        throw domain_error("symbolic power needs a proper nonzero ideal");
    if (n < 1) throw domain_error("symbolic power exponent must be >= 1");
    require_same_ring(ideal.ring(), m.ring());

    for (const PrimeSupport& p : cached_maximal_associated_primes(ideal))
        if (detail::max_packing(m, ideal.generators(), p.vars) < n) return false;
    return true;
}

/// Variable blocks of an ideal: connected components of the "appear in a
/// common generator" relation, with the generators split accordingly.
struct BlockPartition {
    struct Block {
        MonomialIdeal ideal;            // in the full ring context
        std::vector<std::size_t> vars;  // sorted
    };
    RingPtr ring;
    std::vector<Block> blocks;
};

inline BlockPartition detect_blocks(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit())
        throw domain_error("block detection needs a proper nonzero ideal");

    std::size_t d = ideal.ring()->size();
    std::vector<std::size_t> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };

    for (const Monomial& g : ideal.generators()) {
        std::vector<std::size_t> supp = g.support();
        for (std::size_t i = 1; i < supp.size(); ++i)
            parent[find(supp[i])] = find(supp[0]);
    }

    std::map<std::size_t, std::vector<std::size_t>> block_vars; // root -> used vars
    for (const Monomial& g : ideal.generators()) block_vars[find(g.support().front())];
    for (std::size_t v = 0; v < d; ++v) {
        auto it = block_vars.find(find(v));
        if (it != block_vars.end()) it->second.push_back(v);
    }

    BlockPartition partition;
    partition.ring = ideal.ring();
    for (auto& [root, vars] : block_vars) {
        std::vector<Monomial> gens;
        for (const Monomial& g : ideal.generators())
            if (find(g.support().front()) == root) gens.push_back(g);
        partition.blocks.push_back(
            {MonomialIdeal::make(ideal.ring(), std::move(gens)), std::move(vars)});
    }
    std::sort(partition.blocks.begin(), partition.blocks.end(),
              [](const auto& a, const auto& b) { return a.vars.front() < b.vars.front(); });
    return partition;
}

/// All vectors of `parts` non-negative integers summing to `total`,
/// in lexicographic order. (s + parts - 1 choose parts - 1) of them.
inline std::vector<std::vector<long>> compositions(long total, std::size_t parts) {
    std::vector<std::vector<long>> out;
    std::vector<long> current(parts, 0);
    auto rec = [&](auto&& self, std::size_t index, long remaining) -> void {
        if (index + 1 == parts) {
            current[index] = remaining;
            out.push_back(current);
            return;
        }
        for (long v = 0; v <= remaining; ++v) {
            current[index] = v;
            self(self, index + 1, remaining - v);
        }
    };
    if (parts > 0) rec(rec, 0, total);
    return out;
}

/// Symbolic power of a block sum through the binomial expansion
///   (I_1 + ... + I_p)^(s) = sum over i_1+...+i_p = s of
///   I_1^(i_1) * ... * I_p^(i_p),   with I^(0) the unit ideal.
/// The per-block symbolic powers go through the shared cache.
inline MonomialIdeal symbolic_power_blockwise(const BlockPartition& partition, long s) {
    if (partition.blocks.size() < 2)
        throw domain_error("blockwise expansion needs >= 2 blocks; use symbolic_power");
    if (s < 1) throw domain_error("symbolic power exponent must be >= 1");

    MonomialIdeal sum = MonomialIdeal::zero(partition.ring);
    for (const std::vector<long>& split : compositions(s, partition.blocks.size())) {
        MonomialIdeal term = MonomialIdeal::unit_ideal(partition.ring);
        for (std::size_t j = 0; j < split.size(); ++j) {
            if (split[j] == 0) continue;
            term = mul(term, symbolic_power(partition.blocks[j].ideal, split[j]));
        }
        sum = add(sum, term);
    }
    return sum;
}

} // namespace symres
