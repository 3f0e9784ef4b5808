#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <symres/rational.hpp>
#include <symres/symbolic.hpp>

namespace symres {

/// Verdict of one containment question I^(m) ⊆ I^r. When not contained,
/// `witness` is the canonically least minimal generator of I^(m) that
/// fails to lie in I^r, and is re-checkable by plain membership tests.
struct ContainmentCertificate {
    long m = 0;
    long r = 0;
    bool contained = false;
    std::optional<Monomial> witness;

    Rational ratio() const { return Rational(m, r); }
};

inline ContainmentCertificate check_containment(const MonomialIdeal& ideal, long m, long r) {
    if (m < 1 || r < 1) throw domain_error("containment check needs m, r >= 1");
    MonomialIdeal symbolic = symbolic_power(ideal, m);
    MonomialIdeal ordinary = power(ideal, r);
    ContainmentCertificate cert;
    cert.m = m;
    cert.r = r;
    cert.contained = true;
    for (const Monomial& g : symbolic.generators()) {
        if (!ordinary.contains(g)) {
            cert.contained = false;
            cert.witness = g; // generators are canonically sorted: first = least
            break;
        }
    }
    return cert;
}

/// Exhaustive grid of containment verdicts for 1 <= m <= max_m,
/// 1 <= r <= max_r. `best_ratio` is the largest m/r over the
/// not-contained cells: a certified lower bound for the resurgence.
/// The supremum defining the resurgence may be approached without being
/// attained, so the report never claims the resurgence itself.
struct ScanReport {
    long max_m = 0;
    long max_r = 0;
    std::vector<std::vector<bool>> contained; // [m-1][r-1]
    std::optional<Rational> best_ratio;
    struct BestCell {
        long m;
        long r;
        Monomial witness;
    };
    std::vector<BestCell> best_cells;

    static constexpr const char* note =
        "best_ratio is a certified lower bound for the resurgence; "
        "the supremum may be approached without being attained";

    bool cell(long m, long r) const {
        return contained[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(r - 1)];
    }
};

/// Two monotonicity shortcuts prune the grid when `shortcuts` is set:
/// containment at (m, r) forces containment at (m+1, r), and
/// non-containment at (m, r) forces non-containment at (m, r+1).
/// With shortcuts off and threads > 1 the independent cells are evaluated
/// in parallel; the report is identical either way.
inline ScanReport scan(const MonomialIdeal& ideal, long max_m, long max_r,
                       bool shortcuts = true, unsigned threads = 1) {
    if (max_m < 1 || max_r < 1) throw domain_error("scan needs max_m, max_r >= 1");

    ScanReport report;
    report.max_m = max_m;
    report.max_r = max_r;
    report.contained.assign(static_cast<std::size_t>(max_m),
                            std::vector<bool>(static_cast<std::size_t>(max_r), false));

    auto set_cell = [&](long m, long r, bool value) {
        report.contained[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(r - 1)] = value;
    };

    if (!shortcuts && threads > 1) {
        std::vector<std::pair<long, long>> cells;
        for (long m = 1; m <= max_m; ++m)
            for (long r = 1; r <= max_r; ++r) cells.emplace_back(m, r);
        std::vector<char> verdicts(cells.size(), 0);
        std::vector<std::thread> pool;
        std::size_t stride = threads;
        for (std::size_t t = 0; t < stride; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < cells.size(); i += stride)
                    verdicts[i] =
                        check_containment(ideal, cells[i].first, cells[i].second).contained;
            });
        }
        for (std::thread& th : pool) th.join();
        for (std::size_t i = 0; i < cells.size(); ++i)
            set_cell(cells[i].first, cells[i].second, verdicts[i] != 0);
    } else {
        for (long m = 1; m <= max_m; ++m) {
            for (long r = 1; r <= max_r; ++r) {
                if (shortcuts && m > 1 && report.cell(m - 1, r)) {
                    set_cell(m, r, true);
                    continue;
                }
                if (shortcuts && r > 1 && !report.cell(m, r - 1)) {
                    set_cell(m, r, false);
                    continue;
                }
                set_cell(m, r, check_containment(ideal, m, r).contained);
            }
        }
    }

    for (long m = 1; m <= max_m; ++m)
        for (long r = 1; r <= max_r; ++r)
            if (!report.cell(m, r)) {
                Rational ratio(m, r);
                if (!report.best_ratio || *report.best_ratio < ratio) report.best_ratio = ratio;
            }
    if (report.best_ratio) {
        for (long m = 1; m <= max_m; ++m) {
            for (long r = 1; r <= max_r; ++r) {
                if (report.cell(m, r) || Rational(m, r) != *report.best_ratio) continue;
                ContainmentCertificate cert = check_containment(ideal, m, r);
                if (cert.contained)
                    throw error("scan shortcut disagreed with direct evaluation");
                report.best_cells.push_back({m, r, *cert.witness});
            }
        }
    }
    return report;
}

/// One factor of a product certificate: an ideal on its own variable
/// block together with a locally verified witness of I^(m) ⊄ I^r.
struct ProductPart {
    MonomialIdeal ideal;
    long m = 0;
    long r = 0;
    Monomial witness;
};

/// Combines per-block witnesses f_i ∈ I_i^(m_i) \ I_i^{r_i} into the
/// certificate  P^(m_1+...+m_p) ⊄ P^{r_1+...+r_p-p+1}  for the block sum
/// P = I_1 + ... + I_p, with witness f_1*...*f_p. Every local witness is
/// verified first, and the combined certificate is re-verified by direct
/// membership tests before it is returned.
inline ContainmentCertificate product_witness(const std::vector<ProductPart>& parts) {
    if (parts.empty()) throw domain_error("product certificate needs at least one part");
    const RingPtr& ring = parts.front().ideal.ring();

    std::vector<bool> used(ring->size(), false);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const ProductPart& part = parts[i];
        std::string label = "part " + std::to_string(i + 1);
        require_same_ring(ring, part.ideal.ring());
        require_same_ring(ring, part.witness.ring());
        if (part.m < 1 || part.r < 1) throw domain_error(label + ": needs m, r >= 1");
        std::vector<bool> mine(ring->size(), false);
        for (const Monomial& g : part.ideal.generators())
            for (std::size_t v : g.support()) mine[v] = true;
        for (std::size_t v = 0; v < mine.size(); ++v) {
            if (!mine[v]) continue;
            if (used[v])
                throw domain_error(label + ": blocks overlap on variable '" + ring->name(v) +
                                   "'");
            used[v] = true;
        }
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const ProductPart& part = parts[i];
        std::string label = "part " + std::to_string(i + 1);
        if (!symbolic_power(part.ideal, part.m).contains(part.witness))
            throw domain_error(label + ": witness " + part.witness.str() +
                               " is not in the " + std::to_string(part.m) +
                               "-th symbolic power");
        if (power(part.ideal, part.r).contains(part.witness))
            throw domain_error(label + ": witness " + part.witness.str() +
                               " lies in the " + std::to_string(part.r) +
                               "-th ordinary power, so it certifies nothing");
    }

    ContainmentCertificate cert;
    cert.contained = false;
    cert.m = 0;
    cert.r = 1 - static_cast<long>(parts.size());
    Monomial combined = Monomial::unit(ring);
    MonomialIdeal sum = MonomialIdeal::zero(ring);
    for (const ProductPart& part : parts) {
        cert.m += part.m;
        cert.r += part.r;
        combined = mul(combined, part.witness);
        sum = add(sum, part.ideal);
    }
    cert.witness = combined;

    if (!symbolic_contains(sum, cert.m, combined))
        throw error("product certificate failed re-verification: witness not in the symbolic power");
    if (power_contains(sum, cert.r, combined))
        throw error("product certificate failed re-verification: witness lies in the ordinary power");
    return cert;
}

/// Combined upper bound max{a, b, 2(a+b)/3} for the resurgence of a sum of
/// ideals in disjoint variables with resurgences a and b. When
/// max{a,b} >= 2 min{a,b} the bound collapses to max{a,b}.
struct BoundReport {
    Rational a;
    Rational b;
    Rational bound;
    std::string rule; // "max-collapse" or "two-thirds"
};

inline BoundReport sharp_sum_bound(const Rational& a, const Rational& b) {
    if (a < 1 || b < 1) throw domain_error("resurgence inputs are >= 1");
    BoundReport report;
    report.a = a;
    report.b = b;
    Rational two_thirds = Rational(2, 3) * (a + b);
    report.bound = max(max(a, b), two_thirds);
    report.rule = max(a, b) >= Rational(2) * min(a, b) ? "max-collapse" : "two-thirds";
    return report;
}

/// Finite check of  sup over integers m, n >= 2 of
/// {a, b, (ma+nb)/(m+n-1)} = max{a, b, 2(a+b)/3}: enumerates the left side
/// up to nmax and returns it next to the closed form. The enumeration can
/// never exceed the closed form.
struct SupEvaluation {
    Rational enumerated_max;
    Rational closed_form;
};

inline SupEvaluation evaluate_max_sup(const Rational& a, const Rational& b, long nmax) {
    if (a < 0 || b < 0) throw domain_error("sup evaluation needs a, b >= 0");
    if (nmax < 2) throw domain_error("sup evaluation needs nmax >= 2");
    SupEvaluation eval;
    eval.enumerated_max = max(a, b);
    for (long m = 2; m <= nmax; ++m)
        for (long n = 2; n <= nmax; ++n) {
            Rational value = (Rational(m) * a + Rational(n) * b) / Rational(m + n - 1);
            eval.enumerated_max = max(eval.enumerated_max, value);
        }
    eval.closed_form = max(max(a, b), Rational(2, 3) * (a + b));
    if (eval.closed_form < eval.enumerated_max)
        throw error("sup enumeration exceeded its closed form");
    return eval;
}

/// Bound sequence for iterated block sums of one ideal with resurgence a:
/// r_1 = a, r_{k+1} = max{a, r_k, 2(a+r_k)/3}. Every value stays strictly
/// below 2a.
inline std::vector<Rational> iterated_sum_bound(const Rational& a, long dmax) {
    if (a < 1) throw domain_error("resurgence input is >= 1");
    if (dmax < 1) throw domain_error("iterated bound needs dmax >= 1");
    std::vector<Rational> bounds;
    bounds.reserve(static_cast<std::size_t>(dmax));
    Rational current = a;
    for (long k = 1; k <= dmax; ++k) {
        if (k > 1) current = max(max(a, current), Rational(2, 3) * (a + current));
        if (!(current < Rational(2) * a))
            throw error("iterated bound sequence reached 2a");
        bounds.push_back(current);
    }
    return bounds;
}

/// Asymptotic resurgence of the star configuration ideal I_{m,d}:
/// m(d-m+1)/d.
inline Rational rho_a_star_configuration(long m, long d) {
    if (m < 1 || m > d) throw domain_error("star configuration needs 1 <= m <= d");
    return Rational(m * (d - m + 1), d);
}

/// Asymptotic resurgence of a block sum: the maximum of the blocks'.
inline Rational rho_a_sum_reference(const std::vector<Rational>& values) {
    if (values.empty()) throw domain_error("reference combinator needs at least one value");
    Rational best = values.front();
    for (const Rational& v : values) best = max(best, v);
    return best;
}

/// The possible resurgences of sums of two disjoint-variable ideals that
/// both have resurgence 1: {1} together with (n+1)/n for n >= 3, truncated
/// at nmax.
inline std::vector<Rational> res_set_11(long nmax) {
    if (nmax < 3) throw domain_error("Res(1,1) truncation needs nmax >= 3");
    std::vector<Rational> values{Rational(1)};
    for (long n = 3; n <= nmax; ++n) values.emplace_back(n + 1, n);
    return values;
}

} // namespace symres
