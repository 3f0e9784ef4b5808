#pragma once

#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <symres/families.hpp>
#include <symres/io.hpp>
#include <symres/resurgence.hpp>

namespace symres {

/// One reproduction check: a short statement of the fact being verified,
/// the verdict, and on failure a diagnostic naming the first offending
/// case. All checks are exact; there are no tolerances to tune.
struct VerifyItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace verify_detail {

using Check = std::function<std::optional<std::string>()>;

inline std::optional<std::string> equal_ideals(const MonomialIdeal& got,
                                               const MonomialIdeal& expected,
                                               const std::string& what) {
    if (got == expected) return std::nullopt;
    std::ostringstream os;
    os << what << ": got " << got.str() << ", expected " << expected.str();
    return os.str();
}

inline MonomialIdeal random_ideal(std::mt19937& rng, const RingPtr& ring, int max_gens,
                                  Exp max_exp) {
    std::uniform_int_distribution<int> gen_count(1, max_gens);
    std::uniform_int_distribution<Exp> exp_dist(0, max_exp);
    for (;;) {
        std::vector<Monomial> gens;
        int count = gen_count(rng);
        for (int i = 0; i < count; ++i) {
            std::vector<Exp> e(ring->size());
            for (Exp& x : e) x = exp_dist(rng);
            gens.emplace_back(ring, std::move(e));
        }
        MonomialIdeal ideal = MonomialIdeal::make(ring, std::move(gens));
        if (!ideal.is_zero() && !ideal.is_unit()) return ideal;
    }
}

inline Monomial random_monomial(std::mt19937& rng, const RingPtr& ring, Exp max_exp) {
    std::uniform_int_distribution<Exp> exp_dist(0, max_exp);
    std::vector<Exp> e(ring->size());
    for (Exp& x : e) x = exp_dist(rng);
    return Monomial(ring, std::move(e));
}

/// F_1 + renamed F_2 in the joint six-variable ring (x,y,z) + (t,u,v).
inline MonomialIdeal mixed_sum_f1_f2(RingPtr& ring_out) {
    RingPtr ring = make_ring({"x", "y", "z", "t", "u", "v"});
    MonomialIdeal sum =
        add(embed(family_F(1), ring), embed(family_F(2, {"t", "u", "v"}), ring));
    ring_out = ring;
    return sum;
}

} // namespace verify_detail

/// The full reproduction suite. Every item is deterministic (random data
/// uses fixed seeds) and exact. Items are independent; with threads > 1
/// they are dispatched in parallel and reported in order.
inline std::vector<VerifyItem> run_verification(unsigned threads = 1) {
    using verify_detail::Check;
    using verify_detail::equal_ideals;

    std::vector<std::pair<std::string, Check>> checks;

    checks.emplace_back(
        "F_d family: symbolic power equals the closed form I^n + (x^d y)^(2d+1) I^(n-d-1) "
        "(d <= 3, n <= 6)",
        []() -> std::optional<std::string> {
            for (long d = 1; d <= 3; ++d)
                for (long n = 1; n <= 6; ++n) {
                    MonomialIdeal direct = symbolic_power(family_F(d), n);
                    MonomialIdeal closed = fd_symbolic_closed_form(d, n);
                    std::ostringstream what;
                    what << "d=" << d << ", n=" << n;
                    if (auto fail = equal_ideals(direct, closed, what.str())) return fail;
                }
            return std::nullopt;
        });

    checks.emplace_back(
        "F_d family: symbolic and ordinary powers agree for n <= d",
        []() -> std::optional<std::string> {
            for (long d = 1; d <= 3; ++d)
                for (long n = 1; n <= d; ++n) {
                    MonomialIdeal ideal = family_F(d);
                    std::ostringstream what;
                    what << "d=" << d << ", n=" << n;
                    if (auto fail =
                            equal_ideals(symbolic_power(ideal, n), power(ideal, n), what.str()))
                        return fail;
                }
            return std::nullopt;
        });

    checks.emplace_back(
        "binomial expansion over two blocks: (I+J)^(s) = sum of I^(i) J^(s-i) "
        "for F_1+F_1' and F_1+F_2', s <= 4",
        []() -> std::optional<std::string> {
            std::vector<MonomialIdeal> sums;
            sums.push_back(iterated_sum(family_F(1), 2));
            RingPtr ring6;
            sums.push_back(verify_detail::mixed_sum_f1_f2(ring6));
            for (const MonomialIdeal& sum : sums) {
                BlockPartition blocks = detect_blocks(sum);
                if (blocks.blocks.size() != 2) return "expected two blocks in " + sum.str();
                for (long s = 1; s <= 4; ++s) {
                    std::ostringstream what;
                    what << sum.str() << " at s=" << s;
                    if (auto fail = equal_ideals(symbolic_power_blockwise(blocks, s),
                                                 symbolic_power(sum, s), what.str()))
                        return fail;
                }
            }
            return std::nullopt;
        });

    checks.emplace_back(
        "binomial expansion over three blocks: P_2, s <= 3",
        []() -> std::optional<std::string> {
            MonomialIdeal p2 = pm_ideal(2);
            BlockPartition blocks = detect_blocks(p2);
            if (blocks.blocks.size() != 3) return std::string("expected three blocks in P_2");
            for (long s = 1; s <= 3; ++s) {
                std::ostringstream what;
                what << "P_2 at s=" << s;
                if (auto fail = equal_ideals(symbolic_power_blockwise(blocks, s),
                                             symbolic_power(p2, s), what.str()))
                    return fail;
            }
            return std::nullopt;
        });

    checks.emplace_back(
        "scan of F_1+F_2' on the 5x4 grid: lower bound exactly 5/4 at (5,4) with witness "
        "x^3*y^3*t^10*u^5",
        []() -> std::optional<std::string> {
            RingPtr ring;
            MonomialIdeal sum = verify_detail::mixed_sum_f1_f2(ring);
            ScanReport report = scan(sum, 5, 4);
            if (!report.best_ratio) return std::string("scan found no non-containment at all");
            if (*report.best_ratio != Rational(5, 4))
                return "best ratio " + report.best_ratio->str() + ", expected 5/4";
            Monomial expected(ring, {3, 3, 0, 10, 5, 0});
            for (const auto& cell : report.best_cells)
                if (cell.m == 5 && cell.r == 4)
                    return cell.witness == expected
                               ? std::nullopt
                               : std::optional<std::string>("witness " + cell.witness.str() +
                                                            ", expected x^3*y^3*t^10*u^5");
            return std::string("cell (5,4) does not attain the best ratio");
        });

    checks.emplace_back(
        "containment P^(n) in P^(n-1) for n = 2, 3, 4 on F_1+F_2'",
        []() -> std::optional<std::string> {
            RingPtr ring;
            MonomialIdeal sum = verify_detail::mixed_sum_f1_f2(ring);
            for (long n = 2; n <= 4; ++n)
                if (!check_containment(sum, n, n - 1).contained)
                    return "not contained at (" + std::to_string(n) + ", " +
                           std::to_string(n - 1) + ")";
            return std::nullopt;
        });

    checks.emplace_back(
        "scan of F_d on the 6x6 grid reports lower bound exactly 1 (d <= 2)",
        []() -> std::optional<std::string> {
            for (long d = 1; d <= 2; ++d) {
                ScanReport report = scan(family_F(d), 6, 6);
                if (!report.best_ratio || *report.best_ratio != Rational(1))
                    return "d=" + std::to_string(d) + ": best ratio " +
                           (report.best_ratio ? report.best_ratio->str() : "none") +
                           ", expected 1";
            }
            return std::nullopt;
        });

    checks.emplace_back(
        "(x^d y)^(2d+1) lies in I^((d+1)) but not in I^(d+1) for F_d (d <= 2)",
        []() -> std::optional<std::string> {
            for (long d = 1; d <= 2; ++d) {
                MonomialIdeal ideal = family_F(d);
                Exp e = static_cast<Exp>(d);
                Monomial witness(ideal.ring(), {e * (2 * e + 1), 2 * e + 1, 0});
                if (!symbolic_power(ideal, d + 1).contains(witness))
                    return "d=" + std::to_string(d) + ": witness missing from I^((d+1))";
                if (power(ideal, d + 1).contains(witness))
                    return "d=" + std::to_string(d) + ": witness lies in I^(d+1)";
            }
            return std::nullopt;
        });

    checks.emplace_back(
        "product certificate for P_2: P^((6)) not inside P^4, ratio exactly 3/2, "
        "witness the product of the three triple products",
        []() -> std::optional<std::string> {
            MonomialIdeal p2 = pm_ideal(2);
            BlockPartition blocks = detect_blocks(p2);
            std::vector<ProductPart> parts;
            Monomial expected = Monomial::unit(p2.ring());
            for (const auto& block : blocks.blocks) {
                std::vector<Exp> e(p2.ring()->size(), 0);
                for (std::size_t v : block.vars) e[v] = 1;
                Monomial triple(p2.ring(), std::move(e));
                expected = mul(expected, triple);
                parts.push_back({block.ideal, 2, 2, triple});
            }
            ContainmentCertificate cert = product_witness(parts);
            if (cert.m != 6 || cert.r != 4)
                return "certificate at (" + std::to_string(cert.m) + ", " +
                       std::to_string(cert.r) + "), expected (6, 4)";
            if (cert.ratio() != Rational(3, 2))
                return "ratio " + cert.ratio().str() + ", expected 3/2";
            if (!(*cert.witness == expected))
                return "witness " + cert.witness->str() + ", expected " + expected.str();
            if (!symbolic_contains(p2, 6, *cert.witness))
                return std::string("direct membership re-check failed for the symbolic power");
            if (power(p2, 4).contains(*cert.witness))
                return std::string("witness unexpectedly lies in P_2^4");
            return std::nullopt;
        });

    checks.emplace_back(
        "star ideal I_{m,d} equals the intersection of all m-variable primes "
        "((m,d) in {(2,3), (2,4), (3,5)})",
        []() -> std::optional<std::string> {
            const std::vector<std::pair<long, long>> cases{{2, 3}, {2, 4}, {3, 5}};
            for (auto [m, d] : cases) {
                MonomialIdeal star = star_ideal(m, d);
                std::vector<std::size_t> pick(static_cast<std::size_t>(m));
                MonomialIdeal meet = MonomialIdeal::zero(star.ring());
                bool first = true;
                auto rec = [&](auto&& self, std::size_t slot, std::size_t from) -> void {
                    if (slot == pick.size()) {
                        PrimeSupport p{pick};
                        MonomialIdeal prime = p.to_ideal(star.ring());
                        meet = first ? prime : intersect(meet, prime);
                        first = false;
                        return;
                    }
                    for (std::size_t v = from; v < static_cast<std::size_t>(d); ++v) {
                        pick[slot] = v;
                        self(self, slot + 1, v + 1);
                    }
                };
                rec(rec, 0, 0);
                std::ostringstream what;
                what << "(m,d)=(" << m << "," << d << ")";
                if (auto fail = equal_ideals(star, meet, what.str())) return fail;
            }
            return std::nullopt;
        });

    checks.emplace_back(
        "x_1...x_{2m-1} lies in I^((m)) but not in I^2 for I = I_{m,2m-1} (m = 2, 3)",
        []() -> std::optional<std::string> {
            for (long m = 2; m <= 3; ++m) {
                MonomialIdeal star = star_ideal(m, 2 * m - 1);
                Monomial all_vars(star.ring(),
                                  std::vector<Exp>(star.ring()->size(), 1));
                if (!symbolic_power(star, m).contains(all_vars))
                    return "m=" + std::to_string(m) + ": product missing from I^((m))";
                if (power(star, 2).contains(all_vars))
                    return "m=" + std::to_string(m) + ": product lies in I^2";
            }
            return std::nullopt;
        });

    checks.emplace_back(
        "asymptotic resurgence of star configurations: m(d-m+1)/d gives 4/3 at (2,3) "
        "and 9/5 at (3,5)",
        []() -> std::optional<std::string> {
            if (rho_a_star_configuration(2, 3) != Rational(4, 3))
                return "(2,3) gave " + rho_a_star_configuration(2, 3).str();
            if (rho_a_star_configuration(3, 5) != Rational(9, 5))
                return "(3,5) gave " + rho_a_star_configuration(3, 5).str();
            // d = 2m-1 specializes to m^2/(2m-1)
            for (long m = 2; m <= 4; ++m)
                if (rho_a_star_configuration(m, 2 * m - 1) != Rational(m * m, 2 * m - 1))
                    return "m=" + std::to_string(m) + " disagrees with m^2/(2m-1)";
            return std::nullopt;
        });

    checks.emplace_back(
        "sup over integers m,n >= 2 of (ma+nb)/(m+n-1) never exceeds max{a,b,2(a+b)/3}; "
        "equality at m=n=2 whenever max < 2 min (1000 random pairs, nmax=50)",
        []() -> std::optional<std::string> {
            std::mt19937 rng(20230917);
            std::uniform_int_distribution<std::int64_t> num(0, 24), den(1, 8);
            for (int i = 0; i < 1000; ++i) {
                Rational a(num(rng), den(rng)), b(num(rng), den(rng));
                SupEvaluation eval = evaluate_max_sup(a, b, 50);
                if (eval.closed_form < eval.enumerated_max)
                    return "enumeration exceeded the closed form at a=" + a.str() +
                           ", b=" + b.str();
                if (max(a, b) < Rational(2) * min(a, b) &&
                    eval.enumerated_max != eval.closed_form)
                    return "no equality at a=" + a.str() + ", b=" + b.str();
            }
            return std::nullopt;
        });

    checks.emplace_back(
        "iterated-sum bound sequence r_{k+1} = max{a, r_k, 2(a+r_k)/3} stays strictly "
        "below 2a (a in {1, 4/3, 2, 5/2}, depth 10)",
        []() -> std::optional<std::string> {
            const Rational inputs[] = {Rational(1), Rational(4, 3), Rational(2), Rational(5, 2)};
            for (const Rational& a : inputs) {
                std::vector<Rational> seq = iterated_sum_bound(a, 10);
                for (const Rational& r : seq)
                    if (!(r < Rational(2) * a))
                        return "value " + r.str() + " reached 2a for a=" + a.str();
            }
            std::vector<Rational> start = iterated_sum_bound(Rational(1), 3);
            if (start != std::vector<Rational>{Rational(1), Rational(4, 3), Rational(14, 9)})
                return std::string("sequence for a=1 does not start 1, 4/3, 14/9");
            return std::nullopt;
        });

    checks.emplace_back(
        "possible resurgences of sums of two resurgence-1 ideals: truncation at 6 is "
        "{1, 4/3, 5/4, 6/5, 7/6}",
        []() -> std::optional<std::string> {
            std::vector<Rational> expected{Rational(1), Rational(4, 3), Rational(5, 4),
                                           Rational(6, 5), Rational(7, 6)};
            if (res_set_11(6) != expected) return std::string("truncated set disagrees");
            return std::nullopt;
        });

    checks.emplace_back(
        "ideal algebra identities on random ideals (<= 4 variables, exponents <= 5)",
        []() -> std::optional<std::string> {
            std::mt19937 rng(411);
            RingPtr ring = make_ring({"x", "y", "z", "w"});
            for (int trial = 0; trial < 60; ++trial) {
                MonomialIdeal a = verify_detail::random_ideal(rng, ring, 4, 5);
                MonomialIdeal b = verify_detail::random_ideal(rng, ring, 4, 5);
                MonomialIdeal c = verify_detail::random_ideal(rng, ring, 4, 5);
                if (add(a, b) != add(b, a)) return std::string("sum is not commutative");
                if (mul(a, b) != mul(b, a)) return std::string("product is not commutative");
                if (intersect(a, b) != intersect(b, a))
                    return std::string("intersection is not commutative");
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    return "product fails to distribute over sum: a=" + a.str();
                if (mul(power(a, 2), power(a, 3)) != power(a, 5))
                    return "power additivity fails for " + a.str();
                if (!power(a, 2).contains(power(a, 3)))
                    return "powers are not monotone for " + a.str();
                if (!a.contains(intersect(a, b)) || !add(a, b).contains(a))
                    return std::string("intersection/sum sandwich fails");
                if (!intersect(a, b).contains(mul(a, b)))
                    return std::string("product not inside intersection");
                Monomial m = verify_detail::random_monomial(rng, ring, 4);
                if (!a.contains(mul(colon(a, m), m)))
                    return "m * (a : m) escapes a for " + a.str() + ", m=" + m.str();
                if (!colon(a, m).contains(a)) return std::string("a escapes a : m");
                std::vector<std::size_t> vars{0, static_cast<std::size_t>(trial % 4)};
                std::sort(vars.begin(), vars.end());
                vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
                MonomialIdeal sat = saturate(a, vars);
                if (saturate(sat, vars) != sat)
                    return "saturation is not idempotent for " + a.str();
                std::vector<Monomial> both = a.generators();
                const auto& bg = b.generators();
                both.insert(both.end(), bg.begin(), bg.end());
                if (MonomialIdeal::make(ring, both) != add(a, b))
                    return std::string("minimalize(union) differs from sum");
            }
            return std::nullopt;
        });

    checks.emplace_back(
        "decomposition re-intersection reproduces the input on random ideals",
        []() -> std::optional<std::string> {
            std::mt19937 rng(77);
            RingPtr ring = make_ring({"x", "y", "z", "w"});
            for (int trial = 0; trial < 40; ++trial) {
                MonomialIdeal a = verify_detail::random_ideal(rng, ring, 4, 5);
                MonomialIdeal meet = MonomialIdeal::unit_ideal(ring);
                for (const IrreducibleComponent& c : irreducible_decomposition(a))
                    meet = intersect(meet, c.to_ideal(ring));
                if (auto fail = equal_ideals(meet, a, "irreducible re-intersection"))
                    return fail;
                meet = MonomialIdeal::unit_ideal(ring);
                for (const MonomialIdeal& q : primary_decomposition(a))
                    meet = intersect(meet, q);
                if (auto fail = equal_ideals(meet, a, "primary re-intersection")) return fail;
            }
            return std::nullopt;
        });

    checks.emplace_back(
        "membership oracle for F_d^n agrees with generic membership "
        "(500 random queries per d <= 3, n <= 5)",
        []() -> std::optional<std::string> {
            std::mt19937 rng(1009);
            for (long d = 1; d <= 3; ++d) {
                MonomialIdeal ideal = family_F(d);
                for (long n = 1; n <= 5; ++n) {
                    MonomialIdeal ordinary = power(ideal, n);
                    Exp bound = static_cast<Exp>((2 * d + 1) * n);
                    std::uniform_int_distribution<Exp> exp_dist(0, bound);
                    for (int i = 0; i < 500; ++i) {
                        std::vector<Exp> e{exp_dist(rng), exp_dist(rng), exp_dist(rng)};
                        Monomial mono(ideal.ring(), std::move(e));
                        if (fd_membership_oracle(d, n, mono) != ordinary.contains(mono))
                            return "disagreement at d=" + std::to_string(d) +
                                   ", n=" + std::to_string(n) + ", monomial " + mono.str();
                    }
                }
            }
            return std::nullopt;
        });

    std::vector<VerifyItem> items(checks.size());
    auto run_one = [&](std::size_t i) {
        items[i].name = checks[i].first;
        try {
            std::optional<std::string> failure = checks[i].second();
            items[i].pass = !failure.has_value();
            items[i].detail = failure.value_or("");
        } catch (const std::exception& e) {
            items[i].pass = false;
            items[i].detail = std::string("exception: ") + e.what();
        }
    };

    if (threads > 1) {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < checks.size(); i += threads) run_one(i);
            });
        for (std::thread& th : pool) th.join();
    } else {
        for (std::size_t i = 0; i < checks.size(); ++i) run_one(i);
    }
    return items;
}

/// Prints one pass/fail line per item; returns 0 iff everything passed.
inline int print_verification(std::ostream& os, unsigned threads = 1) {
    std::vector<VerifyItem> items = run_verification(threads);
    int failures = 0;
    for (const VerifyItem& item : items) {
        os << (item.pass ? "[PASS] " : "[FAIL] ") << item.name;
        if (!item.pass) {
            os << "\n       " << item.detail;
            ++failures;
        }
        os << "\n";
    }
    os << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
       << " (" << items.size() << " total)\n";
    return failures == 0 ? 0 : 1;
}

} // namespace symres
