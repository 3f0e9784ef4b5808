#include <doctest.h>

#include <random>

#include <symres/ideal.hpp>
#include <symres/parse.hpp>

using namespace symres;

namespace {

const RingPtr ring = make_ring({"x", "y", "z"});

Monomial mono(Exp a, Exp b, Exp c) { return Monomial(ring, {a, b, c}); }

MonomialIdeal ideal(std::string_view text) { return parse_ideal(text, ring); }

/// Independent minimalization: drop a generator iff a *different* one
/// divides it, scanning all pairs; then sort. No shortcuts shared with
/// the library path.
std::vector<Monomial> naive_minimal(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return canonical_less(a, b); });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j && divides(gens[j], gens[i]) && !(gens[i] == gens[j])) redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

MonomialIdeal random_ideal(std::mt19937& rng, const RingPtr& r, int max_gens, Exp max_exp) {
    std::uniform_int_distribution<int> count(1, max_gens);
    std::uniform_int_distribution<Exp> exp_dist(0, max_exp);
    for (;;) {
        std::vector<Monomial> gens;
        int n = count(rng);
        for (int i = 0; i < n; ++i) {
            std::vector<Exp> e(r->size());
            for (Exp& x : e) x = exp_dist(rng);
            gens.emplace_back(r, std::move(e));
        }
        MonomialIdeal result = MonomialIdeal::make(r, std::move(gens));
        if (!result.is_zero() && !result.is_unit()) return result;
    }
}

} // namespace

TEST_CASE("minimalize keeps exactly the minimal generators") {
    std::vector<Monomial> gens{mono(3, 0, 0), mono(3, 0, 1), mono(1, 2, 0),
                               mono(1, 3, 0), mono(0, 3, 1), mono(1, 2, 1)};
    MonomialIdeal made = MonomialIdeal::make(ring, gens);
    // frozen expected value, confirmed by the pairwise oracle
    CHECK(made == ideal("(x^3, x*y^2, y^3*z)"));
    CHECK(MonomialIdeal::make(ring, naive_minimal(gens)) == made);

    CHECK(MonomialIdeal::make(ring, {mono(1, 0, 0), mono(1, 0, 0)}) == ideal("(x)"));
    CHECK(MonomialIdeal::make(ring, {}).is_zero());
    // idempotent
    CHECK(MonomialIdeal::make(ring, made.generators()) == made);
}

TEST_CASE("minimalize agrees with the pairwise oracle on random input") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<Exp> exp_dist(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Monomial> gens;
        for (int i = 0; i < 8; ++i)
            gens.push_back(mono(exp_dist(rng), exp_dist(rng), exp_dist(rng)));
        CHECK(MonomialIdeal::make(ring, gens).generators() == naive_minimal(gens));
    }
}

TEST_CASE("sum, product, power") {
    CHECK(power(ideal("(x, y)"), 2) == ideal("(x^2, x*y, y^2)"));
    CHECK(power(ideal("(x, y)"), 0) == MonomialIdeal::unit_ideal(ring));
    CHECK(mul(ideal("(x^3, x*y^2, y^3*z)"), MonomialIdeal::unit_ideal(ring)) ==
          ideal("(x^3, x*y^2, y^3*z)"));

    RingPtr ring6 = make_ring({"x", "y", "z", "u", "v", "w"});
    MonomialIdeal sum = add(parse_ideal("(x^3, x*y^2, y^3*z)", ring6),
                            parse_ideal("(u^3, u*v^2, v^3*w)", ring6));
    CHECK(sum.generators().size() == 6);
}

TEST_CASE("intersection") {
    CHECK(intersect(ideal("(x)"), ideal("(y)")) == ideal("(x*y)"));
    CHECK(intersect(ideal("(x^3, x*y^2, y^3)"), ideal("(x, z)")) ==
          ideal("(x^3, x*y^2, y^3*z)"));
    MonomialIdeal f1 = ideal("(x^3, x*y^2, y^3*z)");
    CHECK(intersect(f1, MonomialIdeal::unit_ideal(ring)) == f1);
    CHECK(intersect(f1, MonomialIdeal::zero(ring)).is_zero());
}

TEST_CASE("colon by a monomial and by an ideal") {
    CHECK(colon(ideal("(x^3, x*y^2, y^3*z)"), mono(3, 3, 0)) ==
          MonomialIdeal::unit_ideal(ring));
    CHECK(colon(ideal("(x^2*y)"), mono(1, 0, 0)) == ideal("(x*y)"));
    // frozen from per-generator gcd division: gcd(x^3,z)=1, gcd(y^3*z,z)=z
    CHECK(colon(ideal("(x^3, y^3*z)"), mono(0, 0, 1)) == ideal("(x^3, y^3)"));

    CHECK(colon_ideal(ideal("(x^2*y, x*z)"), ideal("(x)")) == ideal("(x*y, z)"));
    CHECK_THROWS_AS(colon_ideal(ideal("(x)"), MonomialIdeal::zero(ring)), domain_error);
}

TEST_CASE("saturation") {
    // two colon steps: (x^3, x*y^2, y^3) after the first, stable after that
    CHECK(saturate(ideal("(x^3, x*y^2, y^3*z)"), {2}) == ideal("(x^3, x*y^2, y^3)"));
    CHECK(saturate(ideal("(x)"), {1}) == ideal("(x)"));
    CHECK(saturate(ideal("(x*y)"), {0, 1}) == MonomialIdeal::unit_ideal(ring));
    CHECK_THROWS_AS(saturate(ideal("(x)"), {}), domain_error);
}

TEST_CASE("radical and membership") {
    MonomialIdeal f1 = ideal("(x^3, x*y^2, y^3*z)");
    CHECK(radical(f1) == ideal("(x, y*z)"));
    // cross-check against (x,y) cap (x,z)
    CHECK(radical(f1) == intersect(ideal("(x, y)"), ideal("(x, z)")));

    CHECK_FALSE(power(f1, 2).contains(mono(3, 3, 0))); // x^3*y^3 not in I^2
    CHECK(ideal("(x)").contains(ideal("(x^2)")));
    CHECK(MonomialIdeal::unit_ideal(ring).contains(mono(0, 0, 0)));
    CHECK_FALSE(MonomialIdeal::zero(ring).contains(mono(2, 0, 0)));
}

TEST_CASE("algebra identities on random ideals") {
    std::mt19937 rng(2024);
    RingPtr r4 = make_ring({"x", "y", "z", "w"});
    for (int trial = 0; trial < 40; ++trial) {
        MonomialIdeal a = random_ideal(rng, r4, 4, 5);
        MonomialIdeal b = random_ideal(rng, r4, 4, 5);
        MonomialIdeal c = random_ideal(rng, r4, 4, 5);

        CHECK(add(a, b) == add(b, a));
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));

        CHECK(mul(power(a, 1), power(a, 2)) == power(a, 3));
        CHECK(power(a, 2).contains(power(a, 3)));

        CHECK(a.contains(intersect(a, b)));
        CHECK(add(a, b).contains(a));
        CHECK(intersect(a, b).contains(mul(a, b)));

        std::uniform_int_distribution<Exp> exp_dist(0, 4);
        Monomial m(r4, {exp_dist(rng), exp_dist(rng), exp_dist(rng), exp_dist(rng)});
        CHECK(a.contains(mul(colon(a, m), m)));
        CHECK(colon(a, m).contains(a));

        MonomialIdeal sat = saturate(a, {0, 2});
        CHECK(saturate(sat, {0, 2}) == sat);
        Monomial w(r4, {1, 0, 1, 0});
        CHECK(colon(sat, w) == sat);

        std::vector<Monomial> both = a.generators();
        both.insert(both.end(), b.generators().begin(), b.generators().end());
        CHECK(MonomialIdeal::make(r4, both) == add(a, b));
    }
}

TEST_CASE("membership matches exhaustive enumeration on small grids") {
    // m in I iff some generator divides m; m in I*J iff some product of a
    // generator of I and one of J divides m. Checked against every monomial
    // with exponents <= 6 in 4 variables.
    std::mt19937 rng(5150);
    RingPtr r4 = make_ring({"a", "b", "c", "d"});
    MonomialIdeal i1 = random_ideal(rng, r4, 3, 3);
    MonomialIdeal i2 = random_ideal(rng, r4, 3, 3);
    MonomialIdeal prod = mul(i1, i2);

    for (Exp ea = 0; ea <= 6; ++ea)
        for (Exp eb = 0; eb <= 6; ++eb)
            for (Exp ec = 0; ec <= 6; ++ec)
                for (Exp ed = 0; ed <= 6; ++ed) {
                    Monomial m(r4, {ea, eb, ec, ed});
                    bool direct = false;
                    for (const Monomial& g : i1.generators())
                        if (divides(g, m)) direct = true;
                    CHECK(i1.contains(m) == direct);

                    bool pairwise = false;
                    for (const Monomial& f : i1.generators())
                        for (const Monomial& g : i2.generators())
                            if (divides(mul(f, g), m)) pairwise = true;
                    CHECK(prod.contains(m) == pairwise);
                }
}

TEST_CASE("exponent overflow propagates out of ideal arithmetic") {
    Monomial big(ring, {std::numeric_limits<Exp>::max() - 1, 0, 0});
    MonomialIdeal huge = MonomialIdeal::make(ring, {big});
    CHECK_THROWS_AS(power(huge, 2), overflow_error);
    CHECK_THROWS_AS(mul(huge, huge), overflow_error);
}

TEST_CASE("zero and unit ideal edges") {
    MonomialIdeal z = MonomialIdeal::zero(ring);
    MonomialIdeal one = MonomialIdeal::unit_ideal(ring);
    MonomialIdeal f1 = ideal("(x^3, x*y^2, y^3*z)");

    CHECK(add(f1, z) == f1);
    CHECK(mul(f1, z).is_zero());
    CHECK(power(z, 0) == one);
    CHECK(power(z, 3).is_zero());
    CHECK(f1.contains(z));
    CHECK_FALSE(z.contains(f1));
    CHECK(one.contains(f1));
    CHECK(z.str() == "(0)");
    CHECK(one.str() == "(1)");
    CHECK(f1.is_proper());
    CHECK_FALSE(one.is_proper());
}

TEST_CASE("embedding by variable name") {
    RingPtr big = make_ring({"t", "x", "y", "z", "u"});
    MonomialIdeal f1 = ideal("(x^3, x*y^2, y^3*z)");
    MonomialIdeal embedded = embed(f1, big);
    CHECK(embedded == parse_ideal("(x^3, x*y^2, y^3*z)", big));
    CHECK_THROWS_AS(embed(f1, make_ring({"x", "y"})), ring_mismatch_error);
}
