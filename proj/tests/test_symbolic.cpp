#include <doctest.h>

#include <symres/families.hpp>
#include <symres/parse.hpp>
#include <symres/symbolic.hpp>

using namespace symres;

namespace {

const RingPtr ring = make_ring({"x", "y", "z"});

MonomialIdeal ideal(std::string_view text) { return parse_ideal(text, ring); }

Monomial mono_unit() { return Monomial::unit(ring); }

/// Squarefree oracle: the symbolic power of an intersection of primes is
/// the intersection of the prime powers. Independent of the saturation
/// route used by symbolic_power.
MonomialIdeal prime_power_oracle(const MonomialIdeal& input, long n) {
    MonomialIdeal meet = MonomialIdeal::unit_ideal(input.ring());
    for (const PrimeSupport& p : associated_primes(input))
        meet = intersect(meet, power(p.to_ideal(input.ring()), n));
    return meet;
}

} // namespace

TEST_CASE("symbolic powers of a prime are its ordinary powers") {
    MonomialIdeal prime = ideal("(x, y)");
    CHECK(symbolic_power(prime, 3) == power(prime, 3));
}

TEST_CASE("the d=1 fresh generator appears at n=2") {
    MonomialIdeal f1 = ideal("(x^3, x*y^2, y^3*z)");
    MonomialIdeal expected = add(power(f1, 2), ideal("(x^3*y^3)"));
    CHECK(symbolic_power(f1, 2) == expected);
    CHECK(symbolic_power(f1, 1) == f1);
    CHECK_FALSE(power(f1, 2).contains(parse_monomial("x^3*y^3", ring)));
}

TEST_CASE("star example against the prime-power oracle") {
    RingPtr r3 = make_ring({"x1", "x2", "x3"});
    MonomialIdeal star = parse_ideal("(x1*x2, x1*x3, x2*x3)", r3);
    MonomialIdeal expected = add(power(star, 2), parse_ideal("(x1*x2*x3)", r3));
    CHECK(symbolic_power(star, 2) == expected);
    CHECK(symbolic_power(star, 2) == prime_power_oracle(star, 2));
}

TEST_CASE("symbolic membership shortcut agrees with the expanded ideal") {
    MonomialIdeal f1 = ideal("(x^3, x*y^2, y^3*z)");
    for (long n = 1; n <= 4; ++n) {
        MonomialIdeal expanded = symbolic_power(f1, n);
        for (Exp a = 0; a <= 8; a += 2)
            for (Exp b = 0; b <= 8; b += 2)
                for (Exp c = 0; c <= 2; ++c) {
                    Monomial m(ring, {a, b, c});
                    CHECK(symbolic_contains(f1, n, m) == expanded.contains(m));
                }
    }
}

TEST_CASE("packing membership agrees with the expanded power") {
    MonomialIdeal f1 = ideal("(x^3, x*y^2, y^3*z)");
    for (long n = 0; n <= 4; ++n) {
        MonomialIdeal expanded = power(f1, n);
        for (Exp a = 0; a <= 9; a += 3)
            for (Exp b = 0; b <= 9; b += 3)
                for (Exp c = 0; c <= 3; ++c) {
                    Monomial m(ring, {a, b, c});
                    CHECK(power_contains(f1, n, m) == expanded.contains(m));
                }
    }
    CHECK_FALSE(power_contains(MonomialIdeal::zero(ring), 2, mono_unit()));
    CHECK(power_contains(MonomialIdeal::zero(ring), 0, mono_unit()));
    CHECK(power_contains(MonomialIdeal::unit_ideal(ring), 3, mono_unit()));
}

TEST_CASE("symbolic power rejects bad input") {
    CHECK_THROWS_AS(symbolic_power(MonomialIdeal::zero(ring), 2), domain_error);
    CHECK_THROWS_AS(symbolic_power(MonomialIdeal::unit_ideal(ring), 2), domain_error);
    CHECK_THROWS_AS(symbolic_power(ideal("(x)"), 0), domain_error);
}

TEST_CASE("block detection") {
    MonomialIdeal two = iterated_sum(ideal("(x^3, x*y^2, y^3*z)"), 2);
    BlockPartition blocks = detect_blocks(two);
    REQUIRE(blocks.blocks.size() == 2);
    CHECK(blocks.blocks[0].vars == std::vector<std::size_t>{0, 1, 2});
    CHECK(blocks.blocks[1].vars == std::vector<std::size_t>{3, 4, 5});
    CHECK(add(blocks.blocks[0].ideal, blocks.blocks[1].ideal) == two);

    RingPtr r3 = make_ring({"x1", "x2", "x3"});
    CHECK(detect_blocks(parse_ideal("(x1*x2, x1*x3, x2*x3)", r3)).blocks.size() == 1);

    CHECK(detect_blocks(pm_ideal(2)).blocks.size() == 3);
}

TEST_CASE("compositions enumerate the splits") {
    CHECK(compositions(4, 2).size() == 5); // s + 1 summands for two blocks
    CHECK(compositions(3, 3).size() == 10);
    for (const auto& split : compositions(3, 3)) {
        long total = 0;
        for (long v : split) total += v;
        CHECK(total == 3);
    }
}

TEST_CASE("blockwise expansion equals the direct symbolic power") {
    MonomialIdeal two = iterated_sum(ideal("(x^3, x*y^2, y^3*z)"), 2);
    BlockPartition blocks = detect_blocks(two);
    for (long s = 1; s <= 3; ++s)
        CHECK(symbolic_power_blockwise(blocks, s) == symbolic_power(two, s));

    // the split witness x^3*y^3 * u^3*v^3 shows up at level 4
    Monomial split_witness = parse_monomial("x1^3*y1^3*x2^3*y2^3", two.ring());
    CHECK(symbolic_power_blockwise(blocks, 4).contains(split_witness));
    CHECK_FALSE(power(two, 3).contains(split_witness));

    BlockPartition single = detect_blocks(ideal("(x^3, x*y^2, y^3*z)"));
    CHECK_THROWS_AS(symbolic_power_blockwise(single, 2), domain_error);
}

TEST_CASE("containments among symbolic powers on a small corpus") {
    std::vector<MonomialIdeal> corpus{
        ideal("(x^3, x*y^2, y^3*z)"),
        ideal("(x, y)"),
        ideal("(x^2, x*y)"),
        star_ideal(2, 3),
    };
    for (const MonomialIdeal& input : corpus) {
        for (long n = 1; n <= 6; ++n) {
            CHECK(symbolic_power(input, n).contains(power(input, n)));
            if (n > 1)
                CHECK(symbolic_power(input, n - 1).contains(symbolic_power(input, n)));
        }
        for (long a = 1; a <= 5; ++a)
            for (long b = 1; a + b <= 6; ++b)
                CHECK(symbolic_power(input, a + b)
                          .contains(mul(symbolic_power(input, a), symbolic_power(input, b))));
    }
}

TEST_CASE("three cheap blocks expand correctly up to s = 4") {
    RingPtr r2 = make_ring({"x", "y"});
    MonomialIdeal three = iterated_sum(parse_ideal("(x^2, x*y)", r2), 3);
    BlockPartition blocks = detect_blocks(three);
    REQUIRE(blocks.blocks.size() == 3);
    for (long s = 1; s <= 4; ++s)
        CHECK(symbolic_power_blockwise(blocks, s) == symbolic_power(three, s));
}

TEST_CASE("squarefree corpus matches the prime-power route") {
    std::vector<MonomialIdeal> corpus{star_ideal(2, 3), star_ideal(2, 4), star_ideal(3, 4)};
    for (const MonomialIdeal& input : corpus)
        for (long n = 1; n <= 3; ++n)
            CHECK(symbolic_power(input, n) == prime_power_oracle(input, n));
}
