#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "dedup_layout/gf2.hpp"
#include "dedup_layout/rational.hpp"

using namespace dedup_layout;

TEST_SUITE_BEGIN("rational");

TEST_CASE("construction reduces to lowest terms") {
    CHECK(Rational(4, 2) == Rational(2));
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, -2) == Rational(-3, 2));
    CHECK(Rational(5, 10).num() == 1);
    CHECK(Rational(5, 10).den() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("ordering is exact") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(7, 5) > Rational(4, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(2, 4) >= Rational(1, 2));
    CHECK(Rational(10, 7) != Rational(10, 9));
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(3, 2) - Rational(1, 2) == Rational(1));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(5, 2) / Rational(5) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("str and parse round-trip") {
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("3/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("gf2");

TEST_CASE("unit, weight, support") {
    CHECK(gf2_unit(1) == 1);
    CHECK(gf2_unit(4) == 8);
    CHECK(gf2_weight(0b1011) == 3);
    CHECK(gf2_min_support(0b1010) == 2);
    CHECK(gf2_max_support(0b1010) == 4);
    CHECK(gf2_min_support(0) == 0);
    CHECK(gf2_max_support(0) == 0);
}

TEST_CASE("basis insert/contains/rank") {
    Gf2Basis b;
    CHECK(b.insert(0b011));
    CHECK(b.insert(0b110));
    CHECK_FALSE(b.insert(0b101));  // xor of the two
    CHECK(b.rank() == 2);
    CHECK(b.contains(0b101));
    CHECK_FALSE(b.contains(0b100));
    CHECK(b.reduce(0b101) == 0);
    CHECK(b.reduce(0b111) != 0);
}

TEST_CASE("solve returns a particular solution and the full null space") {
    // Columns over 3 coordinates: e1, e2, e1^e2, e3.
    const std::vector<Gf2Vec> cols = {0b001, 0b010, 0b011, 0b100};
    const auto sol = gf2_solve(cols, 0b111);
    REQUIRE(sol.has_value());
    auto apply = [&](std::uint64_t choice) {
        Gf2Vec acc = 0;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (choice >> j & 1) acc ^= cols[j];
        }
        return acc;
    };
    CHECK(apply(sol->particular) == 0b111);
    // Null space of these columns is spanned by {e1 col, e2 col, e1^e2 col}.
    CHECK(sol->null_basis.size() == 1);
    for (const auto h : sol->null_basis) CHECK(apply(h) == 0);
    CHECK(gf2_solve(cols, 0).has_value());  // zero is always solvable
    CHECK_FALSE(gf2_solve({0b001, 0b010}, 0b100).has_value());
}

TEST_CASE("invert round-trips and rejects singular input") {
    const std::vector<Gf2Vec> m = {0b011, 0b010, 0b110};
    const auto inv = gf2_invert(m);
    // m * inv = identity, applied column by column.
    for (int j = 1; j <= 3; ++j) {
        Gf2Vec acc = 0;
        for (int i = 1; i <= 3; ++i) {
            if (inv[static_cast<std::size_t>(j - 1)] & gf2_unit(i)) {
                acc ^= m[static_cast<std::size_t>(i - 1)];
            }
        }
        CHECK(acc == gf2_unit(j));
    }
    CHECK_THROWS_AS(gf2_invert({0b01, 0b01}), std::invalid_argument);
}

TEST_CASE("transpose is an involution") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint64_t> bits(0, (1u << 5) - 1);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Gf2Vec> cols(4);
        for (auto& c : cols) c = bits(rng);
        const auto tt = gf2_transpose(gf2_transpose(cols, 5), 4);
        CHECK(tt == cols);
    }
}

TEST_SUITE_END();
