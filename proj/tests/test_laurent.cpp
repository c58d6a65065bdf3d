#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace torik;
using namespace torik::testing;

TEST_CASE("ring arithmetic on fixed inputs") {
    const auto one = LaurentPolynomial::constant(1, 1);
    const auto et = LaurentPolynomial::exponential(1, {1});

    SECTION("difference of squares") {
        CHECK((one + et) * (one - et) == lp(1, {{1, {0}}, {-1, {2}}}));
    }
    SECTION("additive identity") {
        const auto f = lp(1, {{3, {-2}}, {1, {1}}});
        CHECK(f + LaurentPolynomial::zero(1) == f);
    }
    SECTION("exponent addition") {
        const auto a = LaurentPolynomial::exponential(2, {1, 0});
        const auto b = LaurentPolynomial::exponential(2, {0, 1});
        CHECK(a * b == LaurentPolynomial::exponential(2, {1, 1}));
    }
    SECTION("cancellation prunes zero coefficients") {
        const auto f = lp(1, {{2, {3}}});
        CHECK((f - f).is_zero());
        CHECK((f - f).term_count() == 0);
    }
    SECTION("rank mismatch is rejected") {
        CHECK_THROWS_AS(LaurentPolynomial::constant(1, 1) + LaurentPolynomial::constant(2, 1),
                        input_error);
        CHECK_THROWS_AS(LaurentPolynomial::monomial(2, 1, {1}), input_error);
    }
}

TEST_CASE("augmentation") {
    CHECK(lp(1, {{1, {0}}, {1, {1}}}).augment() == 2);
    CHECK(LaurentPolynomial::zero(3).augment() == 0);
    CHECK(lp(2, {{1, {1, 0}}, {-1, {0, 1}}}).augment() == 0);
}

TEST_CASE("canonical text form") {
    CHECK(LaurentPolynomial::zero(2).to_string() == "0");
    CHECK(lp(1, {{1, {1}}, {1, {0}}}).to_string() == "1*e[0] + 1*e[1]");
    CHECK(lp(2, {{-2, {1, 0}}, {1, {-1, 3}}}).to_string() == "1*e[-1,3] + -2*e[1,0]");
    // lex order on exponent vectors, negatives first
    CHECK(lp(2, {{1, {0, -5}}, {1, {-1, 2}}}).to_string() == "1*e[-1,2] + 1*e[0,-5]");
}

TEST_CASE("cyclotomic divisibility on fixed inputs") {
    SECTION("zero is divisible by everything") {
        CHECK(divisible_by_cyclo(LaurentPolynomial::zero(2), {1, 0}));
    }
    SECTION("1 - e^{2u} is divisible by 1 - e^{u}") {
        CHECK(divisible_by_cyclo(lp(1, {{1, {0}}, {-1, {2}}}), {1}));
    }
    SECTION("wall difference of the weighted projective plane example") {
        const auto f = fig_p112_values()[0] - fig_p112_values()[1];
        CHECK(divisible_by_cyclo(f, {1, 0}));
        CHECK_FALSE(divisible_by_cyclo(f + LaurentPolynomial::constant(2, 1), {1, 0}));
    }
    SECTION("invalid divisor characters") {
        CHECK_THROWS_AS(divisible_by_cyclo(lp(2, {{1, {0, 0}}}), {0, 0}), input_error);
        CHECK_THROWS_AS(divisible_by_cyclo(lp(2, {{1, {0, 0}}}), {2, 4}), input_error);
    }
}

TEST_CASE("exact division on fixed inputs") {
    SECTION("cyclotomic factorization") {
        const auto q = exact_divide(lp(1, {{1, {0}}, {-1, {2}}}), lp(1, {{1, {0}}, {-1, {1}}}));
        CHECK(q == lp(1, {{1, {0}}, {1, {1}}}));
    }
    SECTION("division by one") {
        const auto f = lp(2, {{5, {-1, 2}}, {-3, {0, 0}}});
        CHECK(exact_divide(f, LaurentPolynomial::constant(2, 1)) == f);
    }
    SECTION("non-divisible pair reports a remainder") {
        CHECK_THROWS_AS(exact_divide(lp(1, {{1, {0}}, {1, {1}}}), lp(1, {{1, {0}}, {-1, {1}}})),
                        check_error);
        const auto r =
            try_exact_divide(lp(1, {{1, {0}}, {1, {1}}}), lp(1, {{1, {0}}, {-1, {1}}}));
        CHECK_FALSE(r.quotient.has_value());
        CHECK_FALSE(r.remainder.is_zero());
    }
    SECTION("division by zero is rejected") {
        CHECK_THROWS_AS(exact_divide(lp(1, {{1, {0}}}), LaurentPolynomial::zero(1)), input_error);
    }
    SECTION("quotients may involve units") {
        // (1 - e^{2t}) / (1 - e^{-t}) is exact with quotient -e^t - e^{2t}
        const auto q = exact_divide(lp(1, {{1, {0}}, {-1, {2}}}), lp(1, {{1, {0}}, {-1, {-1}}}));
        CHECK(q == lp(1, {{-1, {1}}, {-1, {2}}}));
    }
}

TEST_CASE("ring laws hold exactly on random inputs") {
    std::mt19937 rng(20240811);
    for (std::size_t rank = 1; rank <= 3; ++rank) {
        for (int trial = 0; trial < 120; ++trial) {
            const auto f = random_laurent(rng, rank);
            const auto g = random_laurent(rng, rank);
            const auto h = random_laurent(rng, rank);
            REQUIRE(f + g == g + f);
            REQUIRE(f * g == g * f);
            REQUIRE((f + g) + h == f + (g + h));
            REQUIRE((f * g) * h == f * (g * h));
            REQUIRE(f * (g + h) == f * g + f * h);
            REQUIRE((f - g) + g == f);
        }
    }
}

TEST_CASE("augmentation is a ring homomorphism") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const auto f = random_laurent(rng, 2);
        const auto g = random_laurent(rng, 2);
        REQUIRE((f * g).augment() == f.augment() * g.augment());
        REQUIRE((f + g).augment() == f.augment() + g.augment());
    }
}

TEST_CASE("exact division inverts multiplication") {
    std::mt19937 rng(99);
    for (std::size_t rank = 1; rank <= 3; ++rank) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto f = random_laurent(rng, rank, 5, 4, 6);
            const auto g = random_nonzero_laurent(rng, rank, 5, 4, 6);
            REQUIRE(exact_divide(f * g, g) == f);
        }
    }
}

TEST_CASE("cyclotomic divisibility agrees with the division oracle") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> coin(0, 1);
    int divisible_seen = 0;
    for (int trial = 0; trial < 1200; ++trial) {
        const std::size_t rank = 1 + trial % 3;
        const CharVec u = random_primitive(rng, rank, 3);
        LaurentPolynomial f = random_laurent(rng, rank, 5, 4, 6);
        if (coin(rng))
            f = f * LaurentPolynomial::one_minus_exp(rank, u);
        const bool fast = divisible_by_cyclo(f, u);
        const bool oracle =
            try_exact_divide(f, LaurentPolynomial::one_minus_exp(rank, u)).quotient.has_value();
        REQUIRE(fast == oracle);
        if (fast) ++divisible_seen;
    }
    CHECK(divisible_seen > 300);
}

TEST_CASE("character inversion is an involution and a ring map") {
    std::mt19937 rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_laurent(rng, 2);
        const auto g = random_laurent(rng, 2);
        REQUIRE(f.inverted_characters().inverted_characters() == f);
        REQUIRE((f * g).inverted_characters() ==
                f.inverted_characters() * g.inverted_characters());
        REQUIRE(f.inverted_characters().augment() == f.augment());
    }
}
