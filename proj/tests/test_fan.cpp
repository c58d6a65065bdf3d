#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace torik;
using namespace torik::testing;

TEST_CASE("fan validation accepts the weighted projective plane") {
    const auto fan = p112_fan();
    CHECK(fan->rank() == 2);
    CHECK(fan->cone_count() == 3);
    CHECK(fan->is_complete());
}

TEST_CASE("fan validation rejects malformed data") {
    SECTION("non-primitive ray") {
        CHECK_THROWS_AS(Fan::validate({2, {{2, 0}, {0, 1}}, {{0, 1}}}), input_error);
    }
    SECTION("zero ray") {
        CHECK_THROWS_AS(Fan::validate({2, {{0, 0}, {0, 1}}, {{0, 1}}}), input_error);
    }
    SECTION("duplicate ray") {
        CHECK_THROWS_AS(Fan::validate({2, {{1, 0}, {1, 0}}, {{0, 1}}}), input_error);
    }
    SECTION("overlapping cone interiors") {
        CHECK_THROWS_AS(
            Fan::validate({2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}}, {{0, 1}, {2, 3}}}),
            input_error);
    }
    SECTION("touching along a ray that is not a common face") {
        // the second cone meets the octant exactly in the ray (1,1,0), which
        // is interior to one of the octant's two-dimensional faces
        CHECK_THROWS_AS(
            Fan::validate({3,
                           {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 0, -1}, {1, 0, -1}},
                           {{0, 1, 2}, {3, 4, 5}}}),
            input_error);
    }
    SECTION("dangling ray") {
        CHECK_THROWS_AS(Fan::validate({2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}}}), input_error);
    }
    SECTION("ray index out of range") {
        CHECK_THROWS_AS(Fan::validate({2, {{1, 0}, {0, 1}}, {{0, 5}}}), input_error);
    }
    SECTION("dependent rays in a simplicial-sized cone") {
        CHECK_THROWS_AS(Fan::validate({2, {{1, 0}, {-1, 0}}, {{0, 1}}}), input_error);
    }
}

TEST_CASE("completeness classification") {
    CHECK(p1_fan()->is_complete());
    CHECK(p2_fan()->is_complete());
    CHECK(p1xp1_fan()->is_complete());
    CHECK(hirzebruch2_fan()->is_complete());

    const Fan quadrant = Fan::validate({2, {{1, 0}, {0, 1}}, {{0, 1}}});
    CHECK_FALSE(quadrant.is_complete());

    // removing one maximal cone breaks facet pairing
    const Fan punctured =
        Fan::validate({2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}}});
    CHECK_FALSE(punctured.is_complete());
}

TEST_CASE("cone classification") {
    SECTION("smooth quadrant") {
        const Fan f = Fan::validate({2, {{1, 0}, {0, 1}}, {{0, 1}}});
        CHECK(f.classify(0) == ConeClass::smooth);
        CHECK(f.cone(0).multiplicity == 1);
    }
    SECTION("simplicial of multiplicity two") {
        const auto fan = p112_fan();
        CHECK(fan->classify(2) == ConeClass::simplicial);
        CHECK(fan->cone(2).multiplicity == 2);
        CHECK(fan->classify(0) == ConeClass::smooth);
    }
    SECTION("cone over a square is not simplicial") {
        const Fan f = Fan::validate(
            {3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}, {{0, 1, 2, 3}}});
        CHECK(f.classify(0) == ConeClass::non_simplicial);
        CHECK_THROWS_AS(f.is_complete(), input_error);
        CHECK_THROWS_AS(f.dual_generators(0), input_error);
    }
}

TEST_CASE("dual generators") {
    SECTION("the quadrant is self-dual") {
        const Fan f = Fan::validate({2, {{1, 0}, {0, 1}}, {{0, 1}}});
        CHECK(f.dual_generators(0) == std::vector<CharVec>{{1, 0}, {0, 1}});
    }
    SECTION("the singular cone of the weighted projective plane") {
        const auto fan = p112_fan();
        // cone 2 lists rays (-1,-2), (1,0); generators aligned with that order
        CHECK(fan->dual_generators(2) == std::vector<CharVec>{{0, -1}, {2, -1}});
    }
    SECTION("rank one") {
        const auto fan = p1_fan();
        CHECK(fan->dual_generators(0) == std::vector<CharVec>{{1}});
        CHECK(fan->dual_generators(1) == std::vector<CharVec>{{-1}});
    }
    SECTION("pairing normalization") {
        std::mt19937 rng(77);
        for (int trial = 0; trial < 30; ++trial) {
            const Fan f = random_complete_fan_2d(rng);
            for (std::size_t i = 0; i < f.cone_count(); ++i) {
                const auto us = f.dual_generators(i);
                const auto& c = f.cone(i);
                for (std::size_t a = 0; a < us.size(); ++a)
                    for (std::size_t b = 0; b < us.size(); ++b) {
                        const Coord p = dot(us[a], f.rays()[c.ray_indices[b]]);
                        if (a == b)
                            REQUIRE(p > 0);
                        else
                            REQUIRE(p == 0);
                    }
            }
        }
    }
    SECTION("the dual of the dual returns positive multiples of the rays") {
        const auto fan = p112_fan();
        for (std::size_t i = 0; i < fan->cone_count(); ++i) {
            const auto us = fan->dual_generators(i);
            const Fan dual =
                Fan::validate({2, {us[0], us[1]}, {{0, 1}}});
            const auto back = dual.dual_generators(0);
            const auto& c = fan->cone(i);
            for (std::size_t k = 0; k < back.size(); ++k)
                REQUIRE(back[k] == fan->rays()[c.ray_indices[k]]);
        }
    }
}

TEST_CASE("box points") {
    SECTION("unimodular basis") {
        CHECK(box_points(2, {{1, 0}, {0, 1}}) == std::vector<CharVec>{{0, 0}});
    }
    SECTION("index-two parallelepipeds") {
        CHECK(box_points(2, {{0, -1}, {2, -1}}) == std::vector<CharVec>{{0, 0}, {1, -1}});
        CHECK(box_points(2, {{0, 1}, {2, -1}}) == std::vector<CharVec>{{0, 0}, {1, 0}});
    }
    SECTION("dependent generators are rejected") {
        CHECK_THROWS_AS(box_points(2, {{1, 0}, {-2, 0}}), input_error);
    }
    SECTION("count equals the index") {
        std::mt19937 rng(3001);
        for (int trial = 0; trial < 200; ++trial) {
            const CharVec a = random_primitive(rng, 2, 5);
            CharVec b = random_primitive(rng, 2, 5);
            const Int d = linalg::det_of_columns({a, b});
            if (d == 0) continue;
            REQUIRE(Int(box_points(2, {a, b}).size()) == boost::multiprecision::abs(d));
        }
        for (int trial = 0; trial < 50; ++trial) {
            const CharVec a = random_primitive(rng, 3, 3);
            const CharVec b = random_primitive(rng, 3, 3);
            const CharVec c = random_primitive(rng, 3, 3);
            const Int d = linalg::det_of_columns({a, b, c});
            if (d == 0) continue;
            REQUIRE(Int(box_points(3, {a, b, c}).size()) == boost::multiprecision::abs(d));
        }
    }
}

TEST_CASE("walls") {
    SECTION("the projective line has one wall through the origin") {
        const auto ws = p1_fan()->walls();
        REQUIRE(ws.size() == 1);
        CHECK(ws[0].cone_a == 0);
        CHECK(ws[0].cone_b == 1);
        CHECK(ws[0].span_rays.empty());
        CHECK(ws[0].perp == CharVec{1});
    }
    SECTION("the weighted projective plane has three walls") {
        const auto ws = p112_fan()->walls();
        REQUIRE(ws.size() == 3);
        std::set<CharVec> perps;
        for (const Wall& w : ws) perps.insert(w.perp);
        CHECK(perps == std::set<CharVec>{{1, 0}, {0, 1}, {2, -1}});
    }
    SECTION("an incomplete fan has an unpaired facet") {
        const Fan quadrant = Fan::validate({2, {{1, 0}, {0, 1}}, {{0, 1}}});
        CHECK_THROWS_AS(quadrant.walls(), input_error);
    }
    SECTION("perpendicular characters annihilate their spans") {
        std::mt19937 rng(4242);
        for (int trial = 0; trial < 30; ++trial) {
            const Fan f = random_complete_fan_2d(rng);
            for (const Wall& w : f.walls()) {
                REQUIRE(is_primitive(w.perp));
                for (int r : w.span_rays) REQUIRE(dot(w.perp, f.rays()[r]) == 0);
                bool leading_positive = false;
                for (Coord c : w.perp) {
                    if (c != 0) {
                        leading_positive = c > 0;
                        break;
                    }
                }
                REQUIRE(leading_positive);
            }
        }
    }
}

TEST_CASE("the fan over the faces of a cube") {
    const Fan cube = Fan::validate({3,
                                    {{1, 1, 1},
                                     {1, 1, -1},
                                     {1, -1, 1},
                                     {1, -1, -1},
                                     {-1, 1, 1},
                                     {-1, 1, -1},
                                     {-1, -1, 1},
                                     {-1, -1, -1}},
                                    {{0, 1, 2, 3},
                                     {4, 5, 6, 7},
                                     {0, 1, 4, 5},
                                     {2, 3, 6, 7},
                                     {0, 2, 4, 6},
                                     {1, 3, 5, 7}}});
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(cube.classify(i) == ConeClass::non_simplicial);
    // walls exist even though completeness is undefined for this fan
    const auto ws = cube.walls();
    CHECK(ws.size() == 12);
    for (const Wall& w : ws) {
        REQUIRE(w.span_rays.size() == 2);
        REQUIRE(is_primitive(w.perp));
        for (int r : w.span_rays) REQUIRE(dot(w.perp, cube.rays()[r]) == 0);
    }
    SECTION("an interior generator is rejected") {
        CHECK_THROWS_AS(Fan::validate({3,
                                       {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}, {1, 0, 0}},
                                       {{0, 1, 2, 3, 4}}}),
                        input_error);
    }
}

TEST_CASE("random complete fans validate and pair facets") {
    std::mt19937 rng(616);
    for (int trial = 0; trial < 60; ++trial) {
        const Fan f = random_complete_fan_2d(rng, 5);
        REQUIRE(f.is_complete());
        REQUIRE(f.walls().size() == f.cone_count());
        for (std::size_t i = 0; i < f.cone_count(); ++i)
            REQUIRE(Int(box_points(2, f.dual_generators(i)).size()) == f.cone(i).multiplicity);
    }
}
