#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stacky/errors.hpp"
#include "stacky/fan.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace stacky;
using fixtures::vec;

TEST_CASE("example fan validates") {
    StackyFan fan = fixtures::example_fan();
    const ValidationReport& report = fan.validate();
    CHECK(report.ok);
    CHECK(fan.num_rays() == 5);
    CHECK(fan.rank() == 3);
}

TEST_CASE("validation rejects a non-pointed cone") {
    StackyFan fan(2, {vec({1, 0}), vec({-1, 0}), vec({0, 1})}, {{0, 1, 2}});
    const ValidationReport& report = fan.validate();
    CHECK_FALSE(report.ok);
    CHECK(report.axiom == "cone-pointed");
}

TEST_CASE("validation rejects cones overlapping in their interiors") {
    // <(1,0),(1,2)> and <(0,1),(2,1)> overlap; their intersection
    // <(2,1),(1,2)> is a face of neither.
    StackyFan fan(2, {vec({1, 0}), vec({0, 1}), vec({2, 1}), vec({1, 2})},
                  {{0, 3}, {1, 2}});
    const ValidationReport& report = fan.validate();
    CHECK_FALSE(report.ok);
    CHECK(report.axiom == "intersection-not-a-face");
}

TEST_CASE("validation names the other axioms") {
    SUBCASE("zero ray") {
        StackyFan fan(2, {vec({0, 0}), vec({0, 1})}, {{0, 1}});
        CHECK(fan.validate().axiom == "ray-nonzero");
    }
    SUBCASE("duplicate ray direction") {
        StackyFan fan(2, {vec({1, 0}), vec({2, 0}), vec({0, 1})}, {{0, 2}, {1, 2}});
        CHECK(fan.validate().axiom == "rays-distinct");
    }
    SUBCASE("unknown ray index") {
        StackyFan fan(2, {vec({1, 0}), vec({0, 1})}, {{0, 7}});
        CHECK(fan.validate().axiom == "cone-ray-indices");
    }
    SUBCASE("unused ray") {
        StackyFan fan(2, {vec({1, 0}), vec({0, 1}), vec({-1, 0})}, {{0, 1}});
        CHECK(fan.validate().axiom == "ray-unused");
    }
    SUBCASE("generator interior to the cone") {
        StackyFan fan(2, {vec({1, 0}), vec({0, 1}), vec({1, 1})}, {{0, 1, 2}});
        CHECK(fan.validate().axiom == "generator-not-extreme");
    }
    SUBCASE("listed cone contained in another") {
        StackyFan fan(2, {vec({1, 0}), vec({0, 1})}, {{0, 1}, {0}});
        CHECK(fan.validate().axiom == "cone-not-maximal");
    }
    SUBCASE("operations refuse an invalid fan") {
        StackyFan fan(2, {vec({0, 0}), vec({0, 1})}, {{0, 1}});
        CHECK_THROWS_AS(fan.cones(), ValidationError);
    }
}

TEST_CASE("face closure and facets of the example fan") {
    StackyFan fan = fixtures::example_fan();

    // Facets of the nonsimplicial cone are the four walls, not the diagonals.
    const std::vector<IndexSet> facets = fan.facets_of({0, 1, 2, 3});
    CHECK(facets == std::vector<IndexSet>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    CHECK(fan.has_cone({0, 1}));
    CHECK_FALSE(fan.has_cone({0, 2})); // diagonal of sigma
    CHECK_FALSE(fan.has_cone({1, 3}));
    CHECK(fan.has_cone({}));           // origin
    CHECK(fan.cone({0, 1, 2, 3}).dim == 3);
    CHECK_FALSE(fan.cone({0, 1, 2, 3}).is_simplicial());
    CHECK_THROWS_AS(fan.cone({0, 2, 4}), NotFoundError);

    // A ray's single facet is the origin cone.
    CHECK(fan.facets_of({0}) == std::vector<IndexSet>{{}});

    // Simplex facets.
    StackyFan p3 = fixtures::p3_fan();
    CHECK(p3.facets_of({0, 1, 2}) == std::vector<IndexSet>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("is_simplicial reports the nonsimplicial cones") {
    StackyFan fan = fixtures::example_fan();
    const auto [simplicial, nonsimplicial] = fan.is_simplicial();
    CHECK_FALSE(simplicial);
    CHECK(nonsimplicial == std::vector<IndexSet>{{0, 1, 2, 3}});

    CHECK(fixtures::example_fan_subdivided().is_simplicial().first);
    CHECK(fixtures::projective_plane_fan().is_simplicial().first);
    const auto [cube_simplicial, cube_ns] = fixtures::cube_fan().is_simplicial();
    CHECK_FALSE(cube_simplicial);
    CHECK(cube_ns.size() == 6);
}

TEST_CASE("is_complete") {
    CHECK(fixtures::example_fan().is_complete());
    CHECK(fixtures::example_fan_subdivided().is_complete());
    CHECK(fixtures::projective_plane_fan().is_complete());
    CHECK(fixtures::quadrant_fan().is_complete());
    CHECK(fixtures::cube_fan().is_complete());

    StackyFan single(2, {vec({1, 0}), vec({0, 1})}, {{0, 1}});
    single.validate();
    CHECK_FALSE(single.is_complete());

    StackyFan halfline(1, {vec({1})}, {{0}});
    halfline.validate();
    CHECK_FALSE(halfline.is_complete());

    StackyFan line(1, {vec({1}), vec({-1})}, {{0}, {1}});
    line.validate();
    CHECK(line.is_complete());
}

TEST_CASE("stacky multiplicities of the subdivided example fan") {
    StackyFan fan = fixtures::example_fan_subdivided();
    // The cones labeled {v1,v2,v5},{v2,v3,v5},... sit at {0,1,4},{1,2,4},...;
    // the exceptional v0 is index 5.
    CHECK(fan.stacky_multiplicity({0, 1, 4}) == 2);
    CHECK(fan.stacky_multiplicity({1, 2, 4}) == 2);
    CHECK(fan.stacky_multiplicity({2, 3, 4}) == 1);
    CHECK(fan.stacky_multiplicity({0, 3, 4}) == 1);
    CHECK(fan.stacky_multiplicity({0, 1, 5}) == 7);
    CHECK(fan.stacky_multiplicity({1, 2, 5}) == 7);
    CHECK(fan.stacky_multiplicity({2, 3, 5}) == 5);
    CHECK(fan.stacky_multiplicity({0, 3, 5}) == 5);

    // Lower-dimensional cones go through the elementary-divisor route.
    StackyFan stretched(2, {vec({2, 0}), vec({0, 1}), vec({-1, -1})},
                        {{0, 1}, {1, 2}, {0, 2}});
    stretched.validate();
    CHECK(stretched.stacky_multiplicity({0}) == 2);

    CHECK_THROWS_AS(fixtures::example_fan().stacky_multiplicity({0, 1, 2, 3}),
                    PreconditionError);
}

TEST_CASE("multiplicity via elementary divisors agrees with |det| on maximal cones") {
    std::mt19937 rng(31u);
    for (int trial = 0; trial < 6; ++trial) {
        StackyFan fan = fixtures::random_complete_simplicial_fan(rng, trial % 2 == 0 ? 2 : 3);
        for (const IndexSet& c : fan.max_cones()) {
            const Int by_divisors = fan.stacky_multiplicity(c);
            const Int by_det = boost::multiprecision::abs(
                oracles::laplace_determinant(fan.cone_ray_columns(c)));
            CHECK(by_divisors == by_det);
        }
    }
}

TEST_CASE("star subdivision of the example fan") {
    StackyFan fan = fixtures::example_fan();
    auto [subdivided, map, step] = star_subdivide(fan, {0, 1, 2, 3});

    CHECK(step.new_ray_index == 5);
    CHECK(step.new_ray == vec({0, 1, 4}));
    CHECK(subdivided.num_rays() == 6);
    CHECK(subdivided.validate().ok);
    CHECK(subdivided.is_complete());
    CHECK(subdivided.is_simplicial().first);
    CHECK(subdivided.max_cones().size() == 8);
    CHECK(subdivided.has_cone({0, 1, 5}));
    CHECK(subdivided.has_cone({1, 2, 5}));
    CHECK(subdivided.has_cone({2, 3, 5}));
    CHECK(subdivided.has_cone({0, 3, 5}));
    CHECK_FALSE(subdivided.has_cone({0, 1, 2, 3}));
    CHECK(subdivided.has_cone({0, 1, 4})); // untouched cones survive

    // Pullback: x_rho -> y_rho + y0 inside sigma, x4 -> y4 outside.
    using Image = std::vector<std::pair<int, Int>>;
    CHECK(map.images[0] == Image{{0, Int(1)}, {5, Int(1)}});
    CHECK(map.images[4] == Image{{4, Int(1)}});

    CHECK_THROWS_AS(star_subdivide(fan, {0, 2}), NotFoundError);
    CHECK_THROWS_AS(star_subdivide(fan, {0}), PreconditionError);
}

TEST_CASE("star subdivision of a simplicial cone in the quadrant fan") {
    StackyFan fan = fixtures::quadrant_fan();
    auto [subdivided, map, step] = star_subdivide(fan, {0, 1});
    CHECK(step.new_ray == vec({1, 1}));
    CHECK(subdivided.max_cones().size() == 5);
    CHECK(subdivided.is_complete());
    CHECK(subdivided.has_cone({0, 4}));
    CHECK(subdivided.has_cone({1, 4}));
}

TEST_CASE("subdivision keeps support and grows the maximal cone count") {
    std::mt19937 rng(12u);
    for (int trial = 0; trial < 5; ++trial) {
        StackyFan fan = fixtures::random_complete_simplicial_fan(rng, 3);
        std::vector<IndexSet> candidates;
        for (const Cone& c : fan.cones())
            if (c.dim >= 2) candidates.push_back(c.rays);
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        const IndexSet sigma = candidates[pick(rng)];
        auto [subdivided, map, step] = star_subdivide(fan, sigma);
        CHECK(subdivided.validate().ok);
        CHECK(subdivided.is_complete());
        CHECK(subdivided.max_cones().size() > fan.max_cones().size());
    }
}
