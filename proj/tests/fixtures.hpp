#ifndef STACKY_TEST_FIXTURES_HPP
#define STACKY_TEST_FIXTURES_HPP

// Fans used across the test suites, built in code.  The "example" fan is
// the complete 3D fan with rays
//   v1=(1,0,1) v2=(0,2,1) v3=(-1,0,1) v4=(0,-1,1) v5=(0,0,-1)
// stored at indices 0..4, whose only nonsimplicial cone is <v1,v2,v3,v4>;
// subdividing that cone appends v0 = v1+v2+v3+v4 = (0,1,4) at index 5.

#include <random>
#include <vector>

#include "stacky/artin.hpp"
#include "stacky/fan.hpp"

namespace stacky::fixtures {

inline IntVector vec(const std::vector<long>& entries) {
    IntVector v(static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = Int(entries[i]);
    return v;
}

inline StackyFan example_fan() {
    StackyFan fan(3,
                  {vec({1, 0, 1}), vec({0, 2, 1}), vec({-1, 0, 1}), vec({0, -1, 1}),
                   vec({0, 0, -1})},
                  {{0, 1, 2, 3}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}});
    fan.validate();
    return fan;
}

inline StackyFan example_fan_subdivided() {
    auto [fan, map, step] = star_subdivide(example_fan(), {0, 1, 2, 3});
    return fan;
}

inline StackyFan projective_plane_fan() {
    StackyFan fan(2, {vec({1, 0}), vec({0, 1}), vec({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
    fan.validate();
    return fan;
}

inline StackyFan quadrant_fan() {
    StackyFan fan(2, {vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({0, -1})},
                  {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    fan.validate();
    return fan;
}

// Weighted-projective-plane style fan: multiplicities 1, 1, 2.
inline StackyFan p112_fan() {
    StackyFan fan(2, {vec({1, 0}), vec({0, 1}), vec({-1, -2})}, {{0, 1}, {1, 2}, {0, 2}});
    fan.validate();
    return fan;
}

// Face fan of the cube: all six maximal cones are nonsimplicial.
inline StackyFan cube_fan() {
    std::vector<IntVector> rays;
    for (long x : {-1L, 1L})
        for (long y : {-1L, 1L})
            for (long z : {-1L, 1L}) rays.push_back(vec({x, y, z}));
    // index = 4x' + 2y' + z' with +1 -> 1, -1 -> 0
    const std::vector<IndexSet> faces = {
        {4, 5, 6, 7}, // x = 1
        {0, 1, 2, 3}, // x = -1
        {2, 3, 6, 7}, // y = 1
        {0, 1, 4, 5}, // y = -1
        {1, 3, 5, 7}, // z = 1
        {0, 2, 4, 6}, // z = -1
    };
    StackyFan fan(3, std::move(rays), faces);
    fan.validate();
    return fan;
}

// Octahedron face fan: the eight octants, simplicial and complete.
inline StackyFan octahedron_fan() {
    std::vector<IntVector> rays = {vec({1, 0, 0}),  vec({-1, 0, 0}), vec({0, 1, 0}),
                                   vec({0, -1, 0}), vec({0, 0, 1}),  vec({0, 0, -1})};
    std::vector<IndexSet> cones;
    for (int x : {0, 1})
        for (int y : {2, 3})
            for (int z : {4, 5}) cones.push_back(IndexSet{x, y, z});
    StackyFan fan(3, std::move(rays), std::move(cones));
    fan.validate();
    return fan;
}

inline StackyFan p3_fan() {
    StackyFan fan(3,
                  {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({-1, -1, -1})},
                  {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    fan.validate();
    return fan;
}

// Random complete simplicial stacky fan: a known complete simplicial base
// with rescaled distinguished vectors, refined by random star subdivisions.
// Valid by construction.
inline StackyFan random_complete_simplicial_fan(std::mt19937& rng, int dim) {
    std::uniform_int_distribution<int> scale(1, 3);
    std::uniform_int_distribution<int> subdivisions(0, 3);

    std::vector<IntVector> rays;
    std::vector<IndexSet> cones;
    if (dim == 2) {
        const StackyFan base = quadrant_fan();
        for (int j = 0; j < base.num_rays(); ++j) rays.push_back(base.ray(j) * Int(scale(rng)));
        cones = base.max_cones();
    } else {
        const StackyFan base = rng() % 2 == 0 ? octahedron_fan() : p3_fan();
        for (int j = 0; j < base.num_rays(); ++j) rays.push_back(base.ray(j) * Int(scale(rng)));
        cones = base.max_cones();
    }
    StackyFan fan(dim, std::move(rays), std::move(cones));
    fan.validate();

    const int extra = subdivisions(rng);
    for (int k = 0; k < extra; ++k) {
        std::vector<IndexSet> candidates;
        for (const Cone& c : fan.cones())
            if (c.dim >= 2) candidates.push_back(c.rays);
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        auto [next, map, step] = star_subdivide(fan, candidates[pick(rng)]);
        fan = std::move(next);
    }
    return fan;
}

} // namespace stacky::fixtures

#endif
