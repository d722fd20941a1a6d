#ifndef STACKY_PULLBACK_HPP
#define STACKY_PULLBACK_HPP

#include <utility>
#include <vector>

#include "stacky/rational.hpp"

namespace stacky {

/// Generator images of a toric morphism pullback f*: each source generator
/// x_rho maps to an integer linear combination of target generators.  A
/// single star subdivision sends x_rho to y_rho + y0 (rho in the subdivided
/// cone) or y_rho; composites accumulate arbitrary nonnegative integers.
struct PullbackMap {
    int source_rays = 0;
    int target_rays = 0;
    // images[rho] = sorted (target index, coefficient) pairs, coefficient != 0
    std::vector<std::vector<std::pair<int, Int>>> images;

    static PullbackMap identity(int num_rays);
};

/// compose(second, first) applies first, then second; the result pulls back
/// classes along the composite subdivision.
PullbackMap compose(const PullbackMap& second, const PullbackMap& first);

} // namespace stacky

#endif
