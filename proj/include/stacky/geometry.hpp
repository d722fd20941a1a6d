#ifndef STACKY_GEOMETRY_HPP
#define STACKY_GEOMETRY_HPP

#include <vector>

#include "stacky/linalg.hpp"

namespace stacky {

// Exact predicates for rational polyhedral cones given by generator columns.
// Everything is brute force over generator subsets; cones at the scale this
// library targets have a handful of rays, so no double-description machinery
// is needed.

/// Dimension of the linear span of the columns.
int cone_dim(const IntMatrix& generators);

struct Facet {
    std::vector<int> generator_indices; // columns lying on the facet, sorted
    IntVector inward_normal;            // primitive, >= 0 on every generator
};

/// All facets ((dim-1)-faces) of the cone spanned by the columns.  A ray has
/// the origin (empty generator set) as its single facet; the origin cone has
/// none.  Candidate supporting hyperplanes are spanned by (dim-1)-subsets of
/// the generators and kept when all generators lie on one side.
std::vector<Facet> cone_facets(const IntMatrix& generators);

/// Strong convexity: no nonnegative nonzero combination of the generators
/// vanishes.  Checked by enumerating positive circuits.
bool cone_pointed(const IntMatrix& generators);

struct HForm {
    RatMatrix equations;    // rows w with <w,x> = 0 on the cone (span cutout)
    RatMatrix inequalities; // rows w with <w,x> >= 0 on the cone
};

HForm cone_hform(const IntMatrix& generators);

bool hform_contains(const HForm& h, const RatVector& x);

/// Membership x in cone(generators).
bool cone_contains(const IntMatrix& generators, const IntVector& x);

/// Extreme rays (primitive integer representatives) of the intersection of
/// two pointed cones given in H-form, in ambient dimension d.
std::vector<IntVector> intersection_extreme_rays(const HForm& a, const HForm& b,
                                                 Eigen::Index d);

/// True iff a and b are positive multiples of one another (both nonzero).
bool positively_parallel(const IntVector& a, const IntVector& b);

} // namespace stacky

#endif
