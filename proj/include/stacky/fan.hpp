#ifndef STACKY_FAN_HPP
#define STACKY_FAN_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stacky/geometry.hpp"
#include "stacky/linalg.hpp"
#include "stacky/pullback.hpp"

namespace stacky {

/// Ray indices of a cone, sorted strictly increasing.  The empty set is the
/// origin cone.
using IndexSet = std::vector<int>;

struct Cone {
    IndexSet rays;
    int dim = 0;                  // dimension of the linear span
    std::vector<IndexSet> facets; // ray sets of the (dim-1)-faces, sorted

    bool is_simplicial() const { return dim == static_cast<int>(rays.size()); }
};

struct ValidationReport {
    bool ok = true;
    std::string axiom;   // name of the first violated axiom, empty if ok
    std::string message; // human-readable witness
};

struct SubdivisionStep {
    IndexSet cone;
    int new_ray_index = -1;
    IntVector new_ray;
};

/// A stacky fan: lattice rank d, one distinguished lattice vector per ray,
/// and the maximal cones as ray-index sets.  Faces, dimensions and facet
/// data are derived by validate() and cached; after a successful validation
/// the object is immutable and safe for concurrent reads.
class StackyFan {
public:
    StackyFan(int rank, std::vector<IntVector> rays, std::vector<IndexSet> max_cones);

    int rank() const { return rank_; }
    int num_rays() const { return static_cast<int>(ray_matrix_.cols()); }
    const IntMatrix& ray_matrix() const { return ray_matrix_; } // d x n, columns
    IntVector ray(int index) const;
    const std::vector<IndexSet>& max_cones() const { return max_cones_; }

    /// Checks the fan axioms, in order: nonzero rays, distinct rays, index
    /// bounds, every ray used, strong convexity, generators extreme, listed
    /// cones maximal, pairwise intersections are common faces.  Stops at the
    /// first violation.  Idempotent; caches the face closure on success.
    const ValidationReport& validate() const;
    bool validated_ok() const { return report_.has_value() && report_->ok; }

    // The queries below require a successfully validated fan and throw
    // ValidationError otherwise.

    /// Face closure: every face of every maximal cone, origin included,
    /// sorted by (dim, ray set).
    const std::vector<Cone>& cones() const;
    const Cone& cone(const IndexSet& rays) const; // NotFoundError if absent
    bool has_cone(const IndexSet& rays) const;
    /// True iff the rays are contained in a single cone (equivalently in
    /// some maximal cone's ray set); this is the Stanley-Reisner face test.
    bool is_face_set(const IndexSet& rays) const;

    std::vector<IndexSet> facets_of(const IndexSet& cone_rays) const;

    /// (all cones simplicial, list of nonsimplicial cones).
    std::pair<bool, std::vector<IndexSet>> is_simplicial() const;

    /// Support covers R^d: the fan is pure of dimension d and every ridge
    /// (facet of a maximal cone) lies in exactly two maximal cones.
    bool is_complete() const;

    /// Order of N_sigma / Z<v_rho : rho in sigma> = product of the
    /// elementary divisors of the d x s matrix of the cone's ray vectors;
    /// equals |det| when s = d.  PreconditionError on nonsimplicial cones.
    Int stacky_multiplicity(const IndexSet& cone_rays) const;

    IntMatrix cone_ray_columns(const IndexSet& cone_rays) const;

private:
    void require_validated() const;

    int rank_;
    IntMatrix ray_matrix_;
    std::vector<IndexSet> max_cones_;

    // validation caches (write-once)
    mutable std::optional<ValidationReport> report_;
    mutable std::vector<Cone> cones_;
    mutable std::map<IndexSet, std::size_t> cone_lookup_;
};

/// Stacky star subdivision at a cone of dimension >= 2: appends the new
/// distinguished vector v0 = sum of the cone's ray vectors as ray index n,
/// replaces every cone containing sigma by <v0, F, tau \ sigma> over the
/// facets F of sigma, and returns the subdivided fan (validated), the
/// pullback map x_rho -> y_rho + y0 for rho in sigma (x_rho -> y_rho
/// otherwise), and the step record.
std::tuple<StackyFan, PullbackMap, SubdivisionStep>
star_subdivide(const StackyFan& fan, const IndexSet& sigma);

} // namespace stacky

#endif
