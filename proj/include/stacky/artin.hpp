#ifndef STACKY_ARTIN_HPP
#define STACKY_ARTIN_HPP

#include <functional>
#include <vector>

#include "stacky/chow.hpp"
#include "stacky/fan.hpp"
#include "stacky/pullback.hpp"

namespace stacky {

/// Substitute each generator by its image under the map and expand.
ChowClass pullback(const PullbackMap& map, const ChowClass& cls);

struct SimplicializationResult {
    StackyFan fan;        // complete whenever the source is, always simplicial
    PullbackMap map;      // composite pullback from the source fan
    std::vector<SubdivisionStep> steps;
};

/// Iterated stacky star subdivision until the fan is simplicial, always at
/// the nonsimplicial cone of smallest dimension, ties broken by the
/// lexicographically smallest ray set.  Already-simplicial fans give the
/// identity result with an empty step list.
SimplicializationResult simplicialize(const StackyFan& fan);

/// Degree of a top-degree class on a complete (not necessarily simplicial)
/// stacky fan: pull back to the canonical simplicialization and integrate
/// there.
Rational integrate_artin(const StackyFan& fan, const ChowClass& cls,
                         const ReductionOptions& options = {});

/// Degree-d part of prod_rho (1 + x_rho), the top Chern class of the
/// tangent bundle stack; Stanley-Reisner-zero monomials are dropped while
/// expanding.
ChowClass top_chern_class(const StackyFan& fan);

/// chi = integral of the top Chern class, computed through the
/// simplicialization.
Rational euler_artin(const StackyFan& fan, const ReductionOptions& options = {});

/// Choice of the dual vector m with <m, v_sigma> != 0 used by the 3D
/// formula; the default takes the first standard dual basis vector that
/// pairs nontrivially.  The total is independent of the choice.
using MSelector =
    std::function<IntVector(const StackyFan& fan, const IndexSet& sigma, const IntVector& v_sigma)>;

struct Euler3dTerm {
    IndexSet sigma;           // the nonsimplicial cone this term corrects for
    bool new_cone_term = false;
    IndexSet tau;             // set for new-cone terms
    int ray = -1;             // set for per-ray terms
    Rational value;
};

struct Euler3dResult {
    Rational chi;
    Rational chi_simplicialization;
    Rational correction; // chi - chi_simplicialization
    std::vector<Euler3dTerm> terms;
};

/// Closed-form Euler characteristic for complete rank-3 stacky fans:
/// chi = chi(simplicialization) + per-cone corrections from the wall
/// relations of each single-cone subdivision.  The report itemizes every
/// summand.
Euler3dResult euler_artin_3d(const StackyFan& fan, const MSelector& m_selector = {});

/// (s-1)/D for a maximal cone of a complete simplicial fan, asserted
/// against the recomputed difference of Euler characteristics.  Rays give 0
/// (their subdivision is a relabeling).  For a non-maximal cone the delta is
/// not (s-1)/D -- every maximal cone containing it contributes (s-1)/D_tau
/// separately -- so those are rejected with a PreconditionError.
Rational subdivision_euler_delta(const StackyFan& fan, const IndexSet& sigma);

} // namespace stacky

#endif
