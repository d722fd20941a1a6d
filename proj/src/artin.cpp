#include "stacky/artin.hpp"

#include <algorithm>
#include <sstream>

#include "stacky/errors.hpp"

namespace stacky {

namespace {

std::string index_set_str(const IndexSet& s) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ",";
        out << s[i];
    }
    out << "]";
    return out.str();
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return Int(0);
    Int num(1), den(1);
    for (int i = 0; i < k; ++i) {
        num *= Int(n - i);
        den *= Int(i + 1);
    }
    return num / den;
}

} // namespace

ChowClass pullback(const PullbackMap& map, const ChowClass& cls) {
    if (cls.num_vars() != map.source_rays)
        throw DimensionError("pullback: class has " + std::to_string(cls.num_vars()) +
                             " variables, map expects " + std::to_string(map.source_rays));

    ChowClass out(map.target_rays);
    for (const auto& [e, c] : cls.terms()) {
        ChowClass term = ChowClass::constant(map.target_rays, c);
        for (std::size_t rho = 0; rho < e.size(); ++rho) {
            if (e[rho] == 0) continue;
            ChowClass image(map.target_rays);
            Exponents unit(static_cast<std::size_t>(map.target_rays), 0u);
            for (const auto& [tgt, coeff] : map.images[rho]) {
                ++unit[static_cast<std::size_t>(tgt)];
                image.add_term(unit, Rational(coeff));
                --unit[static_cast<std::size_t>(tgt)];
            }
            for (unsigned power = 0; power < e[rho]; ++power) term = term * image;
        }
        out += term;
    }
    return out;
}

SimplicializationResult simplicialize(const StackyFan& fan) {
    fan.cones(); // require validated

    StackyFan current = fan;
    PullbackMap map = PullbackMap::identity(fan.num_rays());
    std::vector<SubdivisionStep> steps;

    for (int guard = 0; ; ++guard) {
        if (guard > 1000) throw Error("internal: simplicialization did not terminate");
        auto [simplicial, nonsimplicial] = current.is_simplicial();
        if (simplicial) break;
        // cones() is sorted by (dim, ray set), so the first nonsimplicial
        // cone is the canonical next subdivision target.
        const IndexSet sigma = nonsimplicial.front();
        auto [next, step_map, step] = star_subdivide(current, sigma);
        current = std::move(next);
        map = compose(step_map, map);
        steps.push_back(std::move(step));
    }
    return SimplicializationResult{std::move(current), std::move(map), std::move(steps)};
}

Rational integrate_artin(const StackyFan& fan, const ChowClass& cls,
                         const ReductionOptions& options) {
    if (cls.num_vars() != fan.num_rays())
        throw DimensionError("class has wrong number of variables for this fan");
    if (!fan.is_complete())
        throw PreconditionError("integrate_artin: fan is not complete");
    if (cls.is_zero()) return Rational(0);
    const std::optional<int> degree = cls.homogeneous_degree();
    if (!degree || *degree != fan.rank())
        throw PreconditionError("integrate_artin: class is not homogeneous of degree " +
                                std::to_string(fan.rank()));

    const SimplicializationResult simp = simplicialize(fan);
    return integrate_simplicial(simp.fan, pullback(simp.map, cls), options);
}

ChowClass top_chern_class(const StackyFan& fan) {
    fan.cones(); // require validated
    const int d = fan.rank();
    ChowClass product = ChowClass::constant(fan.num_rays(), Rational(1));
    for (int rho = 0; rho < fan.num_rays(); ++rho) {
        ChowClass factor = ChowClass::constant(fan.num_rays(), Rational(1));
        factor += ChowClass::generator(fan.num_rays(), rho);
        product = multiply_truncated(product, factor, d, &fan);
    }
    return product.graded_part(d);
}

Rational euler_artin(const StackyFan& fan, const ReductionOptions& options) {
    if (!fan.is_complete())
        throw PreconditionError("euler_artin: fan is not complete");
    return integrate_artin(fan, top_chern_class(fan), options);
}

Euler3dResult euler_artin_3d(const StackyFan& fan, const MSelector& m_selector) {
    if (fan.rank() != 3)
        throw PreconditionError("euler_artin_3d: fan has rank " + std::to_string(fan.rank()) +
                                ", the closed formula needs rank 3");
    if (!fan.is_complete())
        throw PreconditionError("euler_artin_3d: fan is not complete");

    Euler3dResult result;
    const SimplicializationResult simp = simplicialize(fan);
    result.chi_simplicialization = euler_simplicial(simp.fan);
    result.correction = Rational(0);

    // In rank 3 every nonsimplicial cone is maximal, so the simplicialization
    // performs exactly one step per cone of NS, and the cones created for one
    // of them survive all later steps.  The wall data of each single-cone
    // subdivision can therefore be read off the fully simplicialized fan.
    for (const SubdivisionStep& step : simp.steps) {
        const IndexSet& sigma = step.cone;
        const int s = static_cast<int>(sigma.size());
        const int exceptional = step.new_ray_index;
        const IntVector v_sigma = step.new_ray;

        // New maximal cones contribute (s - 3)/D each.
        for (const IndexSet& tau : simp.fan.max_cones()) {
            if (!std::binary_search(tau.begin(), tau.end(), exceptional)) continue;
            Euler3dTerm term;
            term.sigma = sigma;
            term.new_cone_term = true;
            term.tau = tau;
            term.value = make_rational(Int(s - 3), simp.fan.stacky_multiplicity(tau));
            result.correction += term.value;
            result.terms.push_back(std::move(term));
        }

        IntVector m;
        if (m_selector) {
            m = m_selector(fan, sigma, v_sigma);
        } else {
            m = IntVector::Zero(3);
            for (Eigen::Index i = 0; i < 3; ++i) {
                if (v_sigma(i) != 0) { m(i) = 1; break; }
            }
        }
        Int m_dot_vsigma(0);
        for (Eigen::Index i = 0; i < 3; ++i) m_dot_vsigma += m(i) * v_sigma(i);
        if (m_dot_vsigma == 0)
            throw PreconditionError("euler_artin_3d: chosen m pairs to zero with v_sigma of " +
                                    index_set_str(sigma));

        // Per-ray wall terms.
        for (int rho : sigma) {
            IndexSet ridge{rho, exceptional};
            std::sort(ridge.begin(), ridge.end());
            const WallRelation wall = wall_relation(simp.fan, ridge);

            Rational b_sigma;
            for (const auto& [ray, b] : wall.ridge_coefficients)
                if (ray == exceptional) b_sigma = b;

            IndexSet tau_plus = ridge;
            tau_plus.insert(std::lower_bound(tau_plus.begin(), tau_plus.end(), wall.rho_plus),
                            wall.rho_plus);
            const Int d_plus = simp.fan.stacky_multiplicity(tau_plus);

            Int m_dot_vrho(0);
            const IntVector v_rho = fan.ray(rho);
            for (Eigen::Index i = 0; i < 3; ++i) m_dot_vrho += m(i) * v_rho(i);

            const Rational weight = Rational(binomial(s - 1, 2)) -
                                    Rational(binomial(s, 3)) *
                                        make_rational(m_dot_vrho, m_dot_vsigma);

            Euler3dTerm term;
            term.sigma = sigma;
            term.ray = rho;
            term.value = weight * b_sigma / (wall.beta_plus * Rational(d_plus));
            result.correction += term.value;
            result.terms.push_back(std::move(term));
        }
    }

    result.chi = result.chi_simplicialization + result.correction;
    return result;
}

Rational subdivision_euler_delta(const StackyFan& fan, const IndexSet& sigma) {
    if (!fan.is_simplicial().first)
        throw PreconditionError("subdivision_euler_delta: fan is not simplicial");
    if (!fan.is_complete())
        throw PreconditionError("subdivision_euler_delta: fan is not complete");
    const Cone& cone = fan.cone(sigma);
    const int s = cone.dim;
    if (s < 2) return Rational(0); // subdividing a ray is a relabeling
    if (s != fan.rank())
        throw PreconditionError(
            "subdivision_euler_delta: the (s-1)/D law holds for maximal cones; cone " +
            index_set_str(cone.rays) + " has dimension " + std::to_string(s) + " < " +
            std::to_string(fan.rank()) +
            " (each maximal cone containing it contributes (s-1)/D separately)");

    const Rational delta =
        make_rational(Int(s - 1), fan.stacky_multiplicity(cone.rays));
    auto [subdivided, map, step] = star_subdivide(fan, cone.rays);
    const Rational recomputed = euler_simplicial(subdivided) - euler_simplicial(fan);
    if (recomputed != delta)
        throw Error("internal: Euler delta mismatch for cone " + index_set_str(cone.rays) +
                    ": formula " + to_string(delta) + ", recomputed " + to_string(recomputed));
    return delta;
}

} // namespace stacky
