#include "stacky/geometry.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "stacky/errors.hpp"

namespace stacky {

namespace {

// All size-k subsets of {0,...,n-1}, lexicographic.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
        fn(pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

IntMatrix select_columns(const IntMatrix& m, const std::vector<int>& cols) {
    IntMatrix out(m.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = m.col(cols[j]);
    return out;
}

IntVector rational_to_primitive_int(const RatVector& v) {
    Int lcm_den(1);
    for (Eigen::Index i = 0; i < v.size(); ++i)
        lcm_den = boost::multiprecision::lcm(lcm_den, Int(denominator(v(i))));
    IntVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const Rational scaled = v(i) * Rational(lcm_den);
        out(i) = Int(numerator(scaled));
    }
    return primitive(std::move(out));
}

// A basis of linearly independent columns (greedy, by index).
std::vector<int> independent_columns(const IntMatrix& m) {
    std::vector<int> chosen;
    RatMatrix acc(m.rows(), 0);
    for (int j = 0; j < m.cols(); ++j) {
        RatMatrix trial(m.rows(), acc.cols() + 1);
        trial.leftCols(acc.cols()) = acc;
        trial.col(acc.cols()) = to_rational(IntVector(m.col(j)));
        if (rank(trial) == trial.cols()) {
            chosen.push_back(j);
            acc = std::move(trial);
        }
    }
    return chosen;
}

struct IntVectorLess {
    bool operator()(const IntVector& a, const IntVector& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            if (a(i) != b(i)) return a(i) < b(i);
        }
        return false;
    }
};

} // namespace

int cone_dim(const IntMatrix& generators) { return rank(generators); }

std::vector<Facet> cone_facets(const IntMatrix& generators) {
    const int m = static_cast<int>(generators.cols());
    const int k = cone_dim(generators);
    std::vector<Facet> facets;
    if (k == 0) return facets;

    const std::vector<int> basis_cols = independent_columns(generators);
    IntMatrix basis = select_columns(generators, basis_cols); // d x k

    std::set<std::vector<int>> seen;
    for_each_subset(m, k - 1, [&](const std::vector<int>& subset) {
        const IntMatrix sub = select_columns(generators, subset);
        if (rank(sub) != k - 1) return;

        // Normal w = basis*z inside span(generators), orthogonal to the
        // subset; the positive-definite pairing makes this one-dimensional.
        RatMatrix pairing(static_cast<Eigen::Index>(subset.size()), k);
        for (Eigen::Index r = 0; r < pairing.rows(); ++r)
            for (Eigen::Index c = 0; c < pairing.cols(); ++c) {
                Int dot(0);
                for (Eigen::Index i = 0; i < generators.rows(); ++i)
                    dot += sub(i, r) * basis(i, c);
                pairing(r, c) = Rational(dot);
            }
        const RatMatrix kern = kernel_basis(std::move(pairing));
        if (kern.cols() != 1) return;

        RatVector normal_q = RatVector::Zero(generators.rows());
        for (Eigen::Index c = 0; c < k; ++c)
            normal_q += kern(c, 0) * to_rational(IntVector(basis.col(c)));
        IntVector normal = rational_to_primitive_int(normal_q);

        bool nonneg = true, nonpos = true;
        std::vector<int> on_facet;
        for (int j = 0; j < m; ++j) {
            Int dot(0);
            for (Eigen::Index i = 0; i < generators.rows(); ++i)
                dot += normal(i) * generators(i, j);
            if (dot > 0) nonpos = false;
            else if (dot < 0) nonneg = false;
            else on_facet.push_back(j);
        }
        if (!nonneg && !nonpos) return;
        if (!nonneg) normal = -normal;
        if (seen.insert(on_facet).second)
            facets.push_back(Facet{std::move(on_facet), std::move(normal)});
    });

    std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
        return a.generator_indices < b.generator_indices;
    });
    return facets;
}

bool cone_pointed(const IntMatrix& generators) {
    // Drop zero columns: they do not change the cone.
    std::vector<int> nonzero;
    for (int j = 0; j < generators.cols(); ++j)
        if (!IntVector(generators.col(j)).isZero()) nonzero.push_back(j);
    const IntMatrix g = select_columns(generators, nonzero);

    const int m = static_cast<int>(g.cols());
    const int r = rank(g);
    bool positive_circuit = false;
    for (int s = 2; s <= std::min(m, r + 1) && !positive_circuit; ++s) {
        for_each_subset(m, s, [&](const std::vector<int>& subset) {
            if (positive_circuit) return;
            const IntMatrix sub = select_columns(g, subset);
            if (rank(sub) != s - 1) return;
            const RatMatrix kern = kernel_basis(to_rational(sub));
            if (kern.cols() != 1) return;
            bool all_pos = true, all_neg = true;
            for (Eigen::Index i = 0; i < kern.rows(); ++i) {
                if (kern(i, 0) <= 0) all_pos = false;
                if (kern(i, 0) >= 0) all_neg = false;
            }
            if (all_pos || all_neg) positive_circuit = true;
        });
    }
    return !positive_circuit;
}

HForm cone_hform(const IntMatrix& generators) {
    HForm h;
    RatMatrix gt = to_rational(generators).transpose();
    h.equations = kernel_basis(std::move(gt)).transpose();

    const std::vector<Facet> facets = cone_facets(generators);
    h.inequalities = RatMatrix(static_cast<Eigen::Index>(facets.size()), generators.rows());
    for (std::size_t f = 0; f < facets.size(); ++f)
        h.inequalities.row(static_cast<Eigen::Index>(f)) =
            to_rational(facets[f].inward_normal).transpose();
    return h;
}

bool hform_contains(const HForm& h, const RatVector& x) {
    for (Eigen::Index r = 0; r < h.equations.rows(); ++r)
        if (h.equations.row(r).dot(x.transpose()) != 0) return false;
    for (Eigen::Index r = 0; r < h.inequalities.rows(); ++r)
        if (h.inequalities.row(r).dot(x.transpose()) < 0) return false;
    return true;
}

bool cone_contains(const IntMatrix& generators, const IntVector& x) {
    return hform_contains(cone_hform(generators), to_rational(x));
}

std::vector<IntVector> intersection_extreme_rays(const HForm& a, const HForm& b,
                                                 Eigen::Index d) {
    RatMatrix eq(a.equations.rows() + b.equations.rows(), d);
    eq.topRows(a.equations.rows()) = a.equations;
    eq.bottomRows(b.equations.rows()) = b.equations;
    RatMatrix ineq(a.inequalities.rows() + b.inequalities.rows(), d);
    ineq.topRows(a.inequalities.rows()) = a.inequalities;
    ineq.bottomRows(b.inequalities.rows()) = b.inequalities;

    const int rank_eq = rank(eq);
    const int need = static_cast<int>(d) - 1 - rank_eq;
    if (need < 0) return {};

    std::set<IntVector, IntVectorLess> found;
    const int n_ineq = static_cast<int>(ineq.rows());
    for_each_subset(n_ineq, need, [&](const std::vector<int>& subset) {
        RatMatrix tight(eq.rows() + static_cast<Eigen::Index>(subset.size()), d);
        tight.topRows(eq.rows()) = eq;
        for (std::size_t r = 0; r < subset.size(); ++r)
            tight.row(eq.rows() + static_cast<Eigen::Index>(r)) = ineq.row(subset[r]);
        if (rank(tight) != static_cast<int>(d) - 1) return;
        const RatMatrix kern = kernel_basis(std::move(tight));
        if (kern.cols() != 1) return;
        IntVector candidate = rational_to_primitive_int(kern.col(0));

        for (int sign = 0; sign < 2; ++sign) {
            const IntVector ray = sign == 0 ? candidate : IntVector(-candidate);
            bool feasible = true;
            std::vector<Eigen::Index> active;
            const RatVector ray_q = to_rational(ray);
            for (Eigen::Index r = 0; r < ineq.rows(); ++r) {
                const Rational v = ineq.row(r).dot(ray_q.transpose());
                if (v < 0) { feasible = false; break; }
                if (v == 0) active.push_back(r);
            }
            if (!feasible) continue;
            // Extremality: all constraints tight at the ray must cut it to a line.
            RatMatrix all_tight(eq.rows() + static_cast<Eigen::Index>(active.size()), d);
            all_tight.topRows(eq.rows()) = eq;
            for (std::size_t r = 0; r < active.size(); ++r)
                all_tight.row(eq.rows() + static_cast<Eigen::Index>(r)) = ineq.row(active[r]);
            if (rank(std::move(all_tight)) != static_cast<int>(d) - 1) continue;
            found.insert(ray);
        }
    });
    return std::vector<IntVector>(found.begin(), found.end());
}

bool positively_parallel(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size() || a.isZero() || b.isZero()) return false;
    return primitive(a) == primitive(b);
}

} // namespace stacky
