#include "stacky/chow.hpp"

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

void require_complete_simplicial(const StackyFan& fan, const char* op) {
    if (!fan.is_simplicial().first)
        throw PreconditionError(std::string(op) + ": fan is not simplicial");
    if (!fan.is_complete())
        throw PreconditionError(std::string(op) + ": fan is not complete");
}

} // namespace

int monomial_degree(const Exponents& e) {
    int d = 0;
    for (unsigned a : e) d += static_cast<int>(a);
    return d;
}

IndexSet monomial_support(const Exponents& e) {
    IndexSet s;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) s.push_back(static_cast<int>(i));
    return s;
}

bool monomial_is_squarefree(const Exponents& e) {
    return std::all_of(e.begin(), e.end(), [](unsigned a) { return a <= 1; });
}

ChowClass ChowClass::constant(int num_vars, const Rational& value) {
    ChowClass c(num_vars);
    c.add_term(Exponents(static_cast<std::size_t>(num_vars), 0u), value);
    return c;
}

ChowClass ChowClass::monomial(int num_vars, const Exponents& exps, const Rational& coeff) {
    if (static_cast<int>(exps.size()) != num_vars)
        throw DimensionError("monomial exponent vector has wrong length");
    ChowClass c(num_vars);
    c.add_term(exps, coeff);
    return c;
}

ChowClass ChowClass::generator(int num_vars, int var) {
    Exponents e(static_cast<std::size_t>(num_vars), 0u);
    e.at(static_cast<std::size_t>(var)) = 1u;
    return monomial(num_vars, e, Rational(1));
}

Rational ChowClass::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ChowClass::add_term(const Exponents& e, const Rational& coeff) {
    if (static_cast<int>(e.size()) != num_vars_)
        throw DimensionError("exponent vector has wrong length for this class");
    if (coeff == 0) return;
    auto [it, fresh] = terms_.emplace(e, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ChowClass& ChowClass::operator+=(const ChowClass& other) {
    if (other.num_vars_ != num_vars_)
        throw DimensionError("adding classes over different ray sets");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other) {
    if (other.num_vars_ != num_vars_)
        throw DimensionError("subtracting classes over different ray sets");
    for (const auto& [e, c] : other.terms_) add_term(e, Rational(-c));
    return *this;
}

ChowClass& ChowClass::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    if (a.num_vars_ != b.num_vars_)
        throw DimensionError("multiplying classes over different ray sets");
    ChowClass out(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

ChowClass ChowClass::graded_part(int degree) const {
    ChowClass out(num_vars_);
    for (const auto& [e, c] : terms_)
        if (monomial_degree(e) == degree) out.add_term(e, c);
    return out;
}

std::optional<int> ChowClass::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    const int d = monomial_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (monomial_degree(e) != d) return std::nullopt;
    return d;
}

ChowClass multiply_truncated(const ChowClass& a, const ChowClass& b, int max_degree,
                             const StackyFan* fan) {
    if (a.num_vars() != b.num_vars())
        throw DimensionError("multiplying classes over different ray sets");
    ChowClass out(a.num_vars());
    for (const auto& [ea, ca] : a.terms()) {
        const int da = monomial_degree(ea);
        for (const auto& [eb, cb] : b.terms()) {
            if (da + monomial_degree(eb) > max_degree) continue;
            Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            if (fan != nullptr && monomial_is_zero(*fan, e)) continue;
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

SRPresentation sr_presentation(const StackyFan& fan) {
    fan.cones(); // require validated

    SRPresentation p;
    p.linear_relations = fan.ray_matrix(); // row j is rho -> <e_j, v_rho>

    // Minimal nonfaces, level by level: a k-set is a minimal nonface when it
    // is not contained in any cone but all its (k-1)-subsets are.
    const int n = fan.num_rays();
    std::vector<IndexSet> frontier{IndexSet{}}; // face sets of size k-1
    for (int k = 1; k <= n && !frontier.empty(); ++k) {
        std::set<IndexSet> next;
        std::set<IndexSet> rejected;
        for (const IndexSet& base : frontier) {
            const int start = base.empty() ? 0 : base.back() + 1;
            for (int r = start; r < n; ++r) {
                IndexSet candidate = base;
                candidate.push_back(r);
                if (fan.is_face_set(candidate)) {
                    next.insert(std::move(candidate));
                } else {
                    rejected.insert(std::move(candidate));
                }
            }
        }
        for (const IndexSet& candidate : rejected) {
            bool all_subsets_are_faces = true;
            for (std::size_t drop = 0; drop < candidate.size() && all_subsets_are_faces; ++drop) {
                IndexSet sub = candidate;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                if (!fan.is_face_set(sub)) all_subsets_are_faces = false;
            }
            if (all_subsets_are_faces) p.minimal_nonfaces.push_back(candidate);
        }
        frontier.assign(next.begin(), next.end());
    }
    std::sort(p.minimal_nonfaces.begin(), p.minimal_nonfaces.end());
    return p;
}

bool monomial_is_zero(const StackyFan& fan, const Exponents& e) {
    if (static_cast<int>(e.size()) != fan.num_rays())
        throw DimensionError("exponent vector has wrong length for this fan");
    return !fan.is_face_set(monomial_support(e));
}

IrrelevantMembership irrelevant_membership(const StackyFan& fan, const Exponents& e) {
    if (static_cast<int>(e.size()) != fan.num_rays())
        throw DimensionError("exponent vector has wrong length for this fan");
    const int n = fan.num_rays();
    if (n >= 20)
        throw PreconditionError(
            "irrelevant_membership enumerates all ray subsets; limited to fans with < 20 rays");

    IrrelevantMembership result;

    // Route A: divisibility by X_sigma-hat for some maximal cone.
    for (const IndexSet& c : fan.max_cones()) {
        bool divides = true;
        std::size_t next = 0;
        for (int r = 0; r < n && divides; ++r) {
            const bool in_cone = next < c.size() && c[next] == r;
            if (in_cone) ++next;
            else if (e[static_cast<std::size_t>(r)] == 0) divides = false;
        }
        if (divides) {
            result.route_divisor = true;
            break;
        }
    }

    // Route B: membership in (X_rho : rho in S) for every subset S of the
    // rays not contained in a cone, enumerated exhaustively.
    result.route_components = true;
    const IndexSet support = monomial_support(e);
    for (unsigned mask = 0; mask < (1u << n) && result.route_components; ++mask) {
        IndexSet subset;
        for (int r = 0; r < n; ++r)
            if (mask & (1u << r)) subset.push_back(r);
        if (fan.is_face_set(subset)) continue; // not a component
        bool touches = false;
        for (int r : subset)
            if (e[static_cast<std::size_t>(r)] > 0) { touches = true; break; }
        if (!touches) result.route_components = false;
    }

    if (result.route_divisor != result.route_components)
        throw Error("internal: irrelevant-ideal membership routes disagree on " +
                    index_set_str(support));
    result.member = result.route_divisor;
    return result;
}

namespace {

// Memoizing engine for the self-intersection recursion.
class Reducer {
public:
    Reducer(const StackyFan& fan, const ReductionOptions& options)
        : fan_(fan), options_(options), zero_(fan.num_rays()) {}

    ChowClass reduce(const ChowClass& cls) {
        ChowClass out(fan_.num_rays());
        for (const auto& [e, c] : cls.terms()) {
            const ChowClass& reduced = reduce_monomial(e);
            ChowClass scaled = reduced;
            scaled *= c;
            out += scaled;
        }
        return out;
    }

private:
    const ChowClass& reduce_monomial(const Exponents& e) {
        auto memo = memo_.find(e);
        if (memo != memo_.end()) return memo->second;
        if (++steps_ > options_.max_steps)
            throw Error("reduction step cap (" + std::to_string(options_.max_steps) +
                        ") exceeded");

        if (monomial_is_zero(fan_, e))
            return memo_.emplace(e, zero_).first->second;
        if (monomial_is_squarefree(e))
            return memo_.emplace(e, ChowClass::monomial(fan_.num_rays(), e, Rational(1)))
                .first->second;

        // Pivot variable with exponent >= 2.
        int pivot = -1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 2) continue;
            pivot = static_cast<int>(i);
            if (options_.pivot == ReductionOptions::Pivot::lowest_index) break;
        }

        // Maximal cone containing the support.
        const IndexSet support = monomial_support(e);
        const IndexSet* sigma = nullptr;
        for (const IndexSet& c : fan_.max_cones()) {
            if (!std::includes(c.begin(), c.end(), support.begin(), support.end())) continue;
            if (sigma == nullptr) {
                sigma = &c;
            } else if (options_.cone_choice == ReductionOptions::ConeChoice::lex_smallest
                           ? c < *sigma
                           : c > *sigma) {
                sigma = &c;
            }
        }
        if (sigma == nullptr)
            throw Error("internal: nonzero monomial with support " + index_set_str(support) +
                        " contained in no maximal cone");

        const std::size_t pivot_pos = static_cast<std::size_t>(
            std::lower_bound(sigma->begin(), sigma->end(), pivot) - sigma->begin());

        ChowClass result(fan_.num_rays());
        for (int rho = 0; rho < fan_.num_rays(); ++rho) {
            if (std::binary_search(sigma->begin(), sigma->end(), rho)) continue;
            IndexSet extended = support;
            extended.insert(std::lower_bound(extended.begin(), extended.end(), rho), rho);
            if (!fan_.is_face_set(extended)) continue; // rho not in C

            const RatVector& rel = relation(*sigma, rho);
            const Rational coeff = rel(static_cast<Eigen::Index>(pivot_pos));
            if (coeff == 0) continue;

            Exponents next = e;
            --next[static_cast<std::size_t>(pivot)];
            ++next[static_cast<std::size_t>(rho)];
            ChowClass scaled = reduce_monomial(next);
            scaled *= coeff;
            result += scaled;
        }
        return memo_.emplace(e, std::move(result)).first->second;
    }

    // Coefficients b with v_rho + sum_i b_i v_sigma_i = 0, cached per pair.
    const RatVector& relation(const IndexSet& sigma, int rho) {
        const auto key = std::make_pair(sigma, rho);
        auto it = relations_.find(key);
        if (it == relations_.end()) {
            it = relations_
                     .emplace(key, solve_unique(fan_.cone_ray_columns(sigma), fan_.ray(rho)))
                     .first;
        }
        return it->second;
    }

    const StackyFan& fan_;
    ReductionOptions options_;
    ChowClass zero_;
    long steps_ = 0;
    std::map<Exponents, ChowClass> memo_;
    std::map<std::pair<IndexSet, int>, RatVector> relations_;
};

} // namespace

ChowClass reduce_squarefree(const StackyFan& fan, const ChowClass& cls,
                            const ReductionOptions& options) {
    require_complete_simplicial(fan, "reduce_squarefree");
    if (cls.num_vars() != fan.num_rays())
        throw DimensionError("class has wrong number of variables for this fan");
    return Reducer(fan, options).reduce(cls);
}

std::optional<std::pair<IndexSet, Rational>> phi_squarefree(const StackyFan& fan,
                                                            const Exponents& e) {
    require_complete_simplicial(fan, "phi_squarefree");
    if (static_cast<int>(e.size()) != fan.num_rays())
        throw DimensionError("exponent vector has wrong length for this fan");
    if (!monomial_is_squarefree(e))
        throw PreconditionError("phi_squarefree: monomial is not square-free");
    const IndexSet support = monomial_support(e);
    if (!fan.has_cone(support)) return std::nullopt;
    return std::make_pair(support, make_rational(Int(1), fan.stacky_multiplicity(support)));
}

Rational integrate_simplicial(const StackyFan& fan, const ChowClass& cls,
                              const ReductionOptions& options) {
    require_complete_simplicial(fan, "integrate_simplicial");
    if (cls.num_vars() != fan.num_rays())
        throw DimensionError("class has wrong number of variables for this fan");
    const std::optional<int> degree = cls.homogeneous_degree();
    if (cls.is_zero()) return Rational(0);
    if (!degree || *degree != fan.rank())
        throw PreconditionError("integrate_simplicial: class is not homogeneous of degree " +
                                std::to_string(fan.rank()));

    const ChowClass reduced = reduce_squarefree(fan, cls, options);
    Rational total(0);
    for (const auto& [e, c] : reduced.terms()) {
        const auto pairing = phi_squarefree(fan, e);
        if (pairing) total += c * pairing->second;
    }
    return total;
}

WallRelation wall_relation(const StackyFan& fan, const IndexSet& ridge_in) {
    require_complete_simplicial(fan, "wall_relation");
    const Cone& ridge = fan.cone(ridge_in);
    if (ridge.dim != fan.rank() - 1)
        throw PreconditionError("wall_relation: cone " + index_set_str(ridge.rays) +
                                " has dimension " + std::to_string(ridge.dim) + ", expected " +
                                std::to_string(fan.rank() - 1));

    std::vector<int> neighbors;
    for (const IndexSet& tau : fan.max_cones()) {
        if (!std::includes(tau.begin(), tau.end(), ridge.rays.begin(), ridge.rays.end()))
            continue;
        IndexSet extra;
        std::set_difference(tau.begin(), tau.end(), ridge.rays.begin(), ridge.rays.end(),
                            std::back_inserter(extra));
        if (extra.size() != 1)
            throw PreconditionError("wall_relation: cone " + index_set_str(tau) +
                                    " is not simplicial over the ridge");
        neighbors.push_back(extra.front());
    }
    if (neighbors.size() != 2)
        throw PreconditionError("wall_relation: ridge " + index_set_str(ridge.rays) +
                                " lies in " + std::to_string(neighbors.size()) +
                                " maximal cones, expected 2");

    WallRelation w;
    w.ridge = ridge.rays;
    w.rho_plus = std::min(neighbors[0], neighbors[1]);
    w.rho_minus = std::max(neighbors[0], neighbors[1]);
    w.beta_plus = Rational(1);

    // v(rho+) + beta- v(rho-) + sum b_rho v_rho = 0 via the unique solve.
    IntMatrix basis(fan.rank(), fan.rank());
    basis.col(0) = fan.ray(w.rho_minus);
    for (std::size_t i = 0; i < ridge.rays.size(); ++i)
        basis.col(static_cast<Eigen::Index>(i + 1)) = fan.ray(ridge.rays[i]);
    const RatVector coeffs = solve_unique(basis, fan.ray(w.rho_plus));
    w.beta_minus = coeffs(0);
    for (std::size_t i = 0; i < ridge.rays.size(); ++i)
        w.ridge_coefficients.emplace_back(ridge.rays[i],
                                          coeffs(static_cast<Eigen::Index>(i + 1)));
    return w;
}

Rational euler_simplicial(const StackyFan& fan) {
    require_complete_simplicial(fan, "euler_simplicial");
    Rational chi(0);
    for (const IndexSet& c : fan.max_cones())
        chi += make_rational(Int(1), fan.stacky_multiplicity(c));
    return chi;
}

bool is_zero_in_sr(const StackyFan& fan, const ChowClass& cls) {
    if (cls.num_vars() != fan.num_rays())
        throw DimensionError("class has wrong number of variables for this fan");
    ChowClass linear(fan.num_rays());
    for (const auto& [e, c] : cls.terms()) {
        if (monomial_is_zero(fan, e)) continue;
        if (monomial_degree(e) != 1) return false; // undecided here counts as nonzero
        linear.add_term(e, c);
    }
    if (linear.is_zero()) return true;

    RatVector coeffs = RatVector::Zero(fan.num_rays());
    for (const auto& [e, c] : linear.terms()) {
        const IndexSet support = monomial_support(e);
        coeffs(support.front()) = c;
    }
    return in_row_space(fan.ray_matrix(), coeffs);
}

} // namespace stacky
