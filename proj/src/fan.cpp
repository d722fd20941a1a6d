#include "stacky/fan.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

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

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_includes(const IndexSet& big, const IndexSet& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

} // namespace

StackyFan::StackyFan(int rank, std::vector<IntVector> rays, std::vector<IndexSet> max_cones)
    : rank_(rank), max_cones_(std::move(max_cones)) {
    if (rank < 0) throw DimensionError("fan rank must be nonnegative");
    ray_matrix_ = IntMatrix(rank, static_cast<Eigen::Index>(rays.size()));
    for (std::size_t j = 0; j < rays.size(); ++j) {
        if (rays[j].size() != rank)
            throw DimensionError("ray " + std::to_string(j) + " has length " +
                                 std::to_string(rays[j].size()) + ", expected rank " +
                                 std::to_string(rank));
        ray_matrix_.col(static_cast<Eigen::Index>(j)) = rays[j];
    }
    for (IndexSet& c : max_cones_) std::sort(c.begin(), c.end());
}

IntVector StackyFan::ray(int index) const {
    if (index < 0 || index >= num_rays())
        throw NotFoundError("ray index " + std::to_string(index) + " out of range");
    return ray_matrix_.col(index);
}

IntMatrix StackyFan::cone_ray_columns(const IndexSet& cone_rays) const {
    IntMatrix m(rank_, static_cast<Eigen::Index>(cone_rays.size()));
    for (std::size_t j = 0; j < cone_rays.size(); ++j) {
        const int r = cone_rays[j];
        if (r < 0 || r >= num_rays())
            throw NotFoundError("ray index " + std::to_string(r) + " out of range");
        m.col(static_cast<Eigen::Index>(j)) = ray_matrix_.col(r);
    }
    return m;
}

namespace {

// Face closure of one cone by walking facets; returns global ray sets.
std::vector<IndexSet> faces_of_cone(const StackyFan& fan, const IndexSet& cone_rays,
                                    std::map<IndexSet, std::vector<IndexSet>>& facet_cache) {
    std::set<IndexSet> seen;
    std::vector<IndexSet> stack{cone_rays};
    while (!stack.empty()) {
        IndexSet current = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(current).second) continue;
        auto it = facet_cache.find(current);
        if (it == facet_cache.end()) {
            const IntMatrix cols = fan.cone_ray_columns(current);
            std::vector<IndexSet> facet_sets;
            for (const Facet& f : cone_facets(cols)) {
                IndexSet global;
                global.reserve(f.generator_indices.size());
                for (int local : f.generator_indices)
                    global.push_back(current[static_cast<std::size_t>(local)]);
                std::sort(global.begin(), global.end());
                facet_sets.push_back(std::move(global));
            }
            it = facet_cache.emplace(std::move(current), std::move(facet_sets)).first;
        }
        for (const IndexSet& f : it->second) stack.push_back(f);
    }
    return std::vector<IndexSet>(seen.begin(), seen.end());
}

} // namespace

const ValidationReport& StackyFan::validate() const {
    if (report_.has_value()) return *report_;

    auto fail = [&](const std::string& axiom, const std::string& message) -> const ValidationReport& {
        report_ = ValidationReport{false, axiom, message};
        return *report_;
    };

    const int n = num_rays();

    // Nonzero rays.
    for (int j = 0; j < n; ++j) {
        if (IntVector(ray_matrix_.col(j)).isZero())
            return fail("ray-nonzero", "ray " + std::to_string(j) + " is the zero vector");
    }
    // Distinct rays: no two on the same ray of the fan.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (positively_parallel(ray_matrix_.col(i), ray_matrix_.col(j)))
                return fail("rays-distinct", "rays " + std::to_string(i) + " and " +
                                                 std::to_string(j) +
                                                 " are positive multiples of each other");
    // Well-formed cone index sets.
    for (const IndexSet& c : max_cones_) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] < 0 || c[k] >= n)
                return fail("cone-ray-indices", "cone " + index_set_str(c) +
                                                    " references unknown ray " +
                                                    std::to_string(c[k]));
            if (k > 0 && c[k] == c[k - 1])
                return fail("cone-ray-indices", "cone " + index_set_str(c) +
                                                    " lists ray " + std::to_string(c[k]) +
                                                    " twice");
        }
    }
    // Every ray is used.
    {
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        for (const IndexSet& c : max_cones_)
            for (int r : c) used[static_cast<std::size_t>(r)] = true;
        for (int j = 0; j < n; ++j)
            if (!used[static_cast<std::size_t>(j)])
                return fail("ray-unused", "ray " + std::to_string(j) + " lies in no cone");
    }
    // Strong convexity.
    for (const IndexSet& c : max_cones_) {
        if (!cone_pointed(cone_ray_columns(c)))
            return fail("cone-pointed", "cone " + index_set_str(c) + " is not strongly convex");
    }
    // Listed generators must be extreme rays of their cones.
    for (const IndexSet& c : max_cones_) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            IndexSet others = c;
            others.erase(others.begin() + static_cast<std::ptrdiff_t>(k));
            if (others.empty()) continue;
            if (cone_contains(cone_ray_columns(others), ray_matrix_.col(c[k])))
                return fail("generator-not-extreme",
                            "ray " + std::to_string(c[k]) + " is not an extreme ray of cone " +
                                index_set_str(c));
        }
    }
    // Listed cones are maximal (no duplicates, no containments).
    for (std::size_t i = 0; i < max_cones_.size(); ++i)
        for (std::size_t j = 0; j < max_cones_.size(); ++j) {
            if (i == j) continue;
            if (set_includes(max_cones_[j], max_cones_[i]))
                return fail("cone-not-maximal", "listed cone " + index_set_str(max_cones_[i]) +
                                                    " is contained in listed cone " +
                                                    index_set_str(max_cones_[j]));
        }

    // Pairwise intersections are common faces.
    std::map<IndexSet, std::vector<IndexSet>> facet_cache;
    std::vector<std::vector<IndexSet>> face_sets;
    face_sets.reserve(max_cones_.size());
    for (const IndexSet& c : max_cones_)
        face_sets.push_back(faces_of_cone(*this, c, facet_cache));

    std::vector<HForm> hforms;
    hforms.reserve(max_cones_.size());
    for (const IndexSet& c : max_cones_) hforms.push_back(cone_hform(cone_ray_columns(c)));

    for (std::size_t i = 0; i < max_cones_.size(); ++i) {
        for (std::size_t j = i + 1; j < max_cones_.size(); ++j) {
            const IndexSet common = set_intersection(max_cones_[i], max_cones_[j]);
            const auto witness = [&](const std::string& detail) {
                return "cones " + index_set_str(max_cones_[i]) + " and " +
                       index_set_str(max_cones_[j]) + ": " + detail;
            };
            const bool common_face_of_i =
                std::find(face_sets[i].begin(), face_sets[i].end(), common) != face_sets[i].end();
            const bool common_face_of_j =
                std::find(face_sets[j].begin(), face_sets[j].end(), common) != face_sets[j].end();
            if (!common_face_of_i || !common_face_of_j)
                return fail("intersection-not-a-face",
                            witness("common rays " + index_set_str(common) +
                                    " do not span a face of both"));
            const IntMatrix common_cols = cone_ray_columns(common);
            for (const IntVector& r : intersection_extreme_rays(hforms[i], hforms[j], rank_)) {
                if (!cone_contains(common_cols, r)) {
                    std::ostringstream ray_str;
                    ray_str << "(" ;
                    for (Eigen::Index k = 0; k < r.size(); ++k) {
                        if (k) ray_str << ",";
                        ray_str << r(k);
                    }
                    ray_str << ")";
                    return fail("intersection-not-a-face",
                                witness("intersection contains the ray " + ray_str.str() +
                                        " outside the common face " + index_set_str(common)));
                }
            }
        }
    }

    // All axioms hold: cache the face closure.
    std::set<IndexSet> all_faces;
    for (const auto& faces : face_sets)
        all_faces.insert(faces.begin(), faces.end());
    if (max_cones_.empty()) all_faces.insert(IndexSet{});

    cones_.clear();
    cone_lookup_.clear();
    for (const IndexSet& rays : all_faces) {
        Cone c;
        c.rays = rays;
        c.dim = cone_dim(cone_ray_columns(rays));
        auto it = facet_cache.find(rays);
        if (it != facet_cache.end()) {
            c.facets = it->second;
        } else {
            for (const Facet& f : cone_facets(cone_ray_columns(rays))) {
                IndexSet global;
                for (int local : f.generator_indices)
                    global.push_back(rays[static_cast<std::size_t>(local)]);
                std::sort(global.begin(), global.end());
                c.facets.push_back(std::move(global));
            }
        }
        std::sort(c.facets.begin(), c.facets.end());
        cones_.push_back(std::move(c));
    }
    std::sort(cones_.begin(), cones_.end(), [](const Cone& a, const Cone& b) {
        return std::tie(a.dim, a.rays) < std::tie(b.dim, b.rays);
    });
    for (std::size_t i = 0; i < cones_.size(); ++i) cone_lookup_[cones_[i].rays] = i;

    report_ = ValidationReport{};
    return *report_;
}

void StackyFan::require_validated() const {
    validate();
    if (!report_->ok)
        throw ValidationError("fan failed validation (" + report_->axiom + "): " +
                              report_->message);
}

const std::vector<Cone>& StackyFan::cones() const {
    require_validated();
    return cones_;
}

bool StackyFan::has_cone(const IndexSet& rays) const {
    require_validated();
    IndexSet key = rays;
    std::sort(key.begin(), key.end());
    return cone_lookup_.count(key) > 0;
}

const Cone& StackyFan::cone(const IndexSet& rays) const {
    require_validated();
    IndexSet key = rays;
    std::sort(key.begin(), key.end());
    auto it = cone_lookup_.find(key);
    if (it == cone_lookup_.end())
        throw NotFoundError("no cone with rays " + index_set_str(key) + " in the fan");
    return cones_[it->second];
}

bool StackyFan::is_face_set(const IndexSet& rays) const {
    require_validated();
    IndexSet key = rays;
    std::sort(key.begin(), key.end());
    for (const IndexSet& c : max_cones_)
        if (set_includes(c, key)) return true;
    return false;
}

std::vector<IndexSet> StackyFan::facets_of(const IndexSet& cone_rays) const {
    return cone(cone_rays).facets;
}

std::pair<bool, std::vector<IndexSet>> StackyFan::is_simplicial() const {
    require_validated();
    std::vector<IndexSet> nonsimplicial;
    for (const Cone& c : cones_)
        if (!c.is_simplicial()) nonsimplicial.push_back(c.rays);
    return {nonsimplicial.empty(), nonsimplicial};
}

bool StackyFan::is_complete() const {
    require_validated();
    if (max_cones_.empty()) return rank_ == 0;
    std::map<IndexSet, int> ridge_count;
    for (const IndexSet& c : max_cones_) {
        const Cone& data = cone(c);
        if (data.dim != rank_) return false; // not pure full-dimensional
        for (const IndexSet& f : data.facets) ++ridge_count[f];
    }
    for (const auto& [ridge, count] : ridge_count)
        if (count != 2) return false;
    return true;
}

Int StackyFan::stacky_multiplicity(const IndexSet& cone_rays) const {
    const Cone& c = cone(cone_rays);
    if (!c.is_simplicial())
        throw PreconditionError("stacky multiplicity of nonsimplicial cone " +
                                index_set_str(c.rays));
    Int d(1);
    for (const Int& e : elementary_divisors(cone_ray_columns(c.rays))) d *= e;
    return d;
}

PullbackMap PullbackMap::identity(int num_rays) {
    PullbackMap m;
    m.source_rays = num_rays;
    m.target_rays = num_rays;
    m.images.resize(static_cast<std::size_t>(num_rays));
    for (int i = 0; i < num_rays; ++i) m.images[static_cast<std::size_t>(i)] = {{i, Int(1)}};
    return m;
}

PullbackMap compose(const PullbackMap& second, const PullbackMap& first) {
    if (first.target_rays != second.source_rays)
        throw DimensionError("compose: pullback maps do not chain");
    PullbackMap out;
    out.source_rays = first.source_rays;
    out.target_rays = second.target_rays;
    out.images.resize(first.images.size());
    for (std::size_t rho = 0; rho < first.images.size(); ++rho) {
        std::map<int, Int> acc;
        for (const auto& [mid, c1] : first.images[rho])
            for (const auto& [tgt, c2] : second.images[static_cast<std::size_t>(mid)])
                acc[tgt] += c1 * c2;
        for (const auto& [tgt, c] : acc)
            if (c != 0) out.images[rho].emplace_back(tgt, c);
    }
    return out;
}

std::tuple<StackyFan, PullbackMap, SubdivisionStep>
star_subdivide(const StackyFan& fan, const IndexSet& sigma_in) {
    const Cone& sigma = fan.cone(sigma_in); // validates fan, NotFoundError if absent
    if (sigma.dim < 2)
        throw PreconditionError("star subdivision needs a cone of dimension >= 2, got " +
                                index_set_str(sigma.rays) + " of dimension " +
                                std::to_string(sigma.dim));

    const int n = fan.num_rays();
    IntVector new_ray = IntVector::Zero(fan.rank());
    for (int r : sigma.rays) new_ray += fan.ray(r);

    std::vector<IntVector> rays;
    rays.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j < n; ++j) rays.push_back(fan.ray(j));
    rays.push_back(new_ray);

    std::vector<IndexSet> kept;
    std::set<IndexSet> created;
    for (const IndexSet& tau : fan.max_cones()) {
        if (!std::includes(tau.begin(), tau.end(), sigma.rays.begin(), sigma.rays.end())) {
            kept.push_back(tau);
            continue;
        }
        const IndexSet rest = set_difference(tau, sigma.rays);
        for (const IndexSet& facet : sigma.facets) {
            IndexSet fresh;
            fresh.reserve(facet.size() + rest.size() + 1);
            fresh.insert(fresh.end(), facet.begin(), facet.end());
            fresh.insert(fresh.end(), rest.begin(), rest.end());
            fresh.push_back(n);
            std::sort(fresh.begin(), fresh.end());
            created.insert(std::move(fresh));
        }
    }
    std::vector<IndexSet> max_cones = std::move(kept);
    max_cones.insert(max_cones.end(), created.begin(), created.end());

    StackyFan subdivided(fan.rank(), std::move(rays), std::move(max_cones));
    const ValidationReport& report = subdivided.validate();
    if (!report.ok)
        throw Error("internal: star subdivision produced an invalid fan (" + report.axiom +
                    "): " + report.message);

    PullbackMap map;
    map.source_rays = n;
    map.target_rays = n + 1;
    map.images.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        map.images[static_cast<std::size_t>(j)] = {{j, Int(1)}};
        if (std::binary_search(sigma.rays.begin(), sigma.rays.end(), j))
            map.images[static_cast<std::size_t>(j)].emplace_back(n, Int(1));
    }

    SubdivisionStep step{sigma.rays, n, new_ray};
    return {std::move(subdivided), std::move(map), std::move(step)};
}

} // namespace stacky
