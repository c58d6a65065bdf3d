#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "torik/linalg.hpp"

namespace torik {

enum class ConeClass { smooth, simplicial, non_simplicial };

struct Cone {
    std::vector<int> ray_indices;  // as listed in the input
    std::size_t dim = 0;           // rank of the span of the generators
    bool simplicial = false;
    Int multiplicity = 0;  // |det| of the ray matrix; full-dimensional simplicial cones only

    bool operator==(const Cone& o) const { return ray_indices == o.ray_indices; }
};

// A shared codimension-one face of two maximal cones, together with the
// primitive character perpendicular to its span (first nonzero entry
// positive).
struct Wall {
    int cone_a = 0;
    int cone_b = 0;                // cone_a < cone_b
    std::vector<int> span_rays;    // sorted global ray indices of the face
    CharVec perp;

    bool operator==(const Wall& o) const {
        return cone_a == o.cone_a && cone_b == o.cone_b && span_rays == o.span_rays &&
               perp == o.perp;
    }
};

struct FanData {
    std::size_t rank = 0;
    std::vector<CharVec> rays;
    std::vector<std::vector<int>> max_cones;
};

namespace detail {

struct Facet {
    std::vector<int> ray_indices;  // sorted global indices
    CharVec inward_normal;         // primitive, nonnegative on the cone
};

}  // namespace detail

// A validated fan: primitive distinct rays, structurally sound maximal cones,
// and (for full-dimensional simplicial cones) pairwise intersection in common
// faces. Immutable after construction; all queries are pure.
class Fan {
public:
    // Checks the raw data and computes the per-cone caches. Throws
    // input_error describing the first violation found.
    static Fan validate(FanData data) { return Fan(std::move(data)); }

    std::size_t rank() const { return rank_; }
    const std::vector<CharVec>& rays() const { return rays_; }
    const std::vector<Cone>& max_cones() const { return cones_; }
    const Cone& cone(std::size_t i) const { return cones_.at(i); }
    std::size_t cone_count() const { return cones_.size(); }

    bool all_max_cones_full_dim_simplicial() const { return all_full_simplicial_; }

    // Facet pairing plus adjacency connectivity. Defined only when every
    // maximal cone is full-dimensional and simplicial.
    bool is_complete() const {
        if (!all_full_simplicial_)
            throw input_error(
                "is_complete: requires all maximal cones full-dimensional and simplicial");
        return complete_;
    }

    ConeClass classify(std::size_t i) const {
        const Cone& c = cone(i);
        if (!c.simplicial) return ConeClass::non_simplicial;
        if (c.dim == rank_ && c.multiplicity == 1) return ConeClass::smooth;
        return ConeClass::simplicial;
    }

    // The primitive ray generators u_1..u_n of the dual cone, ordered so that
    // <u_i, v_j> = 0 for i != j and > 0 for i = j.
    std::vector<CharVec> dual_generators(std::size_t i) const {
        const Cone& c = cone(i);
        if (!c.simplicial || c.dim != rank_)
            throw input_error("dual_generators: cone " + std::to_string(i) +
                              " is not full-dimensional simplicial");
        std::vector<CharVec> out;
        out.reserve(c.ray_indices.size());
        for (std::size_t k = 0; k < c.ray_indices.size(); ++k) {
            std::vector<CharVec> others;
            for (std::size_t l = 0; l < c.ray_indices.size(); ++l)
                if (l != k) others.push_back(rays_[c.ray_indices[l]]);
            auto u = linalg::kernel_primitive(others, rank_, false);
            if (!u) throw input_error("dual_generators: degenerate cone");
            if (dot(*u, rays_[c.ray_indices[k]]) < 0) *u = negate(*u);
            out.push_back(std::move(*u));
        }
        return out;
    }

    // One wall per shared codimension-one face. Requires every facet of every
    // maximal cone to be paired (the situation of a complete fan).
    std::vector<Wall> walls() const {
        std::map<std::vector<int>, std::vector<std::pair<int, CharVec>>> by_face;
        for (std::size_t i = 0; i < cones_.size(); ++i) {
            if (cones_[i].dim != rank_)
                throw input_error("walls: maximal cone " + std::to_string(i) +
                                  " is not full-dimensional");
            for (const detail::Facet& f : facets(i))
                by_face[f.ray_indices].emplace_back(static_cast<int>(i), f.inward_normal);
        }
        std::vector<Wall> out;
        for (const auto& [face, owners] : by_face) {
            if (owners.size() == 1)
                throw input_error("walls: unpaired facet " + face_string(face) +
                                  " of cone " + std::to_string(owners.front().first) +
                                  " (fan is not complete)");
            if (owners.size() > 2)
                throw input_error("walls: facet " + face_string(face) +
                                  " shared by more than two maximal cones");
            Wall w;
            w.cone_a = std::min(owners[0].first, owners[1].first);
            w.cone_b = std::max(owners[0].first, owners[1].first);
            w.span_rays = face;
            std::vector<CharVec> span;
            for (int r : face) span.push_back(rays_[r]);
            auto perp = linalg::kernel_primitive(span, rank_, true);
            if (!perp) throw input_error("walls: degenerate facet span");
            w.perp = std::move(*perp);
            out.push_back(std::move(w));
        }
        std::sort(out.begin(), out.end(), [](const Wall& a, const Wall& b) {
            return std::tie(a.cone_a, a.cone_b, a.span_rays) <
                   std::tie(b.cone_a, b.cone_b, b.span_rays);
        });
        return out;
    }

    bool operator==(const Fan& o) const {
        return rank_ == o.rank_ && rays_ == o.rays_ && cones_ == o.cones_;
    }
    bool operator!=(const Fan& o) const { return !(*this == o); }

private:
    explicit Fan(FanData data) : rank_(data.rank), rays_(std::move(data.rays)) {
        if (rank_ == 0) throw input_error("fan: rank must be at least 1");
        validate_rays();
        for (std::size_t i = 0; i < data.max_cones.size(); ++i)
            cones_.push_back(validate_cone(data.max_cones[i], i));
        if (cones_.empty()) throw input_error("fan: no maximal cones");
        check_ray_coverage();
        check_pairwise_faces();
        all_full_simplicial_ = true;
        for (const Cone& c : cones_)
            if (!c.simplicial || c.dim != rank_) all_full_simplicial_ = false;
        complete_ = all_full_simplicial_ && compute_complete();
    }

    void validate_rays() {
        std::set<CharVec> seen;
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            require_rank(rays_[i], rank_, "ray generator");
            if (is_zero_vec(rays_[i]))
                throw input_error("fan: ray " + std::to_string(i) + " is zero");
            if (!is_primitive(rays_[i]))
                throw input_error("fan: ray " + std::to_string(i) + " = " +
                                  format_charvec(rays_[i]) + " is not primitive");
            if (!seen.insert(rays_[i]).second)
                throw input_error("fan: duplicate ray " + format_charvec(rays_[i]));
        }
    }

    Cone validate_cone(const std::vector<int>& idx, std::size_t which) {
        const std::string name = "fan: maximal cone " + std::to_string(which);
        if (idx.empty()) throw input_error(name + " has no rays");
        std::set<int> dedupe;
        std::vector<CharVec> gens;
        for (int r : idx) {
            if (r < 0 || static_cast<std::size_t>(r) >= rays_.size())
                throw input_error(name + ": ray index " + std::to_string(r) + " out of range");
            if (!dedupe.insert(r).second)
                throw input_error(name + ": repeated ray index " + std::to_string(r));
            gens.push_back(rays_[r]);
        }
        Cone c;
        c.ray_indices = idx;
        c.dim = linalg::rank_of(gens);
        c.simplicial = (gens.size() == c.dim);
        if (c.simplicial && c.dim == rank_)
            c.multiplicity = boost::multiprecision::abs(linalg::det_of_columns(gens));
        if (!c.simplicial) {
            if (c.dim != rank_)
                throw input_error(name + ": non-simplicial cones are supported only when "
                                         "full-dimensional");
            check_non_simplicial(c, name);
        }
        return c;
    }

    // Pointedness and extremality of the listed generators, via the facet
    // hyperplanes of the cone.
    void check_non_simplicial(const Cone& c, const std::string& name) {
        const std::vector<detail::Facet> fs = facets_of(c);
        std::vector<CharVec> normals;
        for (const detail::Facet& f : fs) normals.push_back(f.inward_normal);
        if (linalg::rank_of(normals) != rank_)
            throw input_error(name + ": cone is not strongly convex");
        for (int r : c.ray_indices) {
            std::vector<CharVec> active;
            for (const detail::Facet& f : fs)
                if (dot(f.inward_normal, rays_[r]) == 0) active.push_back(f.inward_normal);
            if (linalg::rank_of(active) + 1 != rank_)
                throw input_error(name + ": generator " + format_charvec(rays_[r]) +
                                  " is not an extreme ray");
        }
    }

    void check_ray_coverage() const {
        std::vector<bool> used(rays_.size(), false);
        for (const Cone& c : cones_)
            for (int r : c.ray_indices) used[r] = true;
        for (std::size_t i = 0; i < rays_.size(); ++i)
            if (!used[i])
                throw input_error("fan: ray " + std::to_string(i) + " = " +
                                  format_charvec(rays_[i]) + " belongs to no maximal cone");
    }

    // Facets of a full-dimensional cone: supporting hyperplanes spanned by
    // generator subsets, each keeping the whole cone on one side.
    std::vector<detail::Facet> facets_of(const Cone& c) const {
        const std::size_t n = rank_;
        std::vector<detail::Facet> out;
        std::set<CharVec> seen_normals;
        std::vector<int> subset;
        enumerate_subsets(c, n - 1, 0, subset, seen_normals, out);
        return out;
    }

    void enumerate_subsets(const Cone& c, std::size_t want, std::size_t start,
                           std::vector<int>& subset, std::set<CharVec>& seen,
                           std::vector<detail::Facet>& out) const {
        if (subset.size() == want) {
            std::vector<CharVec> span;
            for (int r : subset) span.push_back(rays_[r]);
            auto u = linalg::kernel_primitive(span, rank_, false);
            if (!u) return;
            int pos = 0, neg = 0;
            for (int r : c.ray_indices) {
                const Coord d = dot(*u, rays_[r]);
                if (d > 0) ++pos;
                if (d < 0) ++neg;
            }
            if (pos && neg) return;
            if (neg) *u = negate(*u);
            if (!seen.insert(*u).second) return;
            detail::Facet f;
            for (int r : c.ray_indices)
                if (dot(*u, rays_[r]) == 0) f.ray_indices.push_back(r);
            std::sort(f.ray_indices.begin(), f.ray_indices.end());
            f.inward_normal = std::move(*u);
            out.push_back(std::move(f));
            return;
        }
        if (start >= c.ray_indices.size()) return;
        for (std::size_t i = start; i + (want - subset.size()) <= c.ray_indices.size(); ++i) {
            subset.push_back(c.ray_indices[i]);
            enumerate_subsets(c, want, i + 1, subset, seen, out);
            subset.pop_back();
        }
    }

    std::vector<detail::Facet> facets(std::size_t i) const { return facets_of(cones_[i]); }

    static std::string face_string(const std::vector<int>& face) {
        std::string s = "{";
        for (std::size_t i = 0; i < face.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(face[i]);
        }
        return s + "}";
    }

    // Extreme rays of the intersection of two full-dimensional simplicial
    // cones, from kernels of (rank-1)-subsets of the combined facet normals.
    void check_pairwise_faces() {
        std::vector<bool> eligible(cones_.size(), false);
        std::vector<std::vector<CharVec>> normals(cones_.size());
        for (std::size_t i = 0; i < cones_.size(); ++i) {
            if (!cones_[i].simplicial || cones_[i].dim != rank_) continue;
            eligible[i] = true;
            normals[i] = dual_generators(i);
        }
        for (std::size_t i = 0; i < cones_.size(); ++i) {
            if (!eligible[i]) continue;
            for (std::size_t j = i + 1; j < cones_.size(); ++j)
                if (eligible[j]) check_face_pair(i, j, normals[i], normals[j]);
        }
    }

    void check_face_pair(std::size_t i, std::size_t j, const std::vector<CharVec>& ni,
                         const std::vector<CharVec>& nj) const {
        std::vector<CharVec> combined = ni;
        combined.insert(combined.end(), nj.begin(), nj.end());
        std::set<CharVec> extreme;
        std::vector<std::size_t> subset;
        collect_intersection_rays(combined, rank_ >= 1 ? rank_ - 1 : 0, 0, subset, extreme);

        std::vector<CharVec> ext(extreme.begin(), extreme.end());
        if (!ext.empty() && linalg::rank_of(ext) == rank_)
            throw input_error("fan: maximal cones " + std::to_string(i) + " and " +
                              std::to_string(j) + " have overlapping interiors");

        std::set<CharVec> common;
        for (int r : cones_[i].ray_indices)
            for (int s : cones_[j].ray_indices)
                if (rays_[r] == rays_[s]) common.insert(rays_[r]);
        for (const CharVec& e : ext)
            if (!common.count(e))
                throw input_error("fan: maximal cones " + std::to_string(i) + " and " +
                                  std::to_string(j) + " do not intersect in a common face (" +
                                  format_charvec(e) + " lies in both)");
    }

    void collect_intersection_rays(const std::vector<CharVec>& normals, std::size_t want,
                                   std::size_t start, std::vector<std::size_t>& subset,
                                   std::set<CharVec>& out) const {
        if (subset.size() == want) {
            std::vector<CharVec> span;
            for (std::size_t k : subset) span.push_back(normals[k]);
            auto w = linalg::kernel_primitive(span, rank_, false);
            if (!w) return;
            for (int sgn = 0; sgn < 2; ++sgn) {
                const CharVec cand = sgn ? negate(*w) : *w;
                bool inside = true;
                for (const CharVec& u : normals)
                    if (dot(u, cand) < 0) {
                        inside = false;
                        break;
                    }
                if (inside) out.insert(cand);
            }
            return;
        }
        if (start >= normals.size()) return;
        for (std::size_t k = start; k + (want - subset.size()) <= normals.size(); ++k) {
            subset.push_back(k);
            collect_intersection_rays(normals, want, k + 1, subset, out);
            subset.pop_back();
        }
    }

    bool compute_complete() const {
        std::map<std::vector<int>, std::vector<int>> by_face;
        for (std::size_t i = 0; i < cones_.size(); ++i)
            for (const detail::Facet& f : facets(i))
                by_face[f.ray_indices].push_back(static_cast<int>(i));
        std::vector<std::vector<int>> adj(cones_.size());
        for (const auto& [face, owners] : by_face) {
            if (owners.size() != 2) return false;
            adj[owners[0]].push_back(owners[1]);
            adj[owners[1]].push_back(owners[0]);
        }
        std::vector<bool> visited(cones_.size(), false);
        std::vector<int> stack{0};
        visited[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!visited[w]) {
                    visited[w] = true;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == cones_.size();
    }

    std::size_t rank_;
    std::vector<CharVec> rays_;
    std::vector<Cone> cones_;
    bool all_full_simplicial_ = false;
    bool complete_ = false;
};

inline Fan validate_fan(FanData data) { return Fan::validate(std::move(data)); }

inline bool is_complete(const Fan& fan) { return fan.is_complete(); }

// All lattice points sum c_i * g_i with c_i in [0,1), by brute-force scan of
// the parallelepiped's integer bounding box with exact membership tests. The
// count always equals |det| of the generator matrix.
inline std::vector<CharVec> box_points(std::size_t rank, const std::vector<CharVec>& generators) {
    if (generators.size() != rank)
        throw input_error("box_points: need exactly rank-many generators");
    for (const CharVec& g : generators) require_rank(g, rank, "box generator");
    const linalg::Mat a = linalg::from_columns(generators);
    const Int d = linalg::det(a);
    if (d == 0) throw input_error("box_points: dependent generators");
    const Int absd = boost::multiprecision::abs(d);
    const int sign = d > 0 ? 1 : -1;

    CharVec lo(rank, 0), hi(rank, 0);
    for (std::size_t c = 0; c < rank; ++c)
        for (const CharVec& g : generators) {
            if (g[c] < 0) lo[c] += g[c];
            if (g[c] > 0) hi[c] += g[c];
        }

    std::vector<CharVec> out;
    CharVec x = lo;
    while (true) {
        bool inside = true;
        for (std::size_t i = 0; i < rank && inside; ++i) {
            linalg::Mat m = a;
            for (std::size_t r = 0; r < rank; ++r) m[r][i] = x[r];
            const Int num = sign * linalg::det(std::move(m));
            if (num < 0 || num >= absd) inside = false;
        }
        if (inside) out.push_back(x);

        std::size_t c = 0;
        while (c < rank) {
            if (x[c] < hi[c]) {
                ++x[c];
                break;
            }
            x[c] = lo[c];
            ++c;
        }
        if (c == rank) break;
    }
    std::sort(out.begin(), out.end());
    if (Int(out.size()) != absd)
        throw error("box_points: enumeration count " + std::to_string(out.size()) +
                    " does not match index " + absd.str());
    return out;
}

}  // namespace torik
