#pragma once

#include <sstream>

#include "torik/fan.hpp"

namespace torik {

// A T-Cartier divisor presented as one integer coefficient per ray of the
// ambient fan, in the fan's ray order.
struct TCartierDivisor {
    std::vector<Coord> coefficients;

    bool operator==(const TCartierDivisor& o) const { return coefficients == o.coefficients; }
};

// The vertex character m_sigma per maximal cone, defined by
// <m_sigma, v_rho> = -a_rho over the rays of sigma.
struct VertexData {
    std::vector<CharVec> vertex;  // indexed by maximal cone

    const CharVec& at(std::size_t cone) const { return vertex.at(cone); }
};

enum class Positivity { ample, basepoint_free, neither };

inline const char* to_string(Positivity p) {
    switch (p) {
        case Positivity::ample: return "ample";
        case Positivity::basepoint_free: return "basepoint-free";
        default: return "neither";
    }
}

namespace detail {

inline void require_divisor(const Fan& fan, const TCartierDivisor& d) {
    if (d.coefficients.size() != fan.rays().size())
        throw input_error("divisor: expected " + std::to_string(fan.rays().size()) +
                          " coefficients (one per ray), got " +
                          std::to_string(d.coefficients.size()));
}

}  // namespace detail

// Solves for the vertex character of every maximal cone. Fails with the
// offending cone and its fractional solution when the divisor is not Cartier.
inline VertexData cartier_data(const Fan& fan, const TCartierDivisor& d) {
    detail::require_divisor(fan, d);
    VertexData out;
    out.vertex.reserve(fan.cone_count());
    for (std::size_t i = 0; i < fan.cone_count(); ++i) {
        const Cone& c = fan.cone(i);
        if (!c.simplicial || c.dim != fan.rank())
            throw input_error("cartier_data: maximal cone " + std::to_string(i) +
                              " is not full-dimensional simplicial");
        std::vector<CharVec> rows;
        std::vector<Int> rhs;
        for (int r : c.ray_indices) {
            rows.push_back(fan.rays()[r]);
            rhs.emplace_back(-d.coefficients[r]);
        }
        const std::vector<Rat> m = linalg::solve_rows(rows, rhs);
        CharVec mv(fan.rank());
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (boost::multiprecision::denominator(m[k]) != 1) {
                std::ostringstream os;
                os << "not Cartier: cone " << i << " has fractional vertex (";
                for (std::size_t l = 0; l < m.size(); ++l) {
                    if (l) os << ", ";
                    os << format_rat(m[l]);
                }
                os << ")";
                throw input_error(os.str());
            }
            mv[k] = linalg::to_coord(boost::multiprecision::numerator(m[k]));
        }
        out.vertex.push_back(std::move(mv));
    }
    return out;
}

// Support-function criterion: basepoint-free when every vertex character
// satisfies all ray inequalities, ample when additionally strict away from
// the defining cone.
inline Positivity positivity_check(const Fan& fan, const TCartierDivisor& d) {
    const VertexData vd = cartier_data(fan, d);
    bool ample = true;
    for (std::size_t i = 0; i < fan.cone_count(); ++i) {
        const Cone& c = fan.cone(i);
        for (std::size_t r = 0; r < fan.rays().size(); ++r) {
            const Coord slack = dot(vd.at(i), fan.rays()[r]) + d.coefficients[r];
            if (slack < 0) return Positivity::neither;
            const bool in_cone =
                std::find(c.ray_indices.begin(), c.ray_indices.end(), static_cast<int>(r)) !=
                c.ray_indices.end();
            if (!in_cone && slack == 0) ample = false;
        }
    }
    return ample ? Positivity::ample : Positivity::basepoint_free;
}

// All lattice points of P_D = { u : <u, v_rho> >= -a_rho }, enumerated over
// the bounding box of the vertex characters (P_D lies in their convex hull
// for a complete fan). Lex-sorted.
inline std::vector<CharVec> polytope_points(const Fan& fan, const TCartierDivisor& d) {
    detail::require_divisor(fan, d);
    if (!fan.is_complete())
        throw input_error("polytope_points: fan is not complete (polytope may be unbounded)");
    const VertexData vd = cartier_data(fan, d);

    CharVec lo = vd.at(0), hi = vd.at(0);
    for (const CharVec& m : vd.vertex)
        for (std::size_t c = 0; c < m.size(); ++c) {
            lo[c] = std::min(lo[c], m[c]);
            hi[c] = std::max(hi[c], m[c]);
        }

    std::vector<CharVec> out;
    CharVec u = lo;
    while (true) {
        bool inside = true;
        for (std::size_t r = 0; r < fan.rays().size() && inside; ++r)
            if (dot(u, fan.rays()[r]) < -d.coefficients[r]) inside = false;
        if (inside) out.push_back(u);

        std::size_t c = 0;
        while (c < fan.rank()) {
            if (u[c] < hi[c]) {
                ++u[c];
                break;
            }
            u[c] = lo[c];
            ++c;
        }
        if (c == fan.rank()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace torik
