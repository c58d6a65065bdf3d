#pragma once

#include <memory>
#include <random>

#include "torik/torik.hpp"

namespace torik::testing {

inline LaurentPolynomial lp(std::size_t rank,
                            std::initializer_list<std::pair<long long, CharVec>> terms) {
    std::vector<std::pair<Int, CharVec>> ts;
    for (const auto& [c, m] : terms) ts.emplace_back(Int(c), m);
    return LaurentPolynomial::from_terms(rank, ts);
}

// --- fixed fans ------------------------------------------------------------

inline std::shared_ptr<const Fan> p1_fan() {
    return std::make_shared<Fan>(Fan::validate({1, {{1}, {-1}}, {{0}, {1}}}));
}

inline std::shared_ptr<const Fan> p2_fan() {
    return std::make_shared<Fan>(
        Fan::validate({2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}}));
}

inline std::shared_ptr<const Fan> p112_fan() {
    return std::make_shared<Fan>(
        Fan::validate({2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {2, 0}}}));
}

inline std::shared_ptr<const Fan> p1xp1_fan() {
    return std::make_shared<Fan>(Fan::validate(
        {2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}));
}

inline std::shared_ptr<const Fan> hirzebruch2_fan() {
    return std::make_shared<Fan>(Fan::validate(
        {2, {{1, 0}, {0, 1}, {-1, 2}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}));
}

// The displayed piecewise exponential function on the P(1,1,2) fan, in the
// cone order {0,1}, {1,2}, {2,0}.
inline std::vector<LaurentPolynomial> fig_p112_values() {
    return {
        lp(2, {{2, {1, 0}}, {1, {0, 1}}, {-1, {1, 1}}}),  // northeast cone
        lp(2, {{1, {0, 0}}, {1, {-1, 0}}}),               // western cone
        lp(2, {{1, {0, 0}}, {1, {1, -1}}}),               // southern cone
    };
}

// --- random data -----------------------------------------------------------

inline LaurentPolynomial random_laurent(std::mt19937& rng, std::size_t rank,
                                        int max_terms = 6, Coord exp_bound = 5,
                                        long long coeff_bound = 9) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<Coord> exp(-exp_bound, exp_bound);
    std::uniform_int_distribution<long long> coeff(-coeff_bound, coeff_bound);
    LaurentPolynomial f(rank);
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        CharVec m(rank);
        for (Coord& e : m) e = exp(rng);
        f += LaurentPolynomial::monomial(rank, Int(coeff(rng)), std::move(m));
    }
    return f;
}

inline LaurentPolynomial random_nonzero_laurent(std::mt19937& rng, std::size_t rank,
                                                int max_terms = 6, Coord exp_bound = 5,
                                                long long coeff_bound = 9) {
    while (true) {
        LaurentPolynomial f = random_laurent(rng, rank, max_terms, exp_bound, coeff_bound);
        if (!f.is_zero()) return f;
    }
}

inline CharVec random_primitive(std::mt19937& rng, std::size_t rank, Coord bound = 4) {
    std::uniform_int_distribution<Coord> coord(-bound, bound);
    while (true) {
        CharVec v(rank);
        for (Coord& c : v) c = coord(rng);
        if (is_zero_vec(v)) continue;
        return make_primitive(std::move(v));
    }
}

// Angular order on nonzero 2d vectors, counterclockwise from the positive
// x-axis, exact (no floating point): split into upper/lower half-plane, then
// compare by cross product.
inline bool angular_less(const CharVec& a, const CharVec& b) {
    auto half = [](const CharVec& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; };
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return a[0] * b[1] - a[1] * b[0] > 0;
}

// A complete simplicial 2d fan: the four axis rays (which keep every angular
// gap below pi) plus a few random primitive rays, consecutive pairs in
// angular order forming the maximal cones.
inline Fan random_complete_fan_2d(std::mt19937& rng, int extra_rays = 4, Coord bound = 4) {
    std::set<CharVec> rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::uniform_int_distribution<int> count(0, extra_rays);
    const int k = count(rng);
    for (int i = 0; i < k; ++i) rays.insert(random_primitive(rng, 2, bound));

    std::vector<CharVec> sorted(rays.begin(), rays.end());
    std::sort(sorted.begin(), sorted.end(), angular_less);

    FanData d;
    d.rank = 2;
    d.rays = sorted;
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
        d.max_cones.push_back({i, (i + 1) % static_cast<int>(sorted.size())});
    return Fan::validate(std::move(d));
}

inline TCartierDivisor random_divisor(std::mt19937& rng, const Fan& fan, Coord lo = 0,
                                      Coord hi = 5) {
    std::uniform_int_distribution<Coord> coeff(lo, hi);
    TCartierDivisor d;
    for (std::size_t i = 0; i < fan.rays().size(); ++i) d.coefficients.push_back(coeff(rng));
    return d;
}

// --- independent oracles ----------------------------------------------------

// Coefficients of x / (1 - e^{-x}) up to the given order, by long division of
// univariate power series: solve q * (1 - e^{-x}) = x term by term.
inline std::vector<Rat> univariate_todd_oracle(std::size_t order) {
    std::vector<Rat> n(order + 2);  // 1 - e^{-x} = sum_{j>=1} (-1)^{j+1}/j! x^j
    Rat fact = 1;
    for (std::size_t j = 1; j <= order + 1; ++j) {
        fact *= Int(j);
        n[j] = Rat((j % 2) ? 1 : -1) / fact;
    }
    std::vector<Rat> q(order + 1);
    q[0] = Rat(1) / n[1];
    for (std::size_t d = 2; d <= order + 1; ++d) {
        Rat s = 0;
        for (std::size_t k = 0; k + 1 < d; ++k) s += q[k] * n[d - k];
        q[d - 1] = -s / n[1];
    }
    return q;
}

// All semigroup points of the dual cone with pairing against the interior
// vector w at most the bound; membership is tested directly against the ray
// inequalities of the cone.
inline std::vector<CharVec> dual_semigroup_points(const Fan& fan, std::size_t cone, Coord bound) {
    const Cone& c = fan.cone(cone);
    CharVec w(fan.rank(), 0);
    for (int r : c.ray_indices) w = add(w, fan.rays()[r]);

    Coord reach = 0;
    for (const CharVec& u : fan.dual_generators(cone))
        for (Coord e : u) reach = std::max(reach, e < 0 ? -e : e);
    const Coord radius = bound * std::max<Coord>(reach, 1);

    std::vector<CharVec> out;
    CharVec m(fan.rank(), -radius);
    while (true) {
        bool inside = true;
        for (int r : c.ray_indices)
            if (dot(m, fan.rays()[r]) < 0) {
                inside = false;
                break;
            }
        if (inside && dot(m, w) <= bound) out.push_back(m);

        std::size_t i = 0;
        while (i < fan.rank()) {
            if (m[i] < radius) {
                ++m[i];
                break;
            }
            m[i] = -radius;
            ++i;
        }
        if (i == fan.rank()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace torik::testing
