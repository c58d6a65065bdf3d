#pragma once

#include "torik/pexp.hpp"

namespace torik {

// Fixed-point character data of a rank-r equivariant vector bundle: the r
// weights of the fiber at the fixed point of each maximal cone. Nothing here
// certifies that the data comes from an actual bundle; non-integrality of
// the localization sum is the detector for inconsistent data.
struct FixedPointBundleData {
    std::size_t bundle_rank = 0;
    std::vector<std::vector<CharVec>> weights;  // indexed by maximal cone

    void validate(const Fan& fan) const {
        if (weights.size() != fan.cone_count())
            throw input_error("bundle data: one weight list per maximal cone required");
        for (const auto& ws : weights) {
            if (ws.size() != bundle_rank)
                throw input_error("bundle data: weight lists must all have the bundle rank " +
                                  std::to_string(bundle_rank));
            for (const CharVec& w : ws) require_rank(w, fan.rank(), "bundle weight");
        }
    }
};

// chi_T(X, O(D)) by fixed-point localization.
inline LaurentPolynomial chi_T_divisor(const Fan& fan, const TCartierDivisor& d) {
    const VertexData vd = cartier_data(fan, d);
    std::vector<LaurentPolynomial> classes;
    classes.reserve(fan.cone_count());
    for (const CharVec& m : vd.vertex)
        classes.push_back(LaurentPolynomial::exponential(fan.rank(), m));
    return pair_with_structure_sheaf(fan, classes);
}

// chi_T(X, E) from fixed-point weight data: the class at sigma is
// e^{chi_1} + ... + e^{chi_r}.
inline LaurentPolynomial chi_T_bundle(const Fan& fan, const FixedPointBundleData& data) {
    data.validate(fan);
    std::vector<LaurentPolynomial> classes;
    classes.reserve(fan.cone_count());
    for (const auto& ws : data.weights) {
        LaurentPolynomial f(fan.rank());
        for (const CharVec& w : ws) f += LaurentPolynomial::exponential(fan.rank(), w);
        classes.push_back(std::move(f));
    }
    return pair_with_structure_sheaf(fan, classes);
}

// The classical Euler characteristic: forget the T-action.
inline Int chi_classical(const Fan& fan, const TCartierDivisor& d) {
    return chi_T_divisor(fan, d).augment();
}

inline Int chi_classical(const Fan& fan, const FixedPointBundleData& data) {
    return chi_T_bundle(fan, data).augment();
}

struct BrionReport {
    LaurentPolynomial localization;
    LaurentPolynomial polytope_sum;
    std::size_t lattice_point_count = 0;
    bool match = false;
};

// Independent cross-check of the localization answer against the lattice-sum
// of the divisor polytope. Valid only for basepoint-free divisors (higher
// cohomology must vanish for the two sides to agree), so anything else is
// refused.
inline BrionReport brion_check(const Fan& fan, const TCartierDivisor& d) {
    const Positivity pos = positivity_check(fan, d);
    if (pos == Positivity::neither)
        throw input_error("brion_check: divisor is not basepoint-free; "
                          "the polytope oracle does not apply");
    BrionReport report{chi_T_divisor(fan, d), LaurentPolynomial(fan.rank())};
    const std::vector<CharVec> pts = polytope_points(fan, d);
    report.lattice_point_count = pts.size();
    for (const CharVec& m : pts)
        report.polytope_sum += LaurentPolynomial::exponential(fan.rank(), m);
    report.match = report.localization == report.polytope_sum;
    return report;
}

}  // namespace torik
