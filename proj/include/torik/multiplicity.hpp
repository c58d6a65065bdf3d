#pragma once

#include "torik/divisor.hpp"
#include "torik/series.hpp"

namespace torik {

// Equivariant K-theoretic multiplicity of the fixed point of a
// full-dimensional simplicial cone: the multigraded Hilbert series of the
// semigroup algebra of the dual cone,
//
//   ( sum over box points b of e^{-b} )  /  prod_i (1 - e^{-u_i}),
//
// with u_1..u_n the dual generators. The numerator has exactly
// multiplicity-many terms; for a smooth cone it is 1.
inline LocalizedElement em_k(const Fan& fan, std::size_t cone) {
    const std::vector<CharVec> us = fan.dual_generators(cone);
    LaurentPolynomial num(fan.rank());
    for (const CharVec& b : box_points(fan.rank(), us))
        num += LaurentPolynomial::exponential(fan.rank(), negate(b));
    return LocalizedElement(std::move(num), us);
}

// The Brion-Rossmann (Chow-side) multiplicity: the lowest-degree part of
// em_k under the exponential substitution. For a smooth cone this is
// 1 / (u_1 ... u_n).
inline ChowFraction em_a(const Fan& fan, std::size_t cone) {
    return lowest_term(em_k(fan, cone));
}

// The ratio em_k / em_a at a smooth fixed point, expanded to the given
// order: the product over the dual generators u of u / (1 - e^{-u}). For a
// singular cone the ratio is not a unit series and is rejected.
inline GradedSeries todd_at_fixed_point(const Fan& fan, std::size_t cone, std::size_t order) {
    if (fan.classify(cone) != ConeClass::smooth)
        throw input_error("todd_at_fixed_point: cone " + std::to_string(cone) +
                          " is not smooth (the multiplicity ratio is not a unit series)");
    return todd_series(fan.rank(), fan.dual_generators(cone), order);
}

}  // namespace torik
