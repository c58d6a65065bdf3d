#pragma once

#include <memory>

#include "torik/multiplicity.hpp"

namespace torik {

struct WallCheck {
    Wall wall;
    bool ok = false;
    LaurentPolynomial difference;  // f_a - f_b
    LaurentPolynomial residue;     // its image in Z[M / Z*perp], zero iff ok
};

struct PExpReport {
    std::vector<WallCheck> walls;
    bool valid = true;
};

// Checks the wall compatibility of one candidate value per maximal cone:
// across every wall the difference of values must be divisible by
// (1 - e^{perp}). Requires a fan whose facets all pair up.
inline PExpReport check_pexp(const Fan& fan, const std::vector<LaurentPolynomial>& values) {
    if (values.size() != fan.cone_count())
        throw input_error("check_pexp: " + std::to_string(fan.cone_count()) +
                          " maximal cones but " + std::to_string(values.size()) + " values");
    for (const LaurentPolynomial& f : values)
        if (f.rank() != fan.rank()) throw input_error("check_pexp: value rank mismatch");

    PExpReport report;
    for (const Wall& w : fan.walls()) {
        WallCheck c{w, false, values[w.cone_a] - values[w.cone_b], LaurentPolynomial(fan.rank())};
        c.residue = cyclo_residue(c.difference, w.perp);
        c.ok = c.residue.is_zero();
        report.valid = report.valid && c.ok;
        report.walls.push_back(std::move(c));
    }
    return report;
}

// A piecewise exponential function on a complete fan: one element of R(T)
// per maximal cone, compatible across walls. This is the concrete model of
// an operational equivariant K-theory class of the toric variety; the value
// tuple is literally its restriction to the fixed points.
class PiecewiseExponential {
public:
    static PiecewiseExponential checked(std::shared_ptr<const Fan> fan,
                                        std::vector<LaurentPolynomial> values) {
        PExpReport report = check_pexp(*fan, values);
        if (!report.valid) {
            std::string msg = "piecewise exponential: wall compatibility fails at";
            for (const WallCheck& c : report.walls)
                if (!c.ok)
                    msg += " wall(" + std::to_string(c.wall.cone_a) + "," +
                           std::to_string(c.wall.cone_b) + ") perp " + format_charvec(c.wall.perp);
            throw check_error(msg);
        }
        return PiecewiseExponential(std::move(fan), std::move(values));
    }

    // No wall checks; negative tests only.
    static PiecewiseExponential unchecked(std::shared_ptr<const Fan> fan,
                                          std::vector<LaurentPolynomial> values) {
        if (values.size() != fan->cone_count())
            throw input_error("piecewise exponential: value count mismatch");
        return PiecewiseExponential(std::move(fan), std::move(values));
    }

    static PiecewiseExponential constant(std::shared_ptr<const Fan> fan, const Int& c) {
        std::vector<LaurentPolynomial> values(fan->cone_count(),
                                              LaurentPolynomial::constant(fan->rank(), c));
        return PiecewiseExponential(std::move(fan), std::move(values));
    }

    const Fan& fan() const { return *fan_; }
    std::shared_ptr<const Fan> fan_ptr() const { return fan_; }
    const std::vector<LaurentPolynomial>& values() const { return values_; }
    const LaurentPolynomial& value(std::size_t cone) const { return values_.at(cone); }

    // The image in prod_p R(T) over the fixed points, indexed by maximal
    // cone. The class is determined by this tuple.
    const std::vector<LaurentPolynomial>& restrict_to_fixed_points() const { return values_; }

    bool operator==(const PiecewiseExponential& o) const {
        return *fan_ == *o.fan_ && values_ == o.values_;
    }

    friend PiecewiseExponential operator+(const PiecewiseExponential& a,
                                          const PiecewiseExponential& b) {
        a.check_same_fan(b);
        std::vector<LaurentPolynomial> values;
        values.reserve(a.values_.size());
        for (std::size_t i = 0; i < a.values_.size(); ++i)
            values.push_back(a.values_[i] + b.values_[i]);
        return checked(a.fan_, std::move(values));
    }

    friend PiecewiseExponential operator*(const PiecewiseExponential& a,
                                          const PiecewiseExponential& b) {
        a.check_same_fan(b);
        std::vector<LaurentPolynomial> values;
        values.reserve(a.values_.size());
        for (std::size_t i = 0; i < a.values_.size(); ++i)
            values.push_back(a.values_[i] * b.values_[i]);
        return checked(a.fan_, std::move(values));
    }

    // Global scalar by an element of R(T).
    PiecewiseExponential scaled(const LaurentPolynomial& s) const {
        std::vector<LaurentPolynomial> values;
        values.reserve(values_.size());
        for (const LaurentPolynomial& f : values_) values.push_back(s * f);
        return checked(fan_, std::move(values));
    }

private:
    PiecewiseExponential(std::shared_ptr<const Fan> fan, std::vector<LaurentPolynomial> values)
        : fan_(std::move(fan)), values_(std::move(values)) {}

    void check_same_fan(const PiecewiseExponential& o) const {
        if (*fan_ != *o.fan_)
            throw input_error("piecewise exponential arithmetic: different fans");
    }

    std::shared_ptr<const Fan> fan_;
    std::vector<LaurentPolynomial> values_;
};

// The K-theory class of O(D): e^{m_sigma} on each maximal cone, the
// fixed-point fiber weights of the line bundle. Always wall-compatible,
// since m_sigma - m_tau pairs to zero on the wall span.
inline PiecewiseExponential from_divisor(std::shared_ptr<const Fan> fan,
                                         const TCartierDivisor& d) {
    const VertexData vd = cartier_data(*fan, d);
    std::vector<LaurentPolynomial> values;
    values.reserve(fan->cone_count());
    for (const CharVec& m : vd.vertex)
        values.push_back(LaurentPolynomial::exponential(fan->rank(), m));
    return PiecewiseExponential::checked(std::move(fan), std::move(values));
}

// The pairing chi_T( f * [O_X] ) computed by fixed-point localization: each
// per-cone class is paired with the character-inverse of em_k(sigma), so the
// summand at sigma is the generating function of the vertex cone
// m_sigma + sigma^dual; under this orientation chi_T(O(D)) equals the lattice
// sum over the divisor polytope P_D. The result must clear to an honest
// element of R(T); failure to clear reports "not integral".
inline LaurentPolynomial pair_with_structure_sheaf(const Fan& fan,
                                                   const std::vector<LaurentPolynomial>& classes) {
    if (classes.size() != fan.cone_count())
        throw input_error("localization pairing: one class per maximal cone required");
    if (!fan.is_complete())
        throw input_error("localization pairing: fan is not complete");
    std::vector<LocalizedElement> summands;
    summands.reserve(fan.cone_count());
    for (std::size_t i = 0; i < fan.cone_count(); ++i)
        summands.push_back(em_k(fan, i).inverted_characters().scaled(classes[i]));
    return clear_to_polynomial(sum_localized(summands));
}

inline LaurentPolynomial pushforward_to_point(const PiecewiseExponential& f) {
    return pair_with_structure_sheaf(f.fan(), f.values());
}

}  // namespace torik
