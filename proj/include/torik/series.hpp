#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "torik/localized.hpp"

namespace torik {

// A homogeneous polynomial with rational coefficients in the formal weight
// symbols t_1..t_n, keyed by exponent multi-index.
using HomoPoly = std::map<CharVec, Rat>;

namespace detail {

inline void homo_add_term(HomoPoly& p, const CharVec& e, const Rat& c) {
    if (c == 0) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline HomoPoly homo_mul(const HomoPoly& a, const HomoPoly& b) {
    HomoPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) homo_add_term(r, add(ea, eb), ca * cb);
    return r;
}

// The linear form <lambda, t> as a degree-1 homogeneous polynomial.
inline HomoPoly linear_form(const CharVec& lambda) {
    HomoPoly r;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] == 0) continue;
        CharVec e(lambda.size(), 0);
        e[i] = 1;
        r.emplace(std::move(e), Rat(lambda[i]));
    }
    return r;
}

}  // namespace detail

inline std::string format_homo_poly(const HomoPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p) {
        if (!first) os << " + ";
        first = false;
        os << format_rat(c) << "*t" << format_charvec(e);
    }
    return os.str();
}

// A truncated graded power series with exact rational coefficients: one
// homogeneous component per total degree 0..order. Arithmetic between two
// series truncates to the minimum of their orders; completion is modelled by
// choosing the truncation order per computation.
class GradedSeries {
public:
    GradedSeries(std::size_t rank, std::size_t order)
        : rank_(rank), components_(order + 1) {}

    static GradedSeries constant(std::size_t rank, std::size_t order, const Rat& c) {
        GradedSeries s(rank, order);
        if (c != 0) s.components_[0].emplace(CharVec(rank, 0), c);
        return s;
    }

    std::size_t rank() const { return rank_; }
    std::size_t order() const { return components_.size() - 1; }
    const HomoPoly& component(std::size_t d) const { return components_.at(d); }

    void add_to_component(std::size_t d, const CharVec& e, const Rat& c) {
        require_rank(e, rank_, "series exponent");
        detail::homo_add_term(components_.at(d), e, c);
    }

    bool operator==(const GradedSeries& o) const {
        return rank_ == o.rank_ && components_ == o.components_;
    }
    bool operator!=(const GradedSeries& o) const { return !(*this == o); }

    GradedSeries truncated(std::size_t order) const {
        GradedSeries r(rank_, std::min(order, this->order()));
        for (std::size_t d = 0; d <= r.order(); ++d) r.components_[d] = components_[d];
        return r;
    }

    friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
        a.check_same_rank(b);
        GradedSeries r(a.rank_, std::min(a.order(), b.order()));
        for (std::size_t d = 0; d <= r.order(); ++d) {
            r.components_[d] = a.components_[d];
            for (const auto& [e, c] : b.components_[d])
                detail::homo_add_term(r.components_[d], e, c);
        }
        return r;
    }

    friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) {
        a.check_same_rank(b);
        GradedSeries r(a.rank_, std::min(a.order(), b.order()));
        for (std::size_t d = 0; d <= r.order(); ++d) {
            r.components_[d] = a.components_[d];
            for (const auto& [e, c] : b.components_[d])
                detail::homo_add_term(r.components_[d], e, -c);
        }
        return r;
    }

    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
        a.check_same_rank(b);
        GradedSeries r(a.rank_, std::min(a.order(), b.order()));
        for (std::size_t da = 0; da <= r.order(); ++da) {
            if (a.components_[da].empty()) continue;
            for (std::size_t db = 0; da + db <= r.order(); ++db) {
                if (b.components_[db].empty()) continue;
                for (const auto& [ea, ca] : a.components_[da])
                    for (const auto& [eb, cb] : b.components_[db])
                        detail::homo_add_term(r.components_[da + db], add(ea, eb), ca * cb);
            }
        }
        return r;
    }

    // Multiplicative inverse of a series with nonzero constant term, solved
    // degree by degree.
    GradedSeries inverse_unit() const {
        if (components_[0].size() != 1) throw input_error("inverse_unit: constant term not a unit");
        const Rat c0 = components_[0].begin()->second;
        GradedSeries r(rank_, order());
        r.components_[0].emplace(CharVec(rank_, 0), Rat(1) / c0);
        for (std::size_t d = 1; d <= order(); ++d) {
            HomoPoly acc;
            for (std::size_t k = 1; k <= d; ++k) {
                if (components_[k].empty()) continue;
                for (const auto& [ea, ca] : components_[k])
                    for (const auto& [eb, cb] : r.components_[d - k])
                        detail::homo_add_term(acc, add(ea, eb), ca * cb);
            }
            for (auto& [e, c] : acc) detail::homo_add_term(r.components_[d], e, -c / c0);
        }
        return r;
    }

    // Lines "deg d: <component>", one per degree.
    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t d = 0; d <= order(); ++d) {
            if (d) os << '\n';
            os << "deg " << d << ": " << format_homo_poly(components_[d]);
        }
        return os.str();
    }

private:
    void check_same_rank(const GradedSeries& o) const {
        if (rank_ != o.rank_) throw input_error("series arithmetic: rank mismatch");
    }

    std::size_t rank_;
    std::vector<HomoPoly> components_;
};

// Substitutes each e^m by the truncated exponential series of <m, t>.
inline GradedSeries exp_expand(const LaurentPolynomial& f, std::size_t order) {
    GradedSeries s(f.rank(), order);
    for (const auto& [m, c] : f.terms()) {
        const HomoPoly lin = detail::linear_form(m);
        HomoPoly power;  // lin^k / k!
        power.emplace(CharVec(f.rank(), 0), Rat(1));
        Rat factorial = 1;
        for (std::size_t k = 0; k <= order; ++k) {
            for (const auto& [e, coeff] : power)
                s.add_to_component(k, e, Rat(c) * coeff / factorial);
            if (k == order) break;
            power = detail::homo_mul(power, lin);
            factorial *= Int(k + 1);
        }
    }
    return s;
}

// The single homogeneous component of degree d of exp_expand(f, d).
inline HomoPoly exp_expand_component(const LaurentPolynomial& f, std::size_t d) {
    HomoPoly r;
    Rat factorial = 1;
    for (std::size_t k = 1; k <= d; ++k) factorial *= Int(k);
    for (const auto& [m, c] : f.terms()) {
        const HomoPoly lin = detail::linear_form(m);
        HomoPoly power;
        power.emplace(CharVec(f.rank(), 0), Rat(1));
        for (std::size_t k = 0; k < d; ++k) power = detail::homo_mul(power, lin);
        for (const auto& [e, coeff] : power) detail::homo_add_term(r, e, Rat(c) * coeff / factorial);
    }
    return r;
}

// (1 - e^{-lambda}) / lambda as a unit series: sum_k (-1)^k lambda^k / (k+1)!.
inline GradedSeries one_minus_exp_over_weight(std::size_t rank, const CharVec& lambda,
                                              std::size_t order) {
    GradedSeries s(rank, order);
    const HomoPoly lin = detail::linear_form(lambda);
    HomoPoly power;
    power.emplace(CharVec(rank, 0), Rat(1));
    Rat factorial = 1;  // (k+1)! at step k
    int sign = 1;
    for (std::size_t k = 0; k <= order; ++k) {
        for (const auto& [e, c] : power) s.add_to_component(k, e, Rat(sign) * c / factorial);
        if (k == order) break;
        power = detail::homo_mul(power, lin);
        factorial *= Int(k + 2);
        sign = -sign;
    }
    return s;
}

// Product over the weights of lambda / (1 - e^{-lambda}), truncated at the
// given order; the empty product is the constant 1.
inline GradedSeries todd_series(std::size_t rank, const std::vector<CharVec>& weights,
                                std::size_t order) {
    GradedSeries r = GradedSeries::constant(rank, order, 1);
    for (const CharVec& w : weights) {
        require_rank(w, rank, "Todd weight");
        if (is_zero_vec(w)) throw input_error("todd_series: zero weight");
        r = r * one_minus_exp_over_weight(rank, w, order).inverse_unit();
    }
    return r;
}

// A homogeneous fraction: a rational-coefficient homogeneous numerator over a
// product of linear forms. The represented degree is deg(numerator) minus the
// number of denominator factors.
class ChowFraction {
public:
    ChowFraction(std::size_t rank, HomoPoly numerator, std::size_t numerator_degree,
                 std::vector<CharVec> denominator_factors)
        : rank_(rank),
          num_(std::move(numerator)),
          num_degree_(numerator_degree),
          den_(std::move(denominator_factors)) {
        for (const CharVec& l : den_) {
            require_rank(l, rank_, "ChowFraction denominator");
            if (is_zero_vec(l)) throw input_error("ChowFraction: zero linear form");
        }
        std::sort(den_.begin(), den_.end());
    }

    std::size_t rank() const { return rank_; }
    const HomoPoly& numerator() const { return num_; }
    std::size_t numerator_degree() const { return num_degree_; }
    const std::vector<CharVec>& denominator_factors() const { return den_; }
    long long degree() const {
        return static_cast<long long>(num_degree_) - static_cast<long long>(den_.size());
    }

    bool operator==(const ChowFraction& o) const {
        return rank_ == o.rank_ && num_ == o.num_ && num_degree_ == o.num_degree_ && den_ == o.den_;
    }
    bool operator!=(const ChowFraction& o) const { return !(*this == o); }

    std::string to_string() const {
        std::ostringstream os;
        os << '(' << format_homo_poly(num_) << ')';
        if (!den_.empty()) {
            os << " / ";
            for (std::size_t i = 0; i < den_.size(); ++i) {
                if (i) os << " * ";
                os << '(' << format_homo_poly(detail::linear_form(den_[i])) << ')';
            }
        }
        return os.str();
    }

private:
    std::size_t rank_;
    HomoPoly num_;
    std::size_t num_degree_;
    std::vector<CharVec> den_;
};

// Lowest-degree part of a localized element under the exponential
// substitution: the first nonzero homogeneous component of the expanded
// numerator over the linear forms of the denominator (each 1 - e^{-lambda}
// contributes its lowest term lambda). A nonzero numerator with k terms has a
// nonzero component in degree < k, so the scan below always terminates.
inline ChowFraction lowest_term(const LocalizedElement& x) {
    if (x.numerator().is_zero()) throw input_error("lowest_term: zero numerator");
    for (std::size_t d = 0;; ++d) {
        HomoPoly comp = exp_expand_component(x.numerator(), d);
        if (!comp.empty())
            return ChowFraction(x.rank(), std::move(comp), d, x.denominator_factors());
    }
}

}  // namespace torik
