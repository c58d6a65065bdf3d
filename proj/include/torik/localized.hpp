#pragma once

#include <algorithm>
#include <span>
#include <sstream>

#include "torik/laurent.hpp"

namespace torik {

// An element of the localization S^{-1} R(T), where S is generated by the
// elements 1 - e^{-lambda} for nonzero lambda in M. Stored as a Laurent
// polynomial numerator over a multiset of denominator characters; the entry
// lambda stands for one factor (1 - e^{-lambda}). The factor list is kept
// sorted, so it behaves as a multiset.
class LocalizedElement {
public:
    LocalizedElement(LaurentPolynomial numerator, std::vector<CharVec> denominator_factors)
        : num_(std::move(numerator)), den_(std::move(denominator_factors)) {
        for (const CharVec& l : den_) {
            require_rank(l, num_.rank(), "denominator factor");
            if (is_zero_vec(l)) throw input_error("LocalizedElement: zero denominator character");
        }
        std::sort(den_.begin(), den_.end());
    }

    explicit LocalizedElement(LaurentPolynomial numerator)
        : LocalizedElement(std::move(numerator), {}) {}

    std::size_t rank() const { return num_.rank(); }
    const LaurentPolynomial& numerator() const { return num_; }
    const std::vector<CharVec>& denominator_factors() const { return den_; }
    bool is_integral_form() const { return den_.empty(); }

    bool operator==(const LocalizedElement& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const LocalizedElement& o) const { return !(*this == o); }

    // The expanded denominator product, prod (1 - e^{-lambda}).
    LaurentPolynomial denominator_expanded() const {
        LaurentPolynomial d = LaurentPolynomial::constant(rank(), 1);
        for (const CharVec& l : den_)
            d = d * LaurentPolynomial::one_minus_exp(rank(), negate(l));
        return d;
    }

    LocalizedElement scaled(const LaurentPolynomial& s) const {
        return LocalizedElement(s * num_, den_);
    }

    // e^m -> e^{-m} on the whole fraction; sends the factor of lambda to the
    // factor of -lambda, since 1 - e^{lambda} = 1 - e^{-(-lambda)}.
    LocalizedElement inverted_characters() const {
        std::vector<CharVec> den;
        den.reserve(den_.size());
        for (const CharVec& l : den_) den.push_back(negate(l));
        return LocalizedElement(num_.inverted_characters(), std::move(den));
    }

    // Removes denominator factors that divide the numerator exactly.
    LocalizedElement cancelled() const {
        LaurentPolynomial num = num_;
        std::vector<CharVec> kept;
        kept.reserve(den_.size());
        for (const CharVec& l : den_) {
            DivisionResult r =
                try_exact_divide(num, LaurentPolynomial::one_minus_exp(rank(), negate(l)));
            if (r.quotient)
                num = *std::move(r.quotient);
            else
                kept.push_back(l);
        }
        return LocalizedElement(std::move(num), std::move(kept));
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '(' << num_.to_string() << ')';
        if (!den_.empty()) {
            os << " / ";
            for (std::size_t i = 0; i < den_.size(); ++i) {
                if (i) os << '*';
                os << "(1-e" << format_charvec(negate(den_[i])) << ')';
            }
        }
        return os.str();
    }

private:
    LaurentPolynomial num_;
    std::vector<CharVec> den_;
};

// Sum over the multiset-union common denominator: for each distinct factor
// the union takes the maximal multiplicity, so every summand is scaled by
// exactly the factors it is missing. Common factors of the result are
// cancelled when exact division succeeds.
inline LocalizedElement sum_localized(std::span<const LocalizedElement> elems) {
    if (elems.empty()) throw input_error("sum_localized: empty input");
    const std::size_t n = elems.front().rank();
    for (const LocalizedElement& e : elems)
        if (e.rank() != n) throw input_error("sum_localized: rank mismatch");

    std::map<CharVec, std::size_t> common;
    for (const LocalizedElement& e : elems) {
        std::map<CharVec, std::size_t> own;
        for (const CharVec& l : e.denominator_factors()) ++own[l];
        for (const auto& [l, k] : own) common[l] = std::max(common[l], k);
    }

    LaurentPolynomial num(n);
    for (const LocalizedElement& e : elems) {
        std::map<CharVec, std::size_t> missing = common;
        for (const CharVec& l : e.denominator_factors()) --missing.at(l);
        LaurentPolynomial scaled = e.numerator();
        for (const auto& [l, k] : missing)
            for (std::size_t i = 0; i < k; ++i)
                scaled = scaled * LaurentPolynomial::one_minus_exp(n, negate(l));
        num += scaled;
    }

    std::vector<CharVec> den;
    for (const auto& [l, k] : common)
        for (std::size_t i = 0; i < k; ++i) den.push_back(l);
    return LocalizedElement(std::move(num), std::move(den)).cancelled();
}

inline LocalizedElement sum_localized(const std::vector<LocalizedElement>& elems) {
    return sum_localized(std::span<const LocalizedElement>(elems));
}

// Divides the numerator by every denominator factor in turn; succeeds exactly
// when the element lies in R(T) inside S^{-1} R(T).
inline LaurentPolynomial clear_to_polynomial(const LocalizedElement& x) {
    LaurentPolynomial num = x.numerator();
    for (const CharVec& l : x.denominator_factors()) {
        DivisionResult r =
            try_exact_divide(num, LaurentPolynomial::one_minus_exp(x.rank(), negate(l)));
        if (!r.quotient)
            throw check_error("not integral: denominator factor with character " +
                              format_charvec(l) + " does not divide the numerator");
        num = *std::move(r.quotient);
    }
    return num;
}

}  // namespace torik
