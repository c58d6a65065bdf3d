#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "torik/core.hpp"

namespace torik {

// An element of the representation ring R(T) = Z[M]: a finite sum of formal
// exponentials c * e^m with integer coefficients and m in Z^rank. Stored
// coefficients are never zero, so equality is structural. Immutable in
// spirit: every operation returns a fresh value.
class LaurentPolynomial {
public:
    using TermMap = std::map<CharVec, Int>;  // lex-ordered by exponent vector

    explicit LaurentPolynomial(std::size_t rank) : rank_(rank) {}

    static LaurentPolynomial zero(std::size_t rank) { return LaurentPolynomial(rank); }

    static LaurentPolynomial constant(std::size_t rank, Int c) {
        LaurentPolynomial p(rank);
        if (c != 0) p.terms_.emplace(CharVec(rank, 0), std::move(c));
        return p;
    }

    static LaurentPolynomial monomial(std::size_t rank, Int c, CharVec m) {
        require_rank(m, rank, "monomial exponent");
        LaurentPolynomial p(rank);
        if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    // e^m
    static LaurentPolynomial exponential(std::size_t rank, CharVec m) {
        return monomial(rank, 1, std::move(m));
    }

    // 1 - e^m  (m may be zero, in which case this is the zero polynomial)
    static LaurentPolynomial one_minus_exp(std::size_t rank, const CharVec& m) {
        LaurentPolynomial p = constant(rank, 1);
        p.add_term(m, -1);
        return p;
    }

    static LaurentPolynomial from_terms(std::size_t rank,
                                        const std::vector<std::pair<Int, CharVec>>& terms) {
        LaurentPolynomial p(rank);
        for (const auto& [c, m] : terms) {
            require_rank(m, rank, "term exponent");
            p.add_term(m, c);
        }
        return p;
    }

    std::size_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool operator==(const LaurentPolynomial& o) const {
        return rank_ == o.rank_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    LaurentPolynomial operator-() const {
        LaurentPolynomial r(rank_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        check_same_rank(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
        check_same_rank(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        a += b;
        return a;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        a -= b;
        return a;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        a.check_same_rank(b);
        LaurentPolynomial r(a.rank_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(add(ma, mb), ca * cb);
        return r;
    }

    friend LaurentPolynomial operator*(const Int& c, const LaurentPolynomial& a) {
        LaurentPolynomial r(a.rank_);
        if (c != 0)
            for (const auto& [m, cc] : a.terms_) r.terms_.emplace(m, c * cc);
        return r;
    }

    // Multiplication by the unit e^m.
    LaurentPolynomial shifted(const CharVec& m) const {
        require_rank(m, rank_, "shift exponent");
        LaurentPolynomial r(rank_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(add(e, m), c);
        return r;
    }

    // The involution e^m -> e^{-m} (forgetting nothing, inverting characters).
    LaurentPolynomial inverted_characters() const {
        LaurentPolynomial r(rank_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(negate(m), c);
        return r;
    }

    // The augmentation R(T) -> Z, e^m -> 1: sum of all coefficients.
    Int augment() const {
        Int s = 0;
        for (const auto& [m, c] : terms_) s += c;
        return s;
    }

    // Canonical text form: terms sorted lex by exponent vector, each rendered
    // c*e[a1,...,an], joined by " + "; the zero element renders "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.str() << "*e" << format_charvec(m);
        }
        return os.str();
    }

private:
    void check_same_rank(const LaurentPolynomial& o) const {
        if (rank_ != o.rank_)
            throw input_error("Laurent arithmetic: rank mismatch (" + std::to_string(rank_) +
                              " vs " + std::to_string(o.rank_) + ")");
    }

    void add_term(const CharVec& m, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::size_t rank_;
    TermMap terms_;
};

namespace detail {

// Componentwise minimum of the support, used to shift a Laurent polynomial
// into the polynomial range Z_{>=0}^n. Only valid for nonzero f.
inline CharVec support_min(const LaurentPolynomial& f) {
    CharVec lo = f.terms().begin()->first;
    for (const auto& [m, c] : f.terms())
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (m[i] < lo[i]) lo[i] = m[i];
    return lo;
}

inline bool exponent_divides(const CharVec& a, const CharVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace detail

struct DivisionResult {
    std::optional<LaurentPolynomial> quotient;  // set iff the division is exact
    LaurentPolynomial remainder;                // first irreducible remainder on failure
};

// Attempts the exact division f / g in Z[M]. Both arguments are shifted by
// units so their supports are nonnegative; then leading terms are eliminated
// under the lex order. Because lex on Z_{>=0}^n is a well-order and leading
// terms are multiplicative, the loop terminates, never gets stuck when g | f,
// and the first stuck leading term certifies non-divisibility.
inline DivisionResult try_exact_divide(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (f.rank() != g.rank()) throw input_error("exact_divide: rank mismatch");
    if (g.is_zero()) throw input_error("exact_divide: division by zero");
    const std::size_t n = f.rank();
    if (f.is_zero()) return {LaurentPolynomial::zero(n), LaurentPolynomial::zero(n)};

    const CharVec mf = detail::support_min(f);
    const CharVec mg = detail::support_min(g);
    LaurentPolynomial cur = f.shifted(negate(mf));
    const LaurentPolynomial gs = g.shifted(negate(mg));

    const auto& glead = *gs.terms().rbegin();
    LaurentPolynomial q(n);
    while (!cur.is_zero()) {
        const auto& lead = *cur.terms().rbegin();
        if (!detail::exponent_divides(glead.first, lead.first) ||
            lead.second % glead.second != 0) {
            return {std::nullopt, cur.shifted(mf)};
        }
        const LaurentPolynomial t =
            LaurentPolynomial::monomial(n, lead.second / glead.second, sub(lead.first, glead.first));
        q += t;
        cur -= t * gs;
    }
    return {q.shifted(sub(mf, mg)), LaurentPolynomial::zero(n)};
}

// f / g, throwing with the offending remainder when g does not divide f.
inline LaurentPolynomial exact_divide(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    DivisionResult r = try_exact_divide(f, g);
    if (!r.quotient)
        throw check_error("exact_divide: not divisible; first irreducible remainder " +
                          r.remainder.to_string());
    return *std::move(r.quotient);
}

// Image of f in Z[M / Z*u] for primitive u != 0, represented over the
// canonical coset representatives (the j-th coordinate reduced into
// [0, |u_j|) for the first j with u_j != 0). f is divisible by (1 - e^u)
// exactly when this image vanishes.
inline LaurentPolynomial cyclo_residue(const LaurentPolynomial& f, const CharVec& u) {
    require_rank(u, f.rank(), "cyclotomic divisor character");
    if (is_zero_vec(u)) throw input_error("divisible_by_cyclo: zero character");
    if (!is_primitive(u)) throw input_error("divisible_by_cyclo: non-primitive character");

    CharVec w = u;
    std::size_t pivot = 0;
    while (w[pivot] == 0) ++pivot;
    if (w[pivot] < 0) w = negate(w);

    LaurentPolynomial image(f.rank());
    for (const auto& [m, c] : f.terms()) {
        Coord mj = m[pivot];
        Coord k = mj >= 0 ? mj / w[pivot] : -((-mj + w[pivot] - 1) / w[pivot]);
        CharVec rep(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) rep[i] = m[i] - k * w[i];
        image += LaurentPolynomial::monomial(f.rank(), c, std::move(rep));
    }
    return image;
}

inline bool divisible_by_cyclo(const LaurentPolynomial& f, const CharVec& u) {
    return cyclo_residue(f, u).is_zero();
}

}  // namespace torik
