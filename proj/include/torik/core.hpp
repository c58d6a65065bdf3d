#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace torik {

// All arithmetic is exact: integer data uses arbitrary-precision integers,
// series coefficients use arbitrary-precision rationals. No floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// One coordinate of a lattice vector. Desk-scale inputs keep these small;
// intermediate determinants are computed in Int and checked on conversion.
using Coord = std::int64_t;

// An element of the character lattice M = Z^n (also used for ray generators
// in the dual lattice N). The rank is implied by the vector length and is
// checked against the ambient context on use.
using CharVec = std::vector<Coord>;

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-contract input: bad files, rank mismatches,
// preconditions such as Cartier-ness or simpliciality.
struct input_error : error {
    explicit input_error(const std::string& what) : error(what) {}
};

// A computation ran and determined that a verifiable condition fails:
// wall compatibility, integrality of a localized element, oracle mismatch.
struct check_error : error {
    explicit check_error(const std::string& what) : error(what) {}
};

inline std::string format_charvec(const CharVec& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
    return os.str();
}

inline void require_rank(const CharVec& v, std::size_t rank, const char* what) {
    if (v.size() != rank)
        throw input_error(std::string(what) + ": expected rank " + std::to_string(rank) +
                          ", got vector of length " + std::to_string(v.size()));
}

inline bool is_zero_vec(const CharVec& v) {
    for (Coord c : v)
        if (c != 0) return false;
    return true;
}

inline CharVec negate(const CharVec& v) {
    CharVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

inline CharVec add(const CharVec& a, const CharVec& b) {
    if (a.size() != b.size()) throw input_error("character addition: rank mismatch");
    CharVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline CharVec sub(const CharVec& a, const CharVec& b) {
    if (a.size() != b.size()) throw input_error("character subtraction: rank mismatch");
    CharVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Coord dot(const CharVec& a, const CharVec& b) {
    if (a.size() != b.size()) throw input_error("pairing: rank mismatch");
    Coord s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Coord content_gcd(const CharVec& v) {
    Coord g = 0;
    for (Coord c : v) g = std::gcd(g, c < 0 ? -c : c);
    return g;
}

inline bool is_primitive(const CharVec& v) { return content_gcd(v) == 1; }

// Divides out the content; canonical_sign additionally makes the first
// nonzero entry positive (the representative of {v, -v}).
inline CharVec make_primitive(CharVec v, bool canonical_sign = false) {
    Coord g = content_gcd(v);
    if (g == 0) throw input_error("make_primitive: zero vector");
    for (Coord& c : v) c /= g;
    if (canonical_sign) {
        for (Coord c : v) {
            if (c > 0) break;
            if (c < 0) {
                for (Coord& e : v) e = -e;
                break;
            }
        }
    }
    return v;
}

// The two-argument cpp_rational constructor requires a positive denominator.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw input_error("make_rat: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

inline std::string format_rat(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace torik
