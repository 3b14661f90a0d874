#pragma once

// Exact arbitrary-precision rational scalars and small dense containers.
// All polyhedral computation in this library is exact; there are no
// tolerances anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sympoly {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;  // canonical: q > 0, gcd(|p|,q) = 1

using RatVec = std::vector<Rat>;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline Int floor_div(const Int& a, const Int& b) {
    // b > 0 assumed
    Int q = a / b, r = a % b;
    if (r != 0 && a < 0) --q;
    return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(num(r), den(r)); }

// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
inline std::string rat_str(const Rat& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q <= 0) throw std::invalid_argument("rational with non-positive denominator: " + s);
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

// Dense row-major rational matrix; only as large as desk-scale systems need.
struct RatMat {
    std::size_t rows = 0, cols = 0;
    RatVec a;

    RatMat() = default;
    RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool operator==(const RatMat&) const = default;
};

}  // namespace sympoly
