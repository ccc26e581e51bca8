#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "strata/errors.hpp"

namespace strata {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "p", "-p", "p/q" with optional sign on the numerator.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto bad = [&] { return ParseError("bad rational literal '" + s + "'"); };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = e > 0 ? base : Rational(1) / base;
    long n = e > 0 ? e : -e;
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

using RatVec = std::vector<Rational>;

inline bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// coordinate index -> coefficient, sorted by index, no zero entries
using SparseVec = std::vector<std::pair<int, Rational>>;

inline SparseVec to_sparse(const RatVec& v) {
    SparseVec s;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] != 0) s.emplace_back(i, v[i]);
    return s;
}

inline RatVec to_dense(const SparseVec& s, int dim) {
    RatVec v(dim, Rational(0));
    for (const auto& [i, c] : s) v[i] = c;
    return v;
}

inline void axpy(RatVec& acc, const Rational& a, const SparseVec& s) {
    for (const auto& [i, c] : s) acc[i] += a * c;
}

} // namespace strata
