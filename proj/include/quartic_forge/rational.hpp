#pragma once

// Exact integers and rationals. GMP-backed; mpq values are kept in lowest
// terms with a positive denominator by the backend.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "error.hpp"

namespace quartic_forge {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int numerator_of(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator_of(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator_of(r) == 1; }

/// Canonical text form "p/q" (q = 1 is written out).
inline std::string to_canonical(const Rat& r) {
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Short human form: "p" for integers, "p/q" otherwise.
inline std::string to_display(const Rat& r) {
    return is_integer(r) ? numerator_of(r).str() : to_canonical(r);
}

inline Int parse_int(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error(ErrorCode::Parse, "empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw Error(ErrorCode::Parse, "bad integer '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw Error(ErrorCode::Parse, "bad integer '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Int(s);
}

/// Accepts "n" or "n/d" with d != 0.
inline Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
}

inline Int int_pow(Int base, unsigned exp) {
    Int result = 1;
    while (exp) {
        if (exp & 1U) result *= base;
        base *= base;
        exp >>= 1U;
    }
    return result;
}

inline Rat rat_pow(const Rat& base, unsigned exp) {
    Rat result = 1;
    for (unsigned i = 0; i < exp; ++i) result *= base;
    return result;
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

/// Exact test for being the square of a rational: numerator and denominator
/// must both be perfect squares after reduction.
inline bool is_rational_square(const Rat& r) {
    if (r < 0) return false;
    return is_perfect_square(numerator_of(r)) && is_perfect_square(denominator_of(r));
}

inline std::uint64_t mod_u64(const Int& n, std::uint64_t p) {
    Int r = n % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint64_t>();
}

}  // namespace quartic_forge
