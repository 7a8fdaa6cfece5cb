#pragma once

// Polynomials over F_p (p < 2^32) and their factorization into monic
// irreducibles: squarefree check, distinct-degree, then Cantor–Zassenhaus
// equal-degree splitting driven by a seeded generator.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace quartic_forge {

class ModPoly {
public:
    explicit ModPoly(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (1ULL << 32)) throw Error(ErrorCode::InvalidArgument, "modulus out of range");
    }
    ModPoly(std::vector<std::uint64_t> coeffs, std::uint64_t p) : ModPoly(p) {
        coeffs_ = std::move(coeffs);
        for (auto& c : coeffs_) c %= p_;
        trim();
    }

    /// Reduction of an integer polynomial; throws on non-integral coefficients.
    static ModPoly reduce(const UniPoly& f, std::uint64_t p) {
        std::vector<std::uint64_t> v;
        v.reserve(f.coeffs().size());
        for (const auto& c : f.coeffs()) {
            if (!is_integer(c)) throw Error(ErrorCode::InvalidArgument, "mod-p reduction needs integer coefficients");
            v.push_back(mod_u64(numerator_of(c), p));
        }
        return ModPoly(std::move(v), p);
    }

    static ModPoly x(std::uint64_t p) { return ModPoly({0, 1}, p); }
    static ModPoly one(std::uint64_t p) { return ModPoly({1}, p); }

    [[nodiscard]] std::uint64_t prime() const noexcept { return p_; }
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] std::uint64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    [[nodiscard]] std::uint64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

    [[nodiscard]] std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    [[nodiscard]] std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    [[nodiscard]] std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
    [[nodiscard]] std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        a %= p_;
        while (e) {
            if (e & 1U) r = mul(r, a);
            a = mul(a, a);
            e >>= 1U;
        }
        return r;
    }
    [[nodiscard]] std::uint64_t inv(std::uint64_t a) const {
        if (a % p_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0 mod p");
        return pow(a, p_ - 2);
    }

    [[nodiscard]] ModPoly monic() const {
        if (is_zero()) return *this;
        const std::uint64_t li = inv(leading());
        std::vector<std::uint64_t> v(coeffs_);
        for (auto& c : v) c = mul(c, li);
        return ModPoly(std::move(v), p_);
    }

    [[nodiscard]] ModPoly derivative() const {
        std::vector<std::uint64_t> v;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(mul(coeffs_[i], i % p_));
        return ModPoly(std::move(v), p_);
    }

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
        check(a, b);
        std::vector<std::uint64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.add(a.coeff(i), b.coeff(i));
        return ModPoly(std::move(v), a.p_);
    }
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
        check(a, b);
        std::vector<std::uint64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.sub(a.coeff(i), b.coeff(i));
        return ModPoly(std::move(v), a.p_);
    }
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
        check(a, b);
        if (a.is_zero() || b.is_zero()) return ModPoly(a.p_);
        std::vector<std::uint64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = a.add(v[i + j], a.mul(a.coeffs_[i], b.coeffs_[j]));
        }
        return ModPoly(std::move(v), a.p_);
    }
    friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.coeffs_ == b.coeffs_; }

    [[nodiscard]] std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            if (coeffs_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            if (coeffs_[i] != 1 || i == 0) out += std::to_string(coeffs_[i]);
            if (i > 0) out += (coeffs_[i] != 1 ? "*t" : "t") + (i > 1 ? "^" + std::to_string(i) : std::string());
        }
        return out;
    }

    /// Canonical ordering: degree, then coefficients from the top.
    friend bool operator<(const ModPoly& a, const ModPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(), b.coeffs_.rend());
    }

    [[nodiscard]] std::pair<ModPoly, ModPoly> divmod(const ModPoly& b) const {
        check(*this, b);
        if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "mod-p polynomial division by zero");
        if (degree() < b.degree()) return {ModPoly(p_), *this};
        std::vector<std::uint64_t> rem(coeffs_);
        std::vector<std::uint64_t> quo(coeffs_.size() - b.coeffs_.size() + 1);
        const std::uint64_t li = inv(b.leading());
        const std::size_t db = b.coeffs_.size() - 1;
        for (std::size_t i = rem.size(); i-- > db;) {
            if (rem[i] == 0) continue;
            const std::uint64_t q = mul(rem[i], li);
            quo[i - db] = q;
            for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = sub(rem[i - db + j], mul(q, b.coeffs_[j]));
        }
        rem.resize(db);
        return {ModPoly(std::move(quo), p_), ModPoly(std::move(rem), p_)};
    }
    [[nodiscard]] ModPoly operator%(const ModPoly& b) const { return divmod(b).second; }
    [[nodiscard]] ModPoly operator/(const ModPoly& b) const { return divmod(b).first; }

private:
    static void check(const ModPoly& a, const ModPoly& b) {
        if (a.p_ != b.p_) throw Error(ErrorCode::ModulusMismatch, "mod-p polynomials over different primes");
    }
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::uint64_t p_;
    std::vector<std::uint64_t> coeffs_;
};

inline ModPoly gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// base^e mod m, with e given as a 64-bit exponent.
inline ModPoly powmod(ModPoly base, std::uint64_t e, const ModPoly& m) {
    ModPoly result = ModPoly::one(m.prime()) % m;
    base = base % m;
    while (e) {
        if (e & 1U) result = (result * base) % m;
        base = (base * base) % m;
        e >>= 1U;
    }
    return result;
}

namespace detail {

inline ModPoly random_poly_below(int degree, std::uint64_t p, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    std::vector<std::uint64_t> v(static_cast<std::size_t>(degree));
    for (auto& c : v) c = dist(rng);
    return ModPoly(std::move(v), p);
}

/// Splits a monic squarefree g whose irreducible factors all have degree d.
inline void equal_degree_split(const ModPoly& g, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const std::uint64_t p = g.prime();
    while (true) {
        ModPoly a = random_poly_below(g.degree(), p, rng);
        if (a.degree() < 1) continue;
        ModPoly b(p);
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            ModPoly term = a;
            b = a;
            for (int i = 1; i < d; ++i) {
                term = (term * term) % g;
                b = b + term;
            }
        } else {
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
            ModPoly frob = a;
            ModPoly norm = a;
            for (int i = 1; i < d; ++i) {
                frob = powmod(frob, p, g);
                norm = (norm * frob) % g;
            }
            b = powmod(norm, (p - 1) / 2, g) - ModPoly::one(p);
        }
        ModPoly h = gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree_split(h, d, rng, out);
            equal_degree_split(g / h, d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Monic irreducible factors of f mod p in canonical order. f must have
/// integer coefficients. Throws NotUsable when p divides lc(f) or f mod p
/// has a repeated factor (p divides the discriminant).
inline std::vector<ModPoly> factor_mod_p(const UniPoly& f, std::uint64_t p, std::uint64_t seed) {
    ModPoly fp = ModPoly::reduce(f, p);
    if (fp.degree() != f.degree()) throw Error(ErrorCode::NotUsable, "p = " + std::to_string(p) + " divides the leading coefficient");
    if (fp.degree() < 1) throw Error(ErrorCode::InvalidArgument, "factoring a constant");
    fp = fp.monic();
    if (gcd(fp, fp.derivative()).degree() > 0) {
        throw Error(ErrorCode::NotUsable, "f mod " + std::to_string(p) + " is not squarefree");
    }
    std::mt19937_64 rng(seed ^ (p * 0x9E3779B97F4A7C15ULL));
    std::vector<ModPoly> factors;
    ModPoly rest = fp;
    const ModPoly x = ModPoly::x(p);
    ModPoly h = x % rest;
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        h = powmod(h, p, rest);
        ModPoly g = gcd(rest, h - x);
        if (g.degree() > 0) {
            detail::equal_degree_split(g, d, rng, factors);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) factors.push_back(rest.monic());
    std::sort(factors.begin(), factors.end());
    return factors;
}

/// Factor degrees, sorted descending.
inline std::vector<int> factor_degrees_mod_p(const UniPoly& f, std::uint64_t p, std::uint64_t seed = 0) {
    std::vector<int> degrees;
    for (const auto& g : factor_mod_p(f, p, seed)) degrees.push_back(g.degree());
    std::sort(degrees.rbegin(), degrees.rend());
    return degrees;
}

/// Rabin-style irreducibility test for a monic g over F_p: x^(p^n) = x mod g
/// and gcd(x^(p^(n/q)) - x, g) = 1 for each prime q dividing n.
inline bool is_irreducible_mod_p(const ModPoly& g) {
    const int n = g.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const std::uint64_t p = g.prime();
    const ModPoly x = ModPoly::x(p);
    std::vector<ModPoly> frob;  // frob[k] = x^(p^k) mod g
    frob.push_back(x % g);
    for (int k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), p, g));
    if (!(frob[static_cast<std::size_t>(n)] == x % g)) return false;
    for (int q = 2; q <= n; ++q) {
        bool prime = true;
        for (int r = 2; r * r <= q; ++r) prime = prime && (q % r != 0);
        if (!prime || n % q != 0) continue;
        if (gcd(g, frob[static_cast<std::size_t>(n / q)] - x).degree() > 0) return false;
    }
    return true;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<bool> composite(bound + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

}  // namespace quartic_forge
