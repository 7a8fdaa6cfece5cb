#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "rational.hpp"

namespace quartic_forge {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of t^i;
/// the last stored coefficient is nonzero, and the zero polynomial is empty.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

    static UniPoly constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }
    static UniPoly monomial(const Rat& c, std::size_t exp) {
        std::vector<Rat> v(exp + 1);
        v[exp] = c;
        return UniPoly(std::move(v));
    }
    static UniPoly variable() { return monomial(1, 1); }

    template <typename Integral>
    static UniPoly from_ints(std::initializer_list<Integral> coeffs) {
        std::vector<Rat> v;
        for (auto c : coeffs) v.emplace_back(c);
        return UniPoly(std::move(v));
    }

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
    [[nodiscard]] const Rat& leading() const {
        if (is_zero()) throw Error(ErrorCode::InvalidArgument, "leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    [[nodiscard]] bool is_monic() const { return !is_zero() && leading() == 1; }

    [[nodiscard]] UniPoly monic() const {
        const Rat lc = leading();
        std::vector<Rat> v(coeffs_);
        for (auto& c : v) c /= lc;
        return UniPoly(std::move(v));
    }

    [[nodiscard]] Rat operator()(const Rat& x) const {
        Rat acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    [[nodiscard]] UniPoly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rat> v(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
        return UniPoly(std::move(v));
    }

    [[nodiscard]] bool has_integer_coeffs() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return is_integer(c); });
    }

    UniPoly& operator+=(const UniPoly& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        trim();
        return *this;
    }
    UniPoly& operator*=(const Rat& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(UniPoly a) { return a *= Rat(-1); }
    friend UniPoly operator*(UniPoly a, const Rat& s) { return a *= s; }
    friend UniPoly operator*(const Rat& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(std::move(v));
    }
    UniPoly& operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable, e.g. "t^7 - t - 1".
    [[nodiscard]] std::string to_string(char var = 't') const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rat& c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            Rat mag = c < 0 ? Rat(-c) : c;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            const bool unit = mag == 1;
            if (!unit || i == 0) out += to_display(mag);
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};

inline DivMod poly_divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    const int db = b.degree();
    std::vector<Rat> rem(a.coeffs());
    if (a.degree() < db) return {UniPoly{}, a};
    std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db + 1));
    const Rat& lc = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        const auto iu = static_cast<std::size_t>(i);
        if (rem[iu] == 0) continue;
        Rat q = rem[iu] / lc;
        quo[iu - static_cast<std::size_t>(db)] = q;
        for (int j = 0; j <= db; ++j) {
            rem[iu - static_cast<std::size_t>(db - j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

inline UniPoly poly_rem(const UniPoly& a, const UniPoly& b) { return poly_divmod(a, b).remainder; }

/// Monic gcd (zero if both inputs are zero).
inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

/// Res(a, b) = lc(a)^deg(b) · ∏ b(α) over the roots α of a, via the Euclidean
/// recurrence Res(a, b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r), r = a mod b.
inline Rat resultant(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::InvalidArgument, "resultant with a zero polynomial");
    UniPoly x = a;
    UniPoly y = b;
    Rat acc = 1;
    while (true) {
        const int m = x.degree();
        const int n = y.degree();
        if (n == 0) return acc * rat_pow(y.leading(), static_cast<unsigned>(m));
        if (m == 0) return acc * rat_pow(x.leading(), static_cast<unsigned>(n));
        UniPoly r = poly_rem(x, y);
        if (r.is_zero()) return 0;
        if ((m * n) % 2 != 0) acc = -acc;
        acc *= rat_pow(y.leading(), static_cast<unsigned>(m - r.degree()));
        x = std::move(y);
        y = std::move(r);
    }
}

/// (-1)^{n(n-1)/2} · Res(f, f') / lc(f). Zero exactly when f has a repeated root.
inline Rat discriminant(const UniPoly& f) {
    const int n = f.degree();
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "discriminant of a constant");
    if (n == 1) return 1;
    Rat r = resultant(f, f.derivative()) / f.leading();
    return ((n * (n - 1) / 2) % 2 == 0) ? r : Rat(-r);
}

/// Power sums p_1..p_count of the roots of a monic f (Newton's identities).
/// p_0 = deg(f) by convention and is not included.
inline std::vector<Rat> power_sums(const UniPoly& f, std::size_t count) {
    if (!f.is_monic()) throw Error(ErrorCode::InvalidArgument, "power_sums needs a monic polynomial");
    const auto n = static_cast<std::size_t>(f.degree());
    // e_k = (-1)^k a_{n-k}
    std::vector<Rat> e(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        e[k] = f.coeff(n - k);
        if (k % 2 == 1) e[k] = -e[k];
    }
    std::vector<Rat> p(count + 1);
    for (std::size_t k = 1; k <= count; ++k) {
        Rat acc = 0;
        for (std::size_t i = 1; i < k && i <= n; ++i) {
            Rat term = e[i] * p[k - i];
            acc += (i % 2 == 1) ? term : Rat(-term);
        }
        if (k <= n) {
            Rat term = e[k] * static_cast<long>(k);
            acc += (k % 2 == 1) ? term : Rat(-term);
        }
        p[k] = acc;
    }
    p.erase(p.begin());
    return p;
}

/// The monic polynomial of degree p.size() whose roots have power sums p.
inline UniPoly poly_from_power_sums(const std::vector<Rat>& p) {
    const std::size_t n = p.size();
    std::vector<Rat> e(n + 1);
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rat acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            Rat term = e[k - i] * p[i - 1];
            acc += (i % 2 == 1) ? term : Rat(-term);
        }
        e[k] = acc / static_cast<long>(k);
    }
    std::vector<Rat> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = (k % 2 == 0) ? e[k] : Rat(-e[k]);
    return UniPoly(std::move(coeffs));
}

/// Scales f by the positive rational making it a primitive integer polynomial
/// with positive leading coefficient. Roots are unchanged.
inline UniPoly primitive_integer_part(const UniPoly& f) {
    if (f.is_zero()) return f;
    Int den_lcm = 1;
    for (const auto& c : f.coeffs()) den_lcm = boost::multiprecision::lcm(den_lcm, denominator_of(c));
    Int content = 0;
    for (const auto& c : f.coeffs()) {
        Int v = numerator_of(c) * (den_lcm / denominator_of(c));
        content = boost::multiprecision::gcd(content, v);
    }
    if (f.leading() < 0) content = -content;
    return f * Rat(den_lcm, content);
}

inline nlohmann::json to_json(const UniPoly& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : f.coeffs()) arr.push_back(to_canonical(c));
    return arr;
}

inline UniPoly unipoly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw Error(ErrorCode::Parse, "polynomial must be a JSON array");
    std::vector<Rat> v;
    for (const auto& c : j) {
        if (!c.is_string()) throw Error(ErrorCode::Parse, "coefficient must be a string");
        v.push_back(parse_rat(c.get<std::string>()));
    }
    return UniPoly(std::move(v));
}

}  // namespace quartic_forge
