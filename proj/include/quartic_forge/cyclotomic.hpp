#pragma once

// Exact arithmetic in Q(ζ_N), elements stored in the power basis
// 1, ζ, ..., ζ^{φ(N)-1} modulo the N-th cyclotomic polynomial.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace quartic_forge {

namespace detail {

inline int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

/// Φ_N = ∏_{d | N} (x^d - 1)^{μ(N/d)}, with integer coefficients.
inline std::vector<std::int64_t> cyclotomic_coeffs(int n) {
    std::vector<std::int64_t> poly{1};
    std::vector<int> dividers;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const int mu = moebius(n / d);
        if (mu == 1) {
            std::vector<std::int64_t> next(poly.size() + static_cast<std::size_t>(d), 0);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + static_cast<std::size_t>(d)] += poly[i];
                next[i] -= poly[i];
            }
            poly = std::move(next);
        } else if (mu == -1) {
            dividers.push_back(d);
        }
    }
    for (int d : dividers) {
        // exact division by x^d - 1: a = x^d q - q
        const auto du = static_cast<std::size_t>(d);
        std::vector<std::int64_t> q(poly.size() - du, 0);
        for (std::size_t j = q.size(); j-- > 0;) q[j] = poly[j + du] + (j + du < q.size() ? q[j + du] : 0);
        poly = std::move(q);
    }
    return poly;
}

}  // namespace detail

/// Shared per-conductor data: Φ_N and the reductions of ζ^e for 0 ≤ e < N.
class CyclotomicField {
public:
    static std::shared_ptr<const CyclotomicField> get(int conductor) {
        static std::mutex mu;
        static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
        if (conductor < 1 || conductor > 100000) throw Error(ErrorCode::InvalidArgument, "conductor out of range");
        std::lock_guard lock(mu);
        auto& slot = cache[conductor];
        if (!slot) slot = std::shared_ptr<const CyclotomicField>(new CyclotomicField(conductor));
        return slot;
    }

    [[nodiscard]] int conductor() const noexcept { return n_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return phi_.size() - 1; }
    [[nodiscard]] UniPoly cyclotomic_polynomial() const {
        std::vector<Rat> v;
        for (auto c : phi_) v.emplace_back(c);
        return UniPoly(std::move(v));
    }
    /// ζ^e in the power basis; e is reduced mod N.
    [[nodiscard]] const std::vector<Rat>& power(long e) const {
        long r = e % n_;
        if (r < 0) r += n_;
        return powers_[static_cast<std::size_t>(r)];
    }

private:
    explicit CyclotomicField(int n) : n_(n), phi_(detail::cyclotomic_coeffs(n)) {
        const std::size_t dim = phi_.size() - 1;
        std::vector<std::int64_t> cur(dim, 0);
        if (dim > 0) cur[0] = 1;
        for (int e = 0; e < n_; ++e) {
            std::vector<Rat> row(cur.begin(), cur.end());
            powers_.push_back(std::move(row));
            // multiply by x and reduce by the monic Φ_N
            std::int64_t top = dim > 0 ? cur[dim - 1] : 0;
            for (std::size_t i = dim; i-- > 1;) cur[i] = cur[i - 1];
            if (dim > 0) cur[0] = 0;
            for (std::size_t i = 0; i < dim; ++i) cur[i] -= top * phi_[i];
        }
    }

    int n_;
    std::vector<std::int64_t> phi_;
    std::vector<std::vector<Rat>> powers_;
};

class CycloNum {
public:
    explicit CycloNum(std::shared_ptr<const CyclotomicField> field)
        : field_(std::move(field)), coeffs_(field_->dimension()) {}

    static CycloNum rational(std::shared_ptr<const CyclotomicField> field, const Rat& r) {
        CycloNum x(std::move(field));
        if (!x.coeffs_.empty()) x.coeffs_[0] = r;
        return x;
    }
    static CycloNum zeta(std::shared_ptr<const CyclotomicField> field, long k) {
        CycloNum x(field);
        x.coeffs_ = field->power(k);
        return x;
    }
    /// Σ mult · ζ^exponent.
    static CycloNum from_exponents(std::shared_ptr<const CyclotomicField> field,
                                   const std::vector<std::pair<long, long>>& terms) {
        CycloNum x(field);
        for (const auto& [e, m] : terms) x.add_scaled(field->power(e), Rat(m));
        return x;
    }

    [[nodiscard]] int conductor() const noexcept { return field_->conductor(); }
    [[nodiscard]] const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] bool is_zero() const {
        for (const auto& c : coeffs_) {
            if (c != 0) return false;
        }
        return true;
    }
    [[nodiscard]] bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            if (coeffs_[i] != 0) return false;
        }
        return true;
    }
    [[nodiscard]] Rat rational_value() const {
        if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "cyclotomic number is not rational");
        return coeffs_.empty() ? Rat(0) : coeffs_[0];
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    [[nodiscard]] CycloNum conj() const {
        CycloNum out(field_);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] != 0) out.add_scaled(field_->power(-static_cast<long>(k)), coeffs_[k]);
        }
        return out;
    }

    CycloNum& operator+=(const CycloNum& b) {
        check(b);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
        return *this;
    }
    CycloNum& operator-=(const CycloNum& b) {
        check(b);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= b.coeffs_[k];
        return *this;
    }
    CycloNum& operator*=(const Rat& s) {
        for (auto& c : coeffs_) {
            if (c != 0) c *= s;
        }
        return *this;
    }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const Rat& s) { return a *= s; }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        a.check(b);
        if (a.is_rational()) return b * a.rational_value();
        if (b.is_rational()) return a * b.rational_value();
        const int n = a.conductor();
        std::vector<Rat> acc(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                acc[(i + j) % static_cast<std::size_t>(n)] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        CycloNum out(a.field_);
        for (std::size_t e = 0; e < acc.size(); ++e) {
            if (acc[e] != 0) out.add_scaled(a.field_->power(static_cast<long>(e)), acc[e]);
        }
        return out;
    }
    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        return a.conductor() == b.conductor() && a.coeffs_ == b.coeffs_;
    }

    /// Power-basis text, e.g. "1 + 2*z^3" with z = ζ_N.
    [[nodiscard]] std::string to_string() const {
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Rat& c = coeffs_[k];
            if (c == 0) continue;
            if (!out.empty()) out += c < 0 ? " - " : " + ";
            else if (c < 0) out += "-";
            Rat mag = c < 0 ? Rat(-c) : c;
            if (k == 0) {
                out += to_display(mag);
            } else {
                if (mag != 1) out += to_display(mag) + "*";
                out += "z^" + std::to_string(k);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void check(const CycloNum& b) const {
        if (conductor() != b.conductor()) throw Error(ErrorCode::ModulusMismatch, "cyclotomic numbers of different conductors");
    }
    void add_scaled(const std::vector<Rat>& v, const Rat& s) {
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (v[k] != 0) coeffs_[k] += s * v[k];
        }
    }

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rat> coeffs_;
};

inline CycloNum cyclo_add(const CycloNum& a, const CycloNum& b) { return a + b; }
inline CycloNum cyclo_mul(const CycloNum& a, const CycloNum& b) { return a * b; }
inline CycloNum cyclo_conj(const CycloNum& a) { return a.conj(); }

}  // namespace quartic_forge
