#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace quartic_forge {

/// Truncated power series Σ_{k < order} c_k τ^k over Q. Results carry the
/// smaller of the operand orders; nothing at or past the order is ever read.
class Series {
public:
    explicit Series(std::size_t order) : coeffs_(order) {}
    Series(std::vector<Rat> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) { coeffs_.resize(order); }

    [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size(); }
    [[nodiscard]] const Rat& operator[](std::size_t k) const { return coeffs_.at(k); }
    Rat& operator[](std::size_t k) { return coeffs_.at(k); }
    [[nodiscard]] const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }

    friend Series operator+(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k < out.order(); ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return out;
    }
    friend Series operator-(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k < out.order(); ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        return out;
    }
    friend Series operator*(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        const std::size_t n = out.order();
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }
    friend Series operator*(const Rat& s, Series a) {
        for (auto& c : a.coeffs_) c *= s;
        return a;
    }

    friend bool operator==(const Series& a, const Series& b) = default;

private:
    std::vector<Rat> coeffs_;
};

}  // namespace quartic_forge
