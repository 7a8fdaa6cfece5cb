#pragma once

// Dense matrices over F_2 with at most 64 columns; each row is one word,
// bit j holding column j.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace quartic_forge {

class F2Mat {
public:
    F2Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, 0) {
        if (cols > 64) throw Error(ErrorCode::InvalidArgument, "F2Mat supports at most 64 columns");
    }

    static F2Mat identity(std::size_t n) {
        F2Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const { return (data_.at(r) >> c) & 1U; }
    void set(std::size_t r, std::size_t c, bool v) {
        if (c >= cols_) throw Error(ErrorCode::InvalidArgument, "column out of range");
        if (v) {
            data_.at(r) |= (std::uint64_t{1} << c);
        } else {
            data_.at(r) &= ~(std::uint64_t{1} << c);
        }
    }
    [[nodiscard]] std::uint64_t row(std::size_t r) const { return data_.at(r); }
    void set_row(std::size_t r, std::uint64_t bits) { data_.at(r) = bits & mask(); }
    void append_row(std::uint64_t bits) {
        data_.push_back(bits & mask());
        ++rows_;
    }

    /// M·v for a column vector packed into a word.
    [[nodiscard]] std::uint64_t apply(std::uint64_t v) const {
        std::uint64_t out = 0;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (std::popcount(data_[r] & v) & 1) out |= std::uint64_t{1} << r;
        }
        return out;
    }

    friend F2Mat operator*(const F2Mat& a, const F2Mat& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "F2Mat dimension mismatch in product");
        F2Mat out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            std::uint64_t acc = 0;
            std::uint64_t bits = a.data_[r];
            while (bits) {
                const auto k = static_cast<std::size_t>(std::countr_zero(bits));
                acc ^= b.data_[k];
                bits &= bits - 1;
            }
            out.data_[r] = acc;
        }
        return out;
    }
    friend F2Mat operator+(const F2Mat& a, const F2Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::InvalidArgument, "F2Mat dimension mismatch in sum");
        F2Mat out(a.rows_, a.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) out.data_[r] = a.data_[r] ^ b.data_[r];
        return out;
    }
    friend bool operator==(const F2Mat& a, const F2Mat& b) = default;

    [[nodiscard]] F2Mat transpose() const {
        F2Mat t(cols_, rows_);
        if (rows_ > 64) throw Error(ErrorCode::InvalidArgument, "transpose would exceed 64 columns");
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if (get(r, c)) t.set(c, r, true);
            }
        }
        return t;
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    std::vector<std::size_t> row_reduce() {
        std::vector<std::size_t> pivots;
        std::size_t next = 0;
        for (std::size_t c = 0; c < cols_ && next < rows_; ++c) {
            std::size_t found = rows_;
            for (std::size_t r = next; r < rows_; ++r) {
                if (get(r, c)) {
                    found = r;
                    break;
                }
            }
            if (found == rows_) continue;
            std::swap(data_[found], data_[next]);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r != next && get(r, c)) data_[r] ^= data_[next];
            }
            pivots.push_back(c);
            ++next;
        }
        return pivots;
    }

    [[nodiscard]] std::size_t rank() const {
        F2Mat copy = *this;
        return copy.row_reduce().size();
    }

    /// Basis of {v : M·v = 0}, each vector packed into a word.
    [[nodiscard]] std::vector<std::uint64_t> nullspace() const {
        F2Mat rref = *this;
        auto pivots = rref.row_reduce();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::uint64_t> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::uint64_t v = std::uint64_t{1} << free;
            for (std::size_t i = 0; i < pivots.size(); ++i) {
                if (rref.get(i, free)) v |= std::uint64_t{1} << pivots[i];
            }
            basis.push_back(v);
        }
        return basis;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s;
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
            s += '\n';
        }
        return s;
    }

private:
    [[nodiscard]] std::uint64_t mask() const noexcept {
        return cols_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << cols_) - 1);
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> data_;
};

/// Dimension of the span of the given packed vectors.
inline std::size_t span_dimension(const std::vector<std::uint64_t>& vectors, std::size_t dim) {
    F2Mat m(0, dim);
    for (auto v : vectors) m.append_row(v);
    return m.rank();
}

}  // namespace quartic_forge
