#pragma once

#include "charvar/integer.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace charvar::exact {

/// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("IntMatrix: dimensions must be positive");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: size mismatch in product");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Int& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    Int determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant: matrix must be square");
        IntMatrix a = *this;
        const std::size_t n = rows_;
        Int prev = 1;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && a(p, k) == 0) ++p;
                if (p == n) return 0;
                for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j) {
                    a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                    a(i, j) /= prev;  // divides exactly
                }
            prev = a(k, k);
        }
        Int det = a(n - 1, n - 1);
        return sign < 0 ? Int(-det) : det;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> entries_;
};

}  // namespace charvar::exact
