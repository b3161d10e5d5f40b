#pragma once

#include "charvar/int_matrix.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace charvar::exact {

/// Factorization P*A*Q = B with P, Q unimodular and B diagonal,
/// nonnegative, each factor dividing the next, zeros trailing.
/// factors is the full diagonal of B, length min(rows, cols).
struct SmithDecomposition {
    IntMatrix P;
    IntMatrix B;
    IntMatrix Q;
    std::vector<Int> factors;
};

inline SmithDecomposition smith_normal_form(const IntMatrix& A) {
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    const std::size_t k = std::min(m, n);

    IntMatrix P = IntMatrix::identity(m);
    IntMatrix Q = IntMatrix::identity(n);
    IntMatrix B = A;

    // every row operation on B is mirrored on P, every column operation
    // on Q, so P*A*Q = B holds throughout
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(B(a, j), B(b, j));
        for (std::size_t j = 0; j < m; ++j) std::swap(P(a, j), P(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(B(i, a), B(i, b));
        for (std::size_t i = 0; i < n; ++i) std::swap(Q(i, a), Q(i, b));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t j = 0; j < n; ++j) B(dst, j) += c * B(src, j);
        for (std::size_t j = 0; j < m; ++j) P(dst, j) += c * P(src, j);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t i = 0; i < m; ++i) B(i, dst) += c * B(i, src);
        for (std::size_t i = 0; i < n; ++i) Q(i, dst) += c * Q(i, src);
    };
    auto negate_row = [&](std::size_t a) {
        for (std::size_t j = 0; j < n; ++j) B(a, j) = -B(a, j);
        for (std::size_t j = 0; j < m; ++j) P(a, j) = -P(a, j);
    };

    for (std::size_t t = 0; t < k; ++t) {
        // smallest |entry| > 0 in the trailing block; row-major scan
        // breaks ties at the lexicographically least position
        auto find_pivot = [&]() -> std::pair<std::size_t, std::size_t> {
            std::pair<std::size_t, std::size_t> best{m, n};  // (m, n) means empty block
            Int best_abs = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (B(i, j) == 0) continue;
                    Int a = abs(B(i, j));
                    if (best_abs == 0 || a < best_abs) {
                        best = {i, j};
                        best_abs = std::move(a);
                    }
                }
            return best;
        };

        auto pivot = find_pivot();
        if (pivot.first == m) break;  // trailing block is zero, factors stay 0

        for (;;) {
            swap_rows(t, pivot.first);
            swap_cols(t, pivot.second);
            const Int& p = B(t, t);

            // reduce column t and row t; a surviving remainder is strictly
            // smaller than |p| and becomes the next pivot
            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (B(i, t) == 0) continue;
                Int q = B(i, t) / p;
                if (q != 0) add_row(i, t, -q);
                if (B(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (B(t, j) == 0) continue;
                Int q = B(t, j) / p;
                if (q != 0) add_col(j, t, -q);
                if (B(t, j) != 0) dirty = true;
            }
            if (dirty) {
                pivot = find_pivot();
                continue;
            }

            // divisibility pass: fold a bad row in and re-reduce, which
            // strictly shrinks the eventual pivot
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (B(i, j) % p != 0) {
                        add_row(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
            pivot = find_pivot();
        }

        if (B(t, t) < 0) negate_row(t);
    }

    std::vector<Int> factors;
    factors.reserve(k);
    for (std::size_t t = 0; t < k; ++t) factors.push_back(B(t, t));

    return {std::move(P), std::move(B), std::move(Q), std::move(factors)};
}

}  // namespace charvar::exact
