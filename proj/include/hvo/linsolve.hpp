#pragma once

#include "hvo/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace hvo {

template <class V>
struct SolveResult {
    bool consistent = true;
    int rank = 0;
    std::vector<V> x;        // free variables set to zero
    int failing_row = -1;    // original 0-based row index of the first inconsistency
    bool unique() const { return consistent && rank == static_cast<int>(x.size()); }
};

// Exact Gauss-Jordan elimination for A x = b. F is a field (Rational, RatFun);
// V is an F-vector space (F itself, or e.g. MPoly over Rational).
template <class F, class V = F>
SolveResult<V> linear_solve(std::vector<std::vector<F>> A, std::vector<V> b) {
    const size_t rows = A.size();
    const size_t cols = rows ? A[0].size() : 0;
    std::vector<int> orig(rows);
    for (size_t i = 0; i < rows; ++i) orig[i] = static_cast<int>(i);
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && is_zero(A[p][c])) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        std::swap(orig[p], orig[r]);
        const F inv = F(1) / A[r][c];
        for (size_t k = c; k < cols; ++k) A[r][k] = A[r][k] * inv;
        b[r] = b[r] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(A[i][c])) continue;
            const F f = A[i][c];
            for (size_t k = c; k < cols; ++k) A[i][k] = A[i][k] - A[r][k] * f;
            b[i] = b[i] - b[r] * f;
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    SolveResult<V> out;
    out.rank = static_cast<int>(r);
    for (size_t i = r; i < rows; ++i) {
        if (!is_zero(b[i]) && (out.failing_row < 0 || orig[i] < out.failing_row)) {
            out.consistent = false;
            out.failing_row = orig[i];
        }
    }
    out.x.assign(cols, V(0));
    for (size_t i = 0; i < r; ++i) out.x[static_cast<size_t>(pivot_col[i])] = b[i];
    return out;
}

} // namespace hvo
