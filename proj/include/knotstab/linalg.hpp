/*
   Copyright 2026 The knotstab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KNOTSTAB_LINALG_HPP
#define KNOTSTAB_LINALG_HPP

#include <optional>
#include <vector>

#include "common.hpp"

namespace knotstab {

using IMat = std::vector<std::vector<Int>>;
using QMat = std::vector<std::vector<Rat>>;

inline IMat imat(size_t rows, size_t cols) { return IMat(rows, std::vector<Int>(cols, Int(0))); }

// Fraction-free Bareiss elimination; exact integer determinant.
inline Int det_bareiss(IMat m) {
    const size_t n = m.size();
    if (n == 0) return Int(1);
    for (const auto& row : m)
        if (row.size() != n) raise(errc::dimension_mismatch, "determinant of non-square matrix");
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return Int(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = v / prev;  // exact by Bareiss
            }
        prev = m[k][k];
    }
    return sign == 1 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

// Leading principal minors det M_1, ..., det M_n.
inline std::vector<Int> leading_principal_minors(const IMat& m) {
    const size_t n = m.size();
    std::vector<Int> out;
    out.reserve(n);
    for (size_t k = 1; k <= n; ++k) {
        IMat sub(k, std::vector<Int>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
        out.push_back(det_bareiss(std::move(sub)));
    }
    return out;
}

// Gaussian elimination over Q; returns the unique solution or nullopt when
// the system is singular (no or infinitely many solutions).
inline std::optional<std::vector<Rat>> solve_linear(QMat a, std::vector<Rat> b) {
    const size_t n = a.size();
    if (b.size() != n) raise(errc::dimension_mismatch, "solve_linear rhs size");
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        Rat inv = 1 / a[col][col];
        for (size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    return b;
}

struct InertiaCounts {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

// Inertia of a symmetric rational matrix by congruence diagonalization with
// symmetric pivoting; zero rows are radical summands, off-diagonal-only rows
// are handled by the row/column addition trick.
inline InertiaCounts symmetric_inertia(QMat s) {
    const size_t n = s.size();
    InertiaCounts out;
    for (size_t k = 0; k < n; ++k) {
        if (s[k][k] == 0) {
            size_t p = k;
            for (size_t j = k + 1; j < n; ++j)
                if (s[j][j] != 0) {
                    p = j;
                    break;
                }
            if (p != k) {
                for (size_t j = 0; j < n; ++j) std::swap(s[k][j], s[p][j]);
                for (size_t i = 0; i < n; ++i) std::swap(s[i][k], s[i][p]);
            } else {
                size_t q = k;
                for (size_t j = k + 1; j < n; ++j)
                    if (s[k][j] != 0) {
                        q = j;
                        break;
                    }
                if (q == k) {
                    ++out.zero;
                    continue;
                }
                // add row/col q into k: new diagonal 2*s[k][q] != 0
                for (size_t j = 0; j < n; ++j) s[k][j] += s[q][j];
                for (size_t i = 0; i < n; ++i) s[i][k] += s[i][q];
            }
        }
        Rat d = s[k][k];
        if (d > 0)
            ++out.positive;
        else
            ++out.negative;
        for (size_t i = k + 1; i < n; ++i) {
            if (s[i][k] == 0) continue;
            Rat f = s[i][k] / d;
            for (size_t j = 0; j < n; ++j) s[i][j] -= f * s[k][j];
            for (size_t j = 0; j < n; ++j) s[j][i] -= f * s[j][k];
        }
    }
    return out;
}

}  // namespace knotstab

#endif
