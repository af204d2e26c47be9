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

#ifndef KNOTSTAB_SEIFERT_HPP
#define KNOTSTAB_SEIFERT_HPP

#include <string>
#include <vector>

#include "cf.hpp"
#include "linalg.hpp"
#include "polyring.hpp"

namespace knotstab {

enum class SeifertForm { standard, twisted_chain, split, montesinos, user };

struct SeifertMatrix {
    IMat entries;
    SeifertForm form_tag = SeifertForm::user;

    SeifertMatrix() = default;
    SeifertMatrix(IMat m, SeifertForm tag) : entries(std::move(m)), form_tag(tag) {
        if (entries.empty()) raise(errc::bad_dimensions, "Seifert matrix must have n >= 1");
        for (const auto& row : entries)
            if (row.size() != entries.size())
                raise(errc::bad_dimensions, "Seifert matrix must be square");
    }

    size_t size() const { return entries.size(); }

    std::string text() const {  // "1,1;0,-1"
        std::string out;
        for (size_t i = 0; i < entries.size(); ++i) {
            if (i) out += ';';
            for (size_t j = 0; j < entries[i].size(); ++j) {
                if (j) out += ',';
                out += entries[i][j].get_str();
            }
        }
        return out;
    }
};

struct SplitSpec {
    std::vector<Int> pos_weights;  // a_i > 0
    std::vector<Int> neg_weights;  // c_j < 0
    IMat coupling;                 // |neg| x |pos|

    void validate() const {
        for (const auto& a : pos_weights)
            if (a <= 0) raise(errc::spec_violation, "pos_weights must be positive");
        for (const auto& c : neg_weights)
            if (c >= 0) raise(errc::spec_violation, "neg_weights must be negative");
        if (coupling.size() != neg_weights.size())
            raise(errc::dimension_mismatch, "coupling row count must equal |neg_weights|");
        for (const auto& row : coupling)
            if (row.size() != pos_weights.size())
                raise(errc::dimension_mismatch, "coupling column count must equal |pos_weights|");
    }
};

// lower-triangular all-ones block, diagonal included
inline IMat coupling_all_ones(size_t n) {
    IMat c = imat(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= i; ++j) c[i][j] = 1;
    return c;
}

// diagonal -1, superdiagonal 1
inline IMat coupling_two_bridge(size_t rows, size_t cols) {
    IMat c = imat(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (i < cols) c[i][i] = -1;
        if (i + 1 < cols) c[i][i + 1] = 1;
    }
    return c;
}

struct MontesinosSpec {
    long long e = 1;              // odd, positive
    std::vector<EvenCF> tangles;  // first odd length, rest even length

    void validate() const {
        if (e <= 0 || e % 2 == 0) raise(errc::spec_violation, "e must be odd and positive");
        if (tangles.size() < 2) raise(errc::spec_violation, "need at least two tangles");
        for (size_t t = 0; t < tangles.size(); ++t) {
            const auto& h = tangles[t].half_entries;
            if (h.empty()) raise(errc::empty_cf, "empty tangle");
            bool odd_len = h.size() % 2 == 1;
            if (t == 0 && !odd_len)
                raise(errc::spec_violation, "first tangle must have odd length");
            if (t > 0 && odd_len)
                raise(errc::spec_violation, "later tangles must have even length");
            for (size_t i = 0; i < h.size(); ++i) {
                long long expect_sign = (i % 2 == 0) ? 1 : -1;
                if ((h[i] > 0 ? 1 : -1) != expect_sign)
                    raise(errc::spec_violation,
                          "tangle signs must alternate starting positive");
            }
        }
    }
};

// --- constructors ------------------------------------------------------------

inline SeifertMatrix seifert_2bridge(const EvenCF& cf, SeifertForm form = SeifertForm::twisted_chain) {
    if (cf.empty()) raise(errc::empty_cf, "seifert_2bridge of empty continued fraction");
    const size_t m = cf.length();
    IMat mat = imat(m, m);
    for (size_t i = 0; i < m; ++i) mat[i][i] = to_int(cf.half_entries[i]);
    if (form == SeifertForm::twisted_chain) {
        for (size_t i = 0; i + 1 < m; ++i) mat[i][i + 1] = 1;
    } else if (form == SeifertForm::standard) {
        // 1-based even rows carry -1 on the subdiagonal and 1 on the superdiagonal
        for (size_t i = 1; i < m; i += 2) {
            mat[i][i - 1] = -1;
            if (i + 1 < m) mat[i][i + 1] = 1;
        }
    } else {
        raise(errc::spec_violation, "seifert_2bridge supports standard or twisted_chain");
    }
    return SeifertMatrix(std::move(mat), form);
}

inline SeifertMatrix seifert_split(const SplitSpec& spec) {
    spec.validate();
    const size_t p = spec.pos_weights.size(), q = spec.neg_weights.size();
    IMat m = imat(p + q, p + q);
    for (size_t i = 0; i < p; ++i) m[i][i] = spec.pos_weights[i];
    for (size_t j = 0; j < q; ++j) m[p + j][p + j] = spec.neg_weights[j];
    for (size_t i = 0; i < q; ++i)
        for (size_t j = 0; j < p; ++j) m[p + i][j] = spec.coupling[i][j];
    return SeifertMatrix(std::move(m), SeifertForm::split);
}

inline SeifertMatrix seifert_montesinos(const MontesinosSpec& spec) {
    spec.validate();
    const auto& first = spec.tangles[0].half_entries;
    // |a_j| of the first tangle (signs alternate by the validated hypothesis)
    std::vector<long long> a1;
    a1.reserve(first.size());
    for (long long v : first) a1.push_back(v > 0 ? v : -v);

    std::vector<Int> diag0;
    diag0.push_back(to_int(-(spec.e + 1) / 2));
    for (size_t j = 0; j < a1.size(); ++j) {
        if (j % 2 == 0) {  // odd position in 1-based terms: run of -1's
            for (long long r = 0; r < 2 * a1[j] - 1; ++r) diag0.push_back(Int(-1));
        } else {
            diag0.push_back(to_int(-(a1[j] + 1)));
        }
    }
    const size_t rho0 = diag0.size();
    size_t total = rho0;
    for (size_t t = 1; t < spec.tangles.size(); ++t) total += spec.tangles[t].length();

    IMat m = imat(total, total);
    for (size_t i = 0; i < rho0; ++i) {
        m[i][i] = diag0[i];
        if (i + 1 < rho0) m[i][i + 1] = 1;
    }
    size_t off = rho0;
    for (size_t t = 1; t < spec.tangles.size(); ++t) {
        const auto& h = spec.tangles[t].half_entries;
        for (size_t i = 0; i < h.size(); ++i) {
            m[off + i][off + i] = to_int(h[i]);
            if (i + 1 < h.size()) m[off + i][off + i + 1] = 1;
        }
        m[off][0] = 1;  // the extra 1 in column 1 at each block's first row
        off += h.size();
    }
    return SeifertMatrix(std::move(m), SeifertForm::montesinos);
}

// --- invariants ---------------------------------------------------------------

// Exact det(tM - M^T) by evaluation at t = 0..n and Lagrange interpolation.
inline IntPoly alexander_poly(const SeifertMatrix& M) {
    const size_t n = M.size();
    std::vector<Int> values;  // det at t = 0..n
    values.reserve(n + 1);
    for (size_t t0 = 0; t0 <= n; ++t0) {
        IMat a = imat(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                a[i][j] = Int(static_cast<long>(t0)) * M.entries[i][j] - M.entries[j][i];
        values.push_back(det_bareiss(std::move(a)));
    }
    // Lagrange interpolation on nodes 0..n
    RatPoly acc;
    for (size_t k = 0; k <= n; ++k) {
        if (values[k] == 0) continue;
        RatPoly basis = RatPoly::constant(Rat(1));
        Rat denom = 1;
        for (size_t j = 0; j <= n; ++j) {
            if (j == k) continue;
            basis = basis * RatPoly(IntPoly({-static_cast<int>(j), 1}));
            denom *= Rat(static_cast<long>(k)) - Rat(static_cast<long>(j));
        }
        acc = acc + (Rat(values[k]) / denom) * basis;
    }
    std::vector<Int> coeffs;
    coeffs.reserve(acc.coeffs().size());
    for (const auto& q : acc.coeffs()) {
        if (q.get_den() != 1) raise(errc::internal, "non-integer Alexander coefficient");
        coeffs.push_back(q.get_num());
    }
    return IntPoly(std::move(coeffs));
}

// Signature of M + M^T by exact congruence diagonalization.
inline int signature(const SeifertMatrix& M) {
    const size_t n = M.size();
    QMat s(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) s[i][j] = Rat(M.entries[i][j] + M.entries[j][i]);
    auto inertia = symmetric_inertia(std::move(s));
    return inertia.positive - inertia.negative;
}

inline bool is_symmetric(const IMat& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i].size() != s.size()) return false;
        for (size_t j = 0; j < i; ++j)
            if (s[i][j] != s[j][i]) return false;
    }
    return true;
}

// Exact verdict by leading principal minors.
inline bool is_positive_definite(const IMat& s) {
    if (!is_symmetric(s)) raise(errc::not_symmetric, "is_positive_definite needs a symmetric matrix");
    for (const auto& d : leading_principal_minors(s))
        if (d <= 0) return false;
    return true;
}

// Sufficient test: positive diagonal, weak row dominance everywhere, and a
// strictly dominant row inside every connected component of the off-diagonal
// support graph.
inline bool is_dominant_positive(const IMat& s) {
    if (!is_symmetric(s)) raise(errc::not_symmetric, "is_dominant_positive needs a symmetric matrix");
    const size_t n = s.size();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (size_t i = 0; i < n; ++i) {
        if (comp[i] != -1) continue;
        std::vector<size_t> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < n; ++j)
                if (j != v && comp[j] == -1 && s[v][j] != 0) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
        }
        ++ncomp;
    }
    std::vector<bool> has_excessive(static_cast<size_t>(ncomp), false);
    for (size_t i = 0; i < n; ++i) {
        if (s[i][i] <= 0) return false;
        Int off = 0;
        for (size_t j = 0; j < n; ++j)
            if (j != i) off += abs(s[i][j]);
        if (s[i][i] < off) return false;
        if (s[i][i] > off) has_excessive[static_cast<size_t>(comp[i])] = true;
    }
    for (bool h : has_excessive)
        if (!h) return false;
    return true;
}

// Minimal k_i >= 0 making (S + diag(k)) + (S + diag(k))^T positive-diagonal
// and strictly diagonally dominant; off-diagonals are unaffected, so a single
// pass suffices.
inline std::vector<Int> stabilize_twists(const SeifertMatrix& S) {
    const size_t n = S.size();
    std::vector<Int> k(n, Int(0));
    for (size_t i = 0; i < n; ++i) {
        Int mii = 2 * S.entries[i][i];
        Int off = 0;
        for (size_t j = 0; j < n; ++j)
            if (j != i) off += abs(S.entries[i][j] + S.entries[j][i]);
        Int gap = off - mii;
        if (gap >= 0) {
            Int half;
            mpz_fdiv_q_2exp(half.get_mpz_t(), gap.get_mpz_t(), 1);  // floor(gap/2)
            k[i] = half + 1;
        }
    }
    return k;
}

}  // namespace knotstab

#endif
