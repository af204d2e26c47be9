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

#ifndef KNOTSTAB_MOEBIUS_HPP
#define KNOTSTAB_MOEBIUS_HPP

#include <complex>
#include <vector>

#include "linalg.hpp"
#include "polyring.hpp"

namespace knotstab {

// phi(z) = (1 - z i)/(z - i); fixes +-1, swaps unit circle and real line
inline std::complex<double> phi_map(std::complex<double> z) {
    const std::complex<double> i(0, 1);
    if (std::abs(z - i) < 1e-300) raise(errc::pole_at_i, "phi has a pole at i");
    return (1.0 - z * i) / (z - i);
}

struct StarPipeline {
    int n = 0;             // half-degree
    IMat m_even, n_odd;    // binomial coefficient matrices (even/odd subsystems)
    IMat even_map;         // acts on (c_0, c_2, ...)
    IMat odd_map;          // acts on (c_1, c_3, ...)
    bool swap_parity;      // odd n feeds even outputs from odd inputs
};

namespace detail {

// inverse of a unit lower-triangular integer matrix, exact
inline IMat unit_lower_inverse(const IMat& m) {
    const size_t n = m.size();
    IMat inv = imat(n, n);
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col)
        for (size_t i = col + 1; i < n; ++i) {
            Int acc = 0;
            for (size_t k = col; k < i; ++k) acc += m[i][k] * inv[k][col];
            inv[i][col] = -acc;
        }
    return inv;
}

inline IMat mat_mul(const IMat& a, const IMat& b) {
    const size_t n = a.size(), m = b[0].size(), k = b.size();
    IMat r = imat(n, m);
    for (size_t i = 0; i < n; ++i)
        for (size_t p = 0; p < k; ++p)
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][p] * b[p][j];
    return r;
}

inline IMat reversal(size_t n) {
    IMat q = imat(n, n);
    for (size_t i = 0; i < n; ++i) q[i][n - 1 - i] = 1;
    return q;
}

inline IMat power_diag(size_t n, const Int& base) {  // diag(1, base^2, base^4, ...)
    IMat p = imat(n, n);
    Int v = 1;
    for (size_t i = 0; i < n; ++i) {
        p[i][i] = v;
        v *= base * base;
    }
    return p;
}

inline IMat scale(const IMat& m, const Int& s) {
    IMat r = m;
    for (auto& row : r)
        for (auto& v : row) v *= s;
    return r;
}

}  // namespace detail

// Assemble the exact integer coefficient maps for half-degree n.
inline StarPipeline star_pipeline(int n) {
    StarPipeline p;
    p.n = n;
    const int m = n / 2;
    const bool even_n = (n % 2 == 0);
    p.swap_parity = !even_n;
    // even subsystem matrix: rows k = 0..m, entries binom(n - 2i, k - i)
    size_t me = static_cast<size_t>(m) + 1;
    p.m_even = imat(me, me);
    for (int k = 0; k <= m; ++k)
        for (int i = 0; i <= k; ++i) p.m_even[static_cast<size_t>(k)][static_cast<size_t>(i)] = binomial(n - 2 * i, k - i);
    // odd subsystem: size m for even n, m+1 for odd n; entries binom(n-(2i+1), k-i)
    size_t mo = even_n ? static_cast<size_t>(m) : static_cast<size_t>(m) + 1;
    p.n_odd = imat(mo, mo);
    for (size_t k = 0; k < mo; ++k)
        for (size_t i = 0; i <= k; ++i)
            p.n_odd[k][i] = binomial(n - (2 * static_cast<int>(i) + 1),
                                     static_cast<int>(k) - static_cast<int>(i));
    IMat me_inv = detail::unit_lower_inverse(p.m_even);
    IMat no_inv = detail::unit_lower_inverse(p.n_odd);
    IMat pe = detail::power_diag(me, 4);
    IMat po = detail::scale(detail::power_diag(mo, 4), 4);
    if (even_n) {
        p.even_map = detail::mat_mul(detail::mat_mul(p.m_even, detail::mat_mul(pe, detail::reversal(me))), me_inv);
        p.odd_map = detail::mat_mul(detail::mat_mul(p.n_odd, detail::mat_mul(po, detail::reversal(mo))), no_inv);
    } else {
        p.even_map = detail::scale(
            detail::mat_mul(detail::mat_mul(p.m_even, detail::mat_mul(pe, detail::reversal(me))), no_inv), -1);
        p.odd_map = detail::scale(
            detail::mat_mul(detail::mat_mul(p.n_odd, detail::mat_mul(po, detail::reversal(mo))), me_inv), -1);
    }
    return p;
}

struct StarResult {
    IntPoly raw;         // signed pipeline output; (raw*)* = 2^{2n} f exactly
    IntPoly normalized;  // positive leading coefficient
};

// f* of a reciprocal even-degree f with f(0), f(+-i) != 0: the integer
// polynomial whose zeros are phi(zeros of f).
inline StarResult star_transform(const IntPoly& f) {
    if (f.is_zero()) raise(errc::zero_polynomial, "star_transform(0)");
    if (!is_palindromic(f) || f.degree() % 2 != 0)
        raise(errc::not_reciprocal, "star_transform needs a palindromic polynomial of even degree");
    const int n = f.degree() / 2;
    if (n == 0) {
        StarResult out;
        out.raw = f;
        out.normalized = normalize_alexander(f);
        return out;
    }
    // f(i) = E(-1) + i O(-1) for f(t) = E(t^2) + t O(t^2); both parts must not vanish
    {
        Int e = 0, o = 0, s = 1;
        for (int k = 0; k <= f.degree(); k += 2) {
            e += s * f.coeff(k);
            o += s * f.coeff(k + 1);
            s = -s;
        }
        if (e == 0 && o == 0) raise(errc::root_at_zero_or_i, "f(+-i) = 0");
    }
    // descending coefficients c_0..c_{2n}
    std::vector<Int> c(static_cast<size_t>(2 * n) + 1);
    for (int j = 0; j <= 2 * n; ++j) c[static_cast<size_t>(j)] = f.coeff(2 * n - j);
    StarPipeline pipe = star_pipeline(n);
    const int m = n / 2;
    std::vector<Int> c_even, c_odd;
    for (int k = 0; 2 * k <= n; ++k) c_even.push_back(c[static_cast<size_t>(2 * k)]);
    for (int k = 0; 2 * k + 1 <= n; ++k) c_odd.push_back(c[static_cast<size_t>(2 * k + 1)]);
    auto apply = [](const IMat& mat, const std::vector<Int>& v) {
        std::vector<Int> r(mat.size(), Int(0));
        for (size_t i = 0; i < mat.size(); ++i)
            for (size_t j = 0; j < v.size(); ++j) r[i] += mat[i][j] * v[j];
        return r;
    };
    std::vector<Int> a_even, a_odd;
    if (!pipe.swap_parity) {
        a_even = apply(pipe.even_map, c_even);
        a_odd = apply(pipe.odd_map, c_odd);
    } else {
        a_even = apply(pipe.even_map, c_odd);
        a_odd = apply(pipe.odd_map, c_even);
    }
    // reassemble descending a_0..a_{2n} by reciprocity
    std::vector<Int> a(static_cast<size_t>(2 * n) + 1, Int(0));
    for (int k = 0; k <= m; ++k) a[static_cast<size_t>(2 * k)] = a_even[static_cast<size_t>(k)];
    for (size_t k = 0; k < a_odd.size(); ++k) a[2 * k + 1] = a_odd[k];
    for (int j = 0; j <= 2 * n; ++j)
        if (a[static_cast<size_t>(j)] == 0) a[static_cast<size_t>(j)] = a[static_cast<size_t>(2 * n - j)];
    StarResult out;
    out.raw = IntPoly::from_descending(std::move(a));
    if (out.raw.degree() != 2 * n || !is_palindromic(out.raw))
        raise(errc::internal, "star transform output must be reciprocal of the same degree");
    out.normalized = normalize_alexander(out.raw);
    return out;
}

}  // namespace knotstab

#endif
