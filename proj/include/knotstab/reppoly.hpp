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

#ifndef KNOTSTAB_REPPOLY_HPP
#define KNOTSTAB_REPPOLY_HPP

#include <array>
#include <cmath>
#include <vector>

#include "cf.hpp"
#include "polyring.hpp"
#include "sturm.hpp"

namespace knotstab {

// Alternating two-bridge relator word: exponents of x and of y, with the
// palindromic symmetry of the normal form.
struct ParabolicWord {
    std::vector<int> epsilons;  // exponents of x, |epsilons| = |etas| + 1
    std::vector<int> etas;      // exponents of y

    void validate() const {
        if (epsilons.size() != etas.size() + 1)
            raise(errc::spec_violation, "word must alternate x,y,...,x");
        const size_t n = epsilons.size();
        for (size_t j = 0; j < n; ++j)
            if (epsilons[j] != epsilons[n - 1 - j])
                raise(errc::spec_violation, "x-exponents must be palindromic");
        for (size_t j = 0; j < etas.size(); ++j)
            if (etas[j] != etas[etas.size() - 1 - j])
                raise(errc::spec_violation, "y-exponents must be palindromic");
    }
};

namespace detail {

using PolyMat = std::array<IntPoly, 4>;  // row-major 2x2 over Z[z]

inline PolyMat pm_mul(const PolyMat& a, const PolyMat& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline PolyMat gen_x(int e) {  // [[1, e],[0,1]]
    return {IntPoly::constant(1), IntPoly::constant(e), IntPoly(), IntPoly::constant(1)};
}

inline PolyMat gen_y(int e) {  // [[1,0],[e z, 1]]
    return {IntPoly::constant(1), IntPoly(), IntPoly::monomial(e, 1), IntPoly::constant(1)};
}

// word exponent sequence (-1)^floor(i beta / alpha), i = 1..alpha-1
inline std::vector<int> word_exponents(const Int& beta, const Int& alpha) {
    std::vector<int> eps;
    Int i = 1;
    while (i < alpha) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), Int(i * beta).get_mpz_t(), alpha.get_mpz_t());
        eps.push_back(mpz_even_p(q.get_mpz_t()) ? 1 : -1);
        ++i;
    }
    return eps;
}

inline PolyMat word_matrix(const std::vector<int>& eps) {
    PolyMat w = {IntPoly::constant(1), IntPoly(), IntPoly(), IntPoly::constant(1)};
    for (size_t i = 0; i < eps.size(); ++i)
        w = pm_mul(w, (i % 2 == 0) ? gen_x(eps[i]) : gen_y(eps[i]));
    return w;
}

}  // namespace detail

// theta for torus knots 1/(2n+1): sum_k binom(n+k, 2k) z^k
inline IntPoly riley_torus_knot(int n) {
    std::vector<Int> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = binomial(n + k, 2 * k);
    return IntPoly(std::move(c));
}

// theta for torus links 1/(2n): sum_j binom(n+j, 2j+1) z^j
inline IntPoly riley_torus_link(int n) {
    std::vector<Int> c(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) c[static_cast<size_t>(j)] = binomial(n + j, 2 * j + 1);
    return IntPoly(std::move(c));
}

// Word-route Riley polynomial, sign-normalized to a positive leading
// coefficient; see riley_theta for the conventions.
inline IntPoly riley_theta_word(const Fraction& r) {
    Int beta = abs(r.beta), alpha = r.alpha;
    if (alpha < 2 || beta == 0 || beta == alpha) raise(errc::bad_fraction, "need 0 < beta < alpha");
    const bool link = mpz_even_p(alpha.get_mpz_t()) != 0;

    if (!link) {
        // knots use the odd element of {beta^{-1} mod alpha, alpha - beta^{-1}}
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), beta.get_mpz_t(), alpha.get_mpz_t()) == 0)
            raise(errc::bad_fraction, "beta must be invertible mod alpha");
        if (mpz_even_p(inv.get_mpz_t())) inv = alpha - inv;
        beta = inv;
        auto eps = detail::word_exponents(beta, alpha);
        auto w = detail::word_matrix(eps);
        // relator W x = y W; the off-diagonal difference carries theta
        auto wx = detail::pm_mul(w, detail::gen_x(1));
        auto yw = detail::pm_mul(detail::gen_y(1), w);
        if (wx[0] != yw[0] || wx[3] != yw[3])
            raise(errc::internal, "knot word lost the diagonal symmetry");
        IntPoly theta = wx[1] - yw[1];
        // the (2,1) difference must be a z-multiple of theta
        IntPoly other = wx[2] - yw[2];
        IntPoly zt = IntPoly::monomial(1, 1) * theta;
        if (other != zt && other != -zt)
            raise(errc::internal, "knot word residue is not z * theta");
        if (theta.leading() < 0) theta = -theta;
        return theta;
    }
    auto eps = detail::word_exponents(beta, alpha);
    ParabolicWord word;
    for (size_t i = 0; i < eps.size(); ++i)
        ((i % 2 == 0) ? word.epsilons : word.etas).push_back(eps[i]);
    word.validate();
    auto w = detail::word_matrix(eps);
    if (w[0] != w[3]) raise(errc::internal, "link word product must be of D-type");
    IntPoly theta = w[1];
    if (theta.is_zero()) raise(errc::internal, "vanishing Riley polynomial");
    if (theta.leading() < 0) theta = -theta;
    return theta;
}

// Riley polynomial of K(beta/alpha). Torus families use the closed forms,
// everything else the symbolic word product; both are sign-normalized.
inline IntPoly riley_theta(const Fraction& r) {
    Int beta = abs(r.beta), alpha = r.alpha;
    if (alpha < 2 || beta == 0 || beta == alpha) raise(errc::bad_fraction, "need 0 < beta < alpha");
    const bool link = mpz_even_p(alpha.get_mpz_t()) != 0;
    if (beta == 1 && !link) return riley_torus_knot(static_cast<int>((alpha.get_si() - 1) / 2));
    if (beta == 1 && link) return riley_torus_link(static_cast<int>(alpha.get_si() / 2));
    return riley_theta_word(r);
}

// Numerically confirm the closed-form zero lists of the torus families.
inline bool riley_zero_check(int n, double tol = 1e-10) {
    if (n < 1) raise(errc::spec_violation, "riley_zero_check needs n >= 1");
    {
        IntPoly theta = riley_torus_knot(n);
        if (theta.degree() != n) return false;
        for (int k = 1; k <= n; ++k) {
            double s = std::sin((2.0 * k - 1) * M_PI / (2.0 * (2 * n + 1)));
            double z = -4.0 * s * s;
            double num = 0, den = 0, zz = 1;
            for (int j = 0; j <= theta.degree(); ++j) {
                num += theta.coeff(j).get_d() * zz;
                den += std::fabs(theta.coeff(j).get_d() * zz);
                zz *= z;
            }
            if (std::fabs(num) / den > tol) return false;
        }
    }
    if (n >= 2) {
        IntPoly theta = riley_torus_link(n);
        if (theta.degree() != n - 1) return false;
        for (int k = 1; k < n; ++k) {
            double s = std::sin(k * M_PI / (2.0 * n));
            double z = -4.0 * s * s;
            double num = 0, den = 0, zz = 1;
            for (int j = 0; j <= theta.degree(); ++j) {
                num += theta.coeff(j).get_d() * zz;
                den += std::fabs(theta.coeff(j).get_d() * zz);
                zz *= z;
            }
            if (std::fabs(num) / den > tol) return false;
        }
    }
    return true;
}

// phi_p(z) = sum_k (2n+1)/(2k+1) binom(n+k, 2k) z^k for odd p = 2n+1;
// integer coefficients, all roots real in (-4, 0).
inline IntPoly dihedral_phi(int p) {
    if (p < 3 || p % 2 == 0) raise(errc::even_p, "dihedral_phi needs odd p >= 3");
    const int n = (p - 1) / 2;
    std::vector<Int> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Int num = Int(2 * n + 1) * binomial(n + k, 2 * k);
        Int q = num / Int(2 * k + 1);
        if (q * Int(2 * k + 1) != num) raise(errc::internal, "non-integer dihedral coefficient");
        c[static_cast<size_t>(k)] = q;
    }
    return IntPoly(std::move(c));
}

}  // namespace knotstab

#endif
