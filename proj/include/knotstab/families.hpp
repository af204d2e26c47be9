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

#ifndef KNOTSTAB_FAMILIES_HPP
#define KNOTSTAB_FAMILIES_HPP

#include <vector>

#include "cf.hpp"
#include "seifert.hpp"

namespace knotstab {

// --- continued fraction codec --------------------------------------------------

// value of [2a_1, ..., 2a_m] = 1/(2a_1 - 1/(2a_2 - ...)), folded projectively
inline Fraction cf_to_fraction(const EvenCF& cf) {
    if (cf.empty()) raise(errc::empty_cf, "cf_to_fraction of empty continued fraction");
    // tail value p/q, fold right to left: v_k = 2a_k - q/p = (2a_k p - q)/p
    Int p = 1, q = 0;
    for (auto it = cf.half_entries.rbegin(); it != cf.half_entries.rend(); ++it) {
        Int np = to_int(2 * *it) * p - q;
        q = p;
        p = np;
    }
    return Fraction(q, p);  // r = 1/v_1
}

// unique even expansion; requires the knot/link parity convention
inline EvenCF fraction_to_cf(const Fraction& r) {
    if (r.beta == 0) raise(errc::not_expandable, "zero fraction has no expansion");
    bool alpha_even = mpz_even_p(r.alpha.get_mpz_t()) != 0;
    bool beta_even = mpz_even_p(r.beta.get_mpz_t()) != 0;
    if (!alpha_even && !beta_even)
        raise(errc::not_expandable, "knot fractions need an even numerator");
    if (abs(r.beta) == r.alpha) raise(errc::not_expandable, "|beta| = alpha has no even expansion");
    std::vector<long long> halves;
    Int num = r.beta, den = r.alpha;  // current remainder num/den in (-1, 1)
    while (num != 0) {
        // 2a = nearest even integer to den/num; remainder lies in (-1, 1)
        Int twice_num = 2 * num;
        Int quot, rem;
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), den.get_mpz_t(), twice_num.get_mpz_t());
        // den/num in [2*quot, 2*quot+2); pick the even endpoint within distance 1
        Int cand = 2 * quot;
        Int lhs = abs(den - cand * num);  // |den/num - cand| * |num|
        Int a2;
        if (lhs < abs(num))
            a2 = cand;
        else if (lhs == abs(num))
            raise(errc::not_expandable, "tie in even rounding (parity convention violated)");
        else
            a2 = cand + 2;
        if (a2 == 0 || a2 % 2 != 0) raise(errc::internal, "even rounding failed");
        halves.push_back(static_cast<long long>(mpz_get_si(Int(a2 / 2).get_mpz_t())));
        // r_{k+1} = a2 - den/num = (a2*num - den)/num
        Int nnum = a2 * num - den;
        den = num;
        num = nnum;
        // keep the representation with positive denominator
        if (den < 0) {
            den = -den;
            num = -num;
        }
    }
    return EvenCF(std::move(halves));
}

// r* = (2alpha - beta)/(2alpha) for a link fraction beta/(2alpha)
inline Fraction dual_fraction(const Fraction& r) {
    if (mpz_even_p(r.alpha.get_mpz_t()) == 0)
        raise(errc::odd_denominator, "dual_fraction needs an even denominator");
    Int beta = r.beta;
    if (beta < 0) beta += r.alpha;  // mirror into the 0 < beta < alpha range
    return Fraction(r.alpha - beta, r.alpha);
}

enum class CFVariant { same, neg, rev, neg_rev };

inline EvenCF cf_compose(const EvenCF& r, long long k, CFVariant variant) {
    if (k == 0) raise(errc::zero_k, "cf_compose with k = 0");
    if (r.empty()) raise(errc::empty_cf, "cf_compose of empty continued fraction");
    std::vector<long long> s = r.half_entries;
    switch (variant) {
        case CFVariant::same: break;
        case CFVariant::neg:
            for (auto& v : s) v = -v;
            break;
        case CFVariant::rev: std::reverse(s.begin(), s.end()); break;
        case CFVariant::neg_rev:
            std::reverse(s.begin(), s.end());
            for (auto& v : s) v = -v;
            break;
    }
    std::vector<long long> out = r.half_entries;
    out.push_back(k);
    out.insert(out.end(), s.begin(), s.end());
    return EvenCF(std::move(out));
}

// --- polynomial families ---------------------------------------------------------

inline IntPoly alexander_2bridge(const EvenCF& cf) {
    return normalize_alexander(alexander_poly(seifert_2bridge(cf, SeifertForm::twisted_chain)));
}

// Normalized Alexander polynomial of X_n(2a_1..2a_n | 2b_1..2b_n); the all-2
// family also runs through its three-term recursion, and the two routes agree.
inline IntPoly xn_alexander(int n, const std::vector<Int>& a, const std::vector<Int>& b) {
    if (n < 1 || a.size() != static_cast<size_t>(n) || b.size() != static_cast<size_t>(n))
        raise(errc::bad_dimensions, "xn_alexander needs |a| = |b| = n >= 1");
    bool all_two = true;
    for (const auto& v : a)
        if (v != 1) all_two = false;
    for (const auto& v : b)
        if (v != -1) all_two = false;
    if (all_two) {
        const IntPoly lambda({2, -5, 2});
        const IntPoly tm1_4 = pow(IntPoly({-1, 1}), 4);
        IntPoly g_prev = IntPoly::constant(1);   // G(0)
        IntPoly g = IntPoly({1, -3, 1});         // G(1)
        for (int i = 2; i <= n; ++i) {
            IntPoly next = lambda * g - tm1_4 * g_prev;
            g_prev = g;
            g = next;
        }
        return g;
    }
    SplitSpec spec;
    spec.pos_weights = a;
    spec.neg_weights = b;
    spec.coupling = coupling_all_ones(static_cast<size_t>(n));
    return normalize_alexander(alexander_poly(seifert_split(spec)));
}

struct YnBundle {
    IntPoly c_n;  // Conway polynomial, variable z
    IntPoly f_n;  // c_n with the (1-z^2) power removed, variable z
    IntPoly g_n;  // reduced Alexander factor, variable t
    IntPoly h_n;  // normalized Alexander polynomial, variable t
};

inline YnBundle yn_bundle(int n) {
    if (n < 1) raise(errc::bad_dimensions, "yn_bundle needs n >= 1");
    const IntPoly a({1, 0, -1});   // 1 - z^2
    const IntPoly b2 = IntPoly({1, 0, 1}) * IntPoly({1, 0, 1});  // (1+z^2)^2
    std::vector<IntPoly> c(static_cast<size_t>(n) + 1);
    c[1] = a;
    if (n >= 2) c[2] = a * (a * a - IntPoly({0, 0, 4}));
    for (int i = 3; i <= n; ++i) c[static_cast<size_t>(i)] = a * a * (Int(2) * c[static_cast<size_t>(i - 1)] - b2 * c[static_cast<size_t>(i - 2)]);

    const int m = (n + 1) / 2;  // n = 2m-1 or 2m
    YnBundle out;
    out.c_n = c[static_cast<size_t>(n)];
    out.f_n = divexact(out.c_n, pow(a, static_cast<unsigned>(2 * m - 1)));
    if (divides(a, out.f_n)) raise(errc::internal, "unexpected extra 1-z^2 factor");

    const IntPoly mu({1, -3, 1});
    const IntPoly rho2 = IntPoly({1, -1, 1}) * IntPoly({1, -1, 1});
    const IntPoly mu2 = mu * mu;
    std::vector<IntPoly> g(static_cast<size_t>(n) + 1);
    g[1] = IntPoly::constant(1);
    if (n >= 2) g[2] = IntPoly({1, -10, 19, -10, 1});
    for (int i = 3; i <= n; ++i) {
        if (i % 2 == 1)
            g[static_cast<size_t>(i)] = Int(2) * g[static_cast<size_t>(i - 1)] - rho2 * g[static_cast<size_t>(i - 2)];
        else
            g[static_cast<size_t>(i)] = Int(2) * mu2 * g[static_cast<size_t>(i - 1)] - rho2 * g[static_cast<size_t>(i - 2)];
    }
    out.g_n = g[static_cast<size_t>(n)];
    if (divides(mu, out.g_n)) raise(errc::internal, "unexpected 1-3t+t^2 factor");
    out.h_n = pow(mu, static_cast<unsigned>(2 * m - 1)) * out.g_n;
    return out;
}

// Alexander polynomial of the Salem-type two-bridge knot K([(2)^m, -2, (2)^n]).
inline IntPoly salem_dmn(int m, int n) {
    if (!(m >= n && n >= 0 && (m + n) % 2 == 1))
        raise(errc::parity_violation, "salem_dmn needs m >= n >= 0 with m+n odd");
    std::vector<Int> c(static_cast<size_t>(m + n + 2), Int(0));
    for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] += ((k % 2) ? -1 : 1) * Int(4 * k + 1);
    for (int k = n + 1; k <= m; ++k) c[static_cast<size_t>(k)] += ((k % 2) ? -1 : 1) * Int(4 * n + 3);
    for (int j = 0; j <= n; ++j)
        c[static_cast<size_t>(m + j + 1)] += (((m + j + 1) % 2) ? -1 : 1) * Int(4 * n + 1 - 4 * j);
    IntPoly d{std::move(c)};
    if (d.eval(Int(1)) != -1) raise(errc::internal, "salem family value at 1 must be -1");
    return d;
}

// Degree-8 family k*(t-1)^2 (t^2+1)(t^4-t^3+t^2-t+1) + t^4.
inline IntPoly appc_vertical(long long k) {
    if (k == 0) raise(errc::zero_k, "appc_vertical with k = 0");
    const IntPoly f = pow(IntPoly({-1, 1}), 2) * IntPoly({1, 0, 1}) * IntPoly({1, -1, 1, -1, 1});
    return to_int(k) * f + IntPoly::monomial(1, 4);
}

// sum_{k=0}^{n-1} (-1)^k (2k+1)(t^k + t^{2n-k}) + (-1)^n (2n+1) t^n
inline IntPoly appc_horizontal(int n) {
    if (n < 1) raise(errc::bad_dimensions, "appc_horizontal needs n >= 1");
    std::vector<Int> c(static_cast<size_t>(2 * n) + 1, Int(0));
    for (int k = 0; k < n; ++k) {
        Int v = ((k % 2) ? -1 : 1) * Int(2 * k + 1);
        c[static_cast<size_t>(k)] += v;
        c[static_cast<size_t>(2 * n - k)] += v;
    }
    c[static_cast<size_t>(n)] += ((n % 2) ? -1 : 1) * Int(2 * n + 1);
    IntPoly delta{std::move(c)};
    // (t+1)^2 Delta = (t^{2n+1} - 1)(t - 1) + (-1)^n 4 t^{n+1}, exactly
    IntPoly lhs = pow(IntPoly({1, 1}), 2) * delta;
    IntPoly rhs = (IntPoly::monomial(1, 2 * n + 1) - IntPoly::constant(1)) * IntPoly({-1, 1}) +
                  IntPoly::monomial(((n % 2) ? -4 : 4), n + 1);
    if (lhs != rhs) raise(errc::internal, "horizontal family identity failed");
    return delta;
}

}  // namespace knotstab

#endif
