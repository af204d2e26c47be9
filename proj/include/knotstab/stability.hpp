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

#ifndef KNOTSTAB_STABILITY_HPP
#define KNOTSTAB_STABILITY_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <vector>

#include "linalg.hpp"
#include "sturm.hpp"

namespace knotstab {

enum class Verdict { Stable, CStable, StrictlyBiStable, TotallyUnstable, Mixed };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Stable: return "Stable";
        case Verdict::CStable: return "CStable";
        case Verdict::StrictlyBiStable: return "StrictlyBiStable";
        case Verdict::TotallyUnstable: return "TotallyUnstable";
        case Verdict::Mixed: return "Mixed";
    }
    return "?";
}

struct StabilityReport {
    Verdict verdict = Verdict::Mixed;
    int n_real = 0;
    int n_unit = 0;
    int n_other = 0;
    // unit-circle zeros sitting exactly at t = +1 or t = -1 (these are also
    // real numbers; the verdict convention buckets them as unit)
    int n_unit_pm1 = 0;
    bool certified = true;
    std::optional<IsolatingInterval> delta_max;
    std::vector<std::complex<double>> numeric_zeros;
};

// "stable in the zero-distribution sense": every zero is a real number
// (unit-circle zeros are allowed only at t = +-1, which are real).
inline bool all_zeros_real(const StabilityReport& r) {
    return r.n_other == 0 && r.n_unit == r.n_unit_pm1;
}
// every zero lies on the unit circle
inline bool all_zeros_unit(const StabilityReport& r) { return r.n_real == 0 && r.n_other == 0; }

// --- numeric root finder -----------------------------------------------------

struct NumericZeros {
    std::vector<std::complex<double>> zeros;  // with multiplicity
    bool converged = true;
};

namespace detail {

inline std::complex<double> horner(const std::vector<double>& asc, std::complex<double> z) {
    std::complex<double> acc = 0;
    for (auto it = asc.rbegin(); it != asc.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// Aberth simultaneous iteration on a square-free double polynomial.
inline bool aberth(const std::vector<double>& asc, double tol, unsigned seed,
                   std::vector<std::complex<double>>& roots) {
    const size_t n = asc.size() - 1;
    roots.resize(n);
    double scale = 0;
    for (double c : asc) scale = std::max(scale, std::fabs(c));
    // initial points near the Cauchy bound circle, angles offset by the seed
    double radius = 0;
    for (size_t i = 0; i < n; ++i) radius = std::max(radius, std::fabs(asc[i] / asc[n]));
    radius = 0.5 * (1.0 + radius);
    double off = 0.41 + 0.013 * static_cast<double>(seed % 97);
    for (size_t k = 0; k < n; ++k) {
        double ang = 2.0 * M_PI * (static_cast<double>(k) + off) / static_cast<double>(n) + 0.3;
        roots[k] = std::polar(radius * (1.0 + 0.07 * static_cast<double>(k % 5)), ang);
    }
    std::vector<double> dasc(n);
    for (size_t i = 1; i <= n; ++i) dasc[i - 1] = asc[i] * static_cast<double>(i);
    const int max_iter = 800;
    for (int iter = 0; iter < max_iter; ++iter) {
        double moved = 0;
        for (size_t k = 0; k < n; ++k) {
            std::complex<double> p = horner(asc, roots[k]);
            std::complex<double> dp = horner(dasc, roots[k]);
            if (std::abs(p) == 0.0) continue;
            std::complex<double> newton = p / dp;
            std::complex<double> rep = 0;
            for (size_t j = 0; j < n; ++j)
                if (j != k) rep += 1.0 / (roots[k] - roots[j]);
            std::complex<double> denom = 1.0 - newton * rep;
            std::complex<double> delta = (std::abs(denom) > 1e-300) ? newton / denom : newton;
            roots[k] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-15) break;
    }
    // residual check: |p(z)| against sum |c_j| |z|^j
    bool ok = true;
    for (size_t k = 0; k < n; ++k) {
        double denom = 0, zz = 1, az = std::abs(roots[k]);
        for (size_t j = 0; j < asc.size(); ++j) {
            denom += std::fabs(asc[j]) * zz;
            zz *= az;
        }
        if (denom == 0) denom = scale;
        if (std::abs(horner(asc, roots[k])) / denom > tol) ok = false;
    }
    return ok;
}

inline std::vector<double> to_doubles(const RatPoly& p) {
    // scale by the largest magnitude so doubles stay in range
    Rat m = 0;
    for (const auto& c : p.coeffs())
        if (abs(c) > m) m = abs(c);
    std::vector<double> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(Rat(c / m).get_d());
    return out;
}

}  // namespace detail

// All complex zeros with multiplicity; square-free factors are solved by
// Aberth iteration, then polished with a few Newton steps.
inline NumericZeros numeric_zeros(const IntPoly& p, double tol = 1e-12, unsigned seed = 0) {
    if (p.is_zero()) raise(errc::zero_polynomial, "numeric_zeros(0)");
    if (tol <= 0) raise(errc::spec_violation, "tolerance must be positive");
    NumericZeros out;
    if (p.degree() == 0) return out;
    for (const auto& [factor, mult] : squarefree_decomposition(RatPoly(p))) {
        std::vector<double> asc = detail::to_doubles(factor);
        std::vector<std::complex<double>> roots;
        if (!detail::aberth(asc, tol, seed, roots)) out.converged = false;
        std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
        for (const auto& z : roots)
            for (int m = 0; m < mult; ++m) out.zeros.push_back(z);
    }
    std::sort(out.zeros.begin(), out.zeros.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

// --- classification ----------------------------------------------------------

namespace detail {

// largest real zero of p as a refined isolating interval
inline std::optional<IsolatingInterval> largest_real_zero(const IntPoly& p) {
    auto roots = isolate_real_roots(p);
    if (roots.empty()) return std::nullopt;
    return roots.back();
}

}  // namespace detail

// Exact zero-distribution classification. Unit factors t-1 and t+1 are
// stripped first (each root counts as a unit-circle zero), t factors count
// toward n_other; a reciprocal even-degree core is then decided exactly
// through its modification, anything else falls back to numeric bucketing.
inline StabilityReport classify(const IntPoly& p_in, double tau = 1e-8, double tol = 1e-12,
                                unsigned seed = 0) {
    if (p_in.is_zero()) raise(errc::zero_polynomial, "classify(0)");
    StabilityReport rep;
    IntPoly p = p_in;
    const int total_degree = p.degree();

    rep.n_other += p.strip_linear_root(0, 1);  // t^k unit
    int at_one = p.strip_linear_root(1, 1);
    int at_minus_one = p.strip_linear_root(-1, 1);
    rep.n_unit += at_one + at_minus_one;
    rep.n_unit_pm1 += at_one + at_minus_one;

    if (p.degree() > 0) {
        if (is_palindromic(p) && p.degree() % 2 == 0) {
            IntPoly modif = modification(p);
            RatPoly owner = squarefree_part(RatPoly(modif));
            int real_in_modif = 0;
            for (const auto& iv : isolate_real_roots(modif)) {
                // decide |beta| vs 2 exactly; +-2 cannot be roots here since
                // modif(+-2) = p(+-1) != 0 after stripping
                IsolatingInterval b = iv;
                while (!b.exact() && ((b.lo < 2 && b.hi > 2) || (b.lo < -2 && b.hi > -2)))
                    refine_below(b, owner, b.width() / 4);
                bool outside = b.lo >= 2 || b.hi <= -2;
                if (outside)
                    rep.n_real += 2 * iv.multiplicity;
                else
                    rep.n_unit += 2 * iv.multiplicity;
                real_in_modif += iv.multiplicity;
            }
            rep.n_other += 2 * (modif.degree() - real_in_modif);
        } else {
            // numeric fallback, flagged non-certified
            rep.certified = false;
            auto nz = numeric_zeros(p, tol, seed);
            rep.numeric_zeros = nz.zeros;
            for (const auto& z : nz.zeros) {
                if (std::fabs(std::abs(z) - 1.0) < tau) {
                    ++rep.n_unit;
                    if (std::fabs(z.imag()) < tau) ++rep.n_unit_pm1;
                } else if (std::fabs(z.imag()) < tau) {
                    ++rep.n_real;
                } else {
                    ++rep.n_other;
                }
            }
        }
    }

    if (rep.n_real + rep.n_unit + rep.n_other != total_degree)
        raise(errc::internal, "zero count mismatch in classify");

    if (total_degree == 0 || rep.n_real == total_degree)
        rep.verdict = Verdict::Stable;
    else if (rep.n_unit == total_degree)
        rep.verdict = Verdict::CStable;
    else if (rep.n_other == 0 && rep.n_real > 0 && rep.n_unit > 0)
        rep.verdict = Verdict::StrictlyBiStable;
    else if (rep.n_real == 0 && rep.n_unit == 0)
        rep.verdict = Verdict::TotallyUnstable;
    else
        rep.verdict = Verdict::Mixed;

    rep.delta_max = detail::largest_real_zero(p_in);
    return rep;
}

// --- Hurwitz-Routh -----------------------------------------------------------

struct HurwitzResult {
    bool s_hurwitz_stable = false;
    std::vector<Int> minors;  // det H_1, ..., det H_n
};

// Exact strong Hurwitz stability via the leading principal minors of the
// Hurwitz matrix. Coefficients a_0..a_n are taken descending; a_0 > 0.
inline HurwitzResult s_hurwitz(const IntPoly& p) {
    if (p.is_zero()) raise(errc::zero_polynomial, "s_hurwitz(0)");
    if (p.leading() <= 0) raise(errc::non_positive_leading, "s_hurwitz needs positive leading coefficient");
    const int n = p.degree();
    HurwitzResult out;
    if (n == 0) {
        out.s_hurwitz_stable = true;
        return out;
    }
    auto a = [&](int j) -> Int { return (j < 0 || j > n) ? Int(0) : p.coeff(n - j); };
    IMat h = imat(static_cast<size_t>(n), static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h[static_cast<size_t>(i)][static_cast<size_t>(j)] = a(2 * (i + 1) - (j + 1));
    out.minors = leading_principal_minors(h);
    out.s_hurwitz_stable = true;
    for (const auto& d : out.minors)
        if (d <= 0) out.s_hurwitz_stable = false;
    return out;
}

// --- Lyapunov certificate ------------------------------------------------------

// Solve V M + M^T V = -I for symmetric V with M the companion matrix of the
// monic rescaling of p; returns V iff the system is uniquely solvable and V
// is positive definite (then p is strongly Hurwitz-stable).
inline std::optional<QMat> lyapunov_certificate(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1) raise(errc::zero_polynomial, "lyapunov needs degree >= 1");
    const int n = p.degree();
    std::vector<Rat> a(static_cast<size_t>(n) + 1);  // monic: z^n + a_1 z^{n-1} + ... + a_n
    for (int j = 0; j <= n; ++j) a[static_cast<size_t>(j)] = Rat(p.coeff(n - j)) / Rat(p.leading());
    QMat m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
    for (int i = 0; i + 1 < n; ++i) m[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = 1;
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(n - 1)] = -a[static_cast<size_t>(n - i)];

    // unknowns v_{ij}, i <= j
    auto idx = [&](int i, int j) { return static_cast<size_t>(i * n - i * (i - 1) / 2 + (j - i)); };
    const size_t nv = static_cast<size_t>(n * (n + 1) / 2);
    QMat sys(nv, std::vector<Rat>(nv, Rat(0)));
    std::vector<Rat> rhs(nv, Rat(0));
    size_t row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j, ++row) {
            // (VM + M^T V)_{ij} = sum_k v_{ik} m_{kj} + sum_k m_{ki} v_{kj}
            for (int k = 0; k < n; ++k) {
                size_t c1 = idx(std::min(i, k), std::max(i, k));
                sys[row][c1] += m[static_cast<size_t>(k)][static_cast<size_t>(j)];
                size_t c2 = idx(std::min(k, j), std::max(k, j));
                sys[row][c2] += m[static_cast<size_t>(k)][static_cast<size_t>(i)];
            }
            rhs[row] = (i == j) ? Rat(-1) : Rat(0);
        }
    auto sol = solve_linear(std::move(sys), std::move(rhs));
    if (!sol) return std::nullopt;
    QMat v(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) v[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                                        v[static_cast<size_t>(j)][static_cast<size_t>(i)] = (*sol)[idx(i, j)];
    // positive definiteness via exact inertia
    if (symmetric_inertia(v).positive != n) return std::nullopt;
    return v;
}

// --- Hoste-style report --------------------------------------------------------

struct HosteReport {
    bool hoste_ok = false;
    bool bridge_bounds_ok = false;
    std::optional<IsolatingInterval> delta_max;  // largest real zero, certified
    double max_re_numeric = 0;                   // largest Re over all zeros
};

namespace detail {

inline IntPoly positive_leading(const IntPoly& p) {
    if (p.is_zero()) raise(errc::zero_polynomial, "positive_leading(0)");
    return p.leading() > 0 ? p : -p;
}

}  // namespace detail

inline HosteReport hoste_report(const IntPoly& p, double tol = 1e-12, unsigned seed = 0) {
    if (p.is_zero()) raise(errc::zero_polynomial, "hoste_report(0)");
    HosteReport out;
    const IntPoly shift1 = p.compose(IntPoly({-1, -1}));  // p(-(t+1))
    const IntPoly shift3 = p.compose(IntPoly({-3, -1}));  // p(-(t+3))
    const IntPoly shift6 = p.compose(IntPoly({6, 1}));    // p(t+6)
    out.hoste_ok = s_hurwitz(detail::positive_leading(shift1)).s_hurwitz_stable;
    out.bridge_bounds_ok = s_hurwitz(detail::positive_leading(shift3)).s_hurwitz_stable &&
                           s_hurwitz(detail::positive_leading(shift6)).s_hurwitz_stable;
    out.delta_max = detail::largest_real_zero(p);
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& z : numeric_zeros(p, tol, seed).zeros) best = std::max(best, z.real());
    out.max_re_numeric = best;
    return out;
}

}  // namespace knotstab

#endif
