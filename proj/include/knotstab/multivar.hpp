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

#ifndef KNOTSTAB_MULTIVAR_HPP
#define KNOTSTAB_MULTIVAR_HPP

#include <complex>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "families.hpp"
#include "stability.hpp"

namespace knotstab {

// Sparse bivariate Laurent polynomial over the integers.
class BiLaurent {
public:
    using Key = std::pair<long, long>;

    BiLaurent() = default;
    static BiLaurent term(Int c, long i, long j) {
        BiLaurent p;
        if (c != 0) p.t_[{i, j}] = std::move(c);
        return p;
    }
    static BiLaurent constant(Int c) { return term(std::move(c), 0, 0); }

    bool is_zero() const { return t_.empty(); }
    const std::map<Key, Int>& terms() const { return t_; }
    Int coeff(long i, long j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? Int(0) : it->second;
    }

    void add_term(const Int& c, long i, long j) {
        if (c == 0) return;
        auto it = t_.find({i, j});
        if (it == t_.end()) {
            t_[{i, j}] = c;
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    friend BiLaurent operator+(const BiLaurent& a, const BiLaurent& b) {
        BiLaurent r = a;
        for (const auto& [k, c] : b.t_) r.add_term(c, k.first, k.second);
        return r;
    }
    friend BiLaurent operator-(const BiLaurent& a, const BiLaurent& b) {
        BiLaurent r = a;
        for (const auto& [k, c] : b.t_) r.add_term(-c, k.first, k.second);
        return r;
    }
    friend BiLaurent operator-(const BiLaurent& a) {
        BiLaurent r;
        for (const auto& [k, c] : a.t_) r.t_[k] = -c;
        return r;
    }
    friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
        BiLaurent r;
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_)
                r.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
        return r;
    }
    friend BiLaurent operator*(const Int& s, const BiLaurent& a) {
        BiLaurent r;
        if (s == 0) return r;
        for (const auto& [k, c] : a.t_) r.t_[k] = s * c;
        return r;
    }
    friend bool operator==(const BiLaurent& a, const BiLaurent& b) { return a.t_ == b.t_; }

    BiLaurent swapped_vars() const {
        BiLaurent r;
        for (const auto& [k, c] : t_) r.t_[{k.second, k.first}] = c;
        return r;
    }

    // canonical form under units +-x^i y^j: minimal exponents shifted to 0 and
    // a positive coefficient on the lexicographically smallest term
    BiLaurent unit_normal() const {
        if (is_zero()) return *this;
        long mi = t_.begin()->first.first, mj = t_.begin()->first.second;
        for (const auto& [k, c] : t_) {
            mi = std::min(mi, k.first);
            mj = std::min(mj, k.second);
        }
        BiLaurent r;
        for (const auto& [k, c] : t_) r.t_[{k.first - mi, k.second - mj}] = c;
        if (r.t_.begin()->second < 0) r = -r;
        return r;
    }

    std::string text() const {  // "c:i,j;..." triples
        if (is_zero()) return "0:0,0";
        std::string out;
        for (const auto& [k, c] : t_) {
            if (!out.empty()) out += ';';
            out += c.get_str() + ":" + std::to_string(k.first) + "," + std::to_string(k.second);
        }
        return out;
    }

    // substitute x = t^dx, y = t^dy (dx, dy in {1,-1}); result is Laurent in t
    std::map<long, Int> substitute_powers(int dx, int dy) const {
        std::map<long, Int> r;
        for (const auto& [k, c] : t_) {
            long e = dx * k.first + dy * k.second;
            auto it = r.find(e);
            if (it == r.end())
                r[e] = c;
            else {
                it->second += c;
                if (it->second == 0) r.erase(it);
            }
        }
        return r;
    }

    std::complex<double> eval(std::complex<double> x, std::complex<double> y) const {
        std::complex<double> acc = 0;
        for (const auto& [k, c] : t_)
            acc += c.get_d() * std::pow(x, static_cast<double>(k.first)) *
                   std::pow(y, static_cast<double>(k.second));
        return acc;
    }

private:
    std::map<Key, Int> t_;
};

inline bool equal_up_to_units(const BiLaurent& a, const BiLaurent& b) {
    return a.unit_normal() == b.unit_normal();
}

// G_n = (x^n - y^n)/(x - y), G_0 = 0, G_{-n} = -(xy)^{-n} G_n
inline BiLaurent gk(long n) {
    BiLaurent r;
    if (n == 0) return r;
    if (n > 0) {
        for (long i = 0; i < n; ++i) r.add_term(Int(1), i, n - 1 - i);
    } else {
        long m = -n;
        for (long i = 0; i < m; ++i) r.add_term(Int(-1), i - m, -1 - i);
    }
    return r;
}

// Two-variable Alexander polynomial of the 2-bridge link
// [2a_1, 2b_1, ..., 2a_n, 2b_n, 2a_{n+1}] by the subset-sum expansion.
inline BiLaurent alexander_xy(const EvenCF& cf) {
    if (cf.length() % 2 == 0) raise(errc::even_length, "alexander_xy needs an odd-length expansion");
    const size_t n = cf.length() / 2;
    std::vector<long long> a(n + 1), b(n);
    for (size_t i = 0; i <= n; ++i) a[i] = cf.half_entries[2 * i];
    for (size_t i = 0; i < n; ++i) b[i] = cf.half_entries[2 * i + 1];
    if (n > 20) raise(errc::cap_exceeded, "alexander_xy supports up to 20 interior twists");

    const BiLaurent xm1 = BiLaurent::term(1, 1, 0) - BiLaurent::constant(1);
    const BiLaurent ym1 = BiLaurent::term(1, 0, 1) - BiLaurent::constant(1);
    BiLaurent total;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        // split positions j with mask bit set; mu_i = sums of a-runs
        Int coeff = 1;
        BiLaurent prod = BiLaurent::constant(1);
        long run = 0;
        bool zero = false;
        int chosen = 0;
        for (size_t j = 0; j <= n; ++j) {
            run += a[j];
            bool cut = j < n && (mask >> j & 1ul);
            if (cut || j == n) {
                if (run == 0) {
                    zero = true;  // G_0 = 0 kills the term
                    break;
                }
                prod = prod * gk(run);
                run = 0;
                if (cut) {
                    coeff *= to_int(b[j]);
                    ++chosen;
                }
            }
        }
        if (zero) continue;
        BiLaurent term = coeff * prod;
        for (int i = 0; i < chosen; ++i) term = term * xm1 * ym1;
        total = total + term;
    }
    return total;
}

inline Int linking_number(const EvenCF& cf) {
    if (cf.length() % 2 == 0) raise(errc::even_length, "linking_number needs an odd-length expansion");
    Int l = 0;
    for (size_t i = 0; i < cf.length(); i += 2) l += to_int(cf.half_entries[i]);
    return l;
}

enum class SpecializeMode { diag, reversed };

// diag: (t-1) D(t,t) normalized; reversed: t^s D(t, 1/t) normalized
inline IntPoly specialize(const BiLaurent& d, SpecializeMode mode) {
    if (d.is_zero()) raise(errc::zero_input, "specialize(0)");
    auto laurent = d.substitute_powers(1, mode == SpecializeMode::diag ? 1 : -1);
    long min_e = laurent.begin()->first;
    std::vector<Int> c(static_cast<size_t>(laurent.rbegin()->first - min_e) + 1, Int(0));
    for (const auto& [e, v] : laurent) c[static_cast<size_t>(e - min_e)] = v;
    IntPoly p{std::move(c)};
    if (mode == SpecializeMode::diag) p = p * IntPoly({-1, 1});
    return normalize_alexander(p);
}

struct InversiveCheck {
    StabilityReport diag_report;
    StabilityReport reversed_report;
    bool inversive = false;
};

// One orientation gives all-real zeros, the reversed one all-unit (or the
// other way around).
inline InversiveCheck inversive_check(const EvenCF& cf) {
    if (cf.length() % 2 == 0) raise(errc::even_length, "inversive_check needs a link expansion");
    BiLaurent d = alexander_xy(cf);
    InversiveCheck out;
    out.diag_report = classify(specialize(d, SpecializeMode::diag));
    out.reversed_report = classify(specialize(d, SpecializeMode::reversed));
    bool diag_real = all_zeros_real(out.diag_report);
    bool diag_unit = all_zeros_unit(out.diag_report);
    bool rev_real = all_zeros_real(out.reversed_report);
    bool rev_unit = all_zeros_unit(out.reversed_report);
    out.inversive = (diag_real && rev_unit) || (diag_unit && rev_real);
    return out;
}

// Exact stability for multi-affine a00 + a01 y + a10 x + a11 xy.
inline bool multiaffine_stable(const BiLaurent& f) {
    for (const auto& [k, c] : f.terms())
        if (k.first < 0 || k.first > 1 || k.second < 0 || k.second > 1)
            raise(errc::not_multi_affine, "multiaffine_stable needs degree <= 1 per variable");
    Int det = f.coeff(0, 0) * f.coeff(1, 1) - f.coeff(0, 1) * f.coeff(1, 0);
    return det <= 0;
}

struct HStableProbe {
    bool counterexample_found = false;
    // witness restriction x = a1 + b1 t, y = a2 + b2 t and the offending root
    Rat a1, b1, a2, b2;
    std::complex<double> root;
};

// Random upper-half-plane probe; "no counterexample" is evidence, not proof.
inline HStableProbe hstable_probe(const BiLaurent& f, int trials = 1000, unsigned seed = 0,
                                  double tol = 1e-9) {
    if (trials < 1) raise(errc::spec_violation, "hstable_probe needs trials >= 1");
    HStableProbe out;
    if (f.is_zero()) return out;
    BiLaurent g = f.unit_normal();  // clear Laurent units; x=0, y=0 are outside H
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(1000003ull * seed + static_cast<unsigned long long>(trial));
        auto rnd_rat = [&](long lo_num, long hi_num, long den) {
            std::uniform_int_distribution<long> num(lo_num, hi_num);
            return make_rat(num(rng), den);
        };
        long den = 1 + static_cast<long>(rng() % 8);
        Rat a1 = rnd_rat(-3 * den, 3 * den, den);
        Rat a2 = rnd_rat(-3 * den, 3 * den, den);
        Rat b1 = rnd_rat(1, 3 * den, den);
        Rat b2 = rnd_rat(1, 3 * den, den);
        // restriction g(a1 + b1 t, a2 + b2 t), exact
        RatPoly x(std::vector<Rat>{a1, b1});
        RatPoly y(std::vector<Rat>{a2, b2});
        RatPoly r;
        for (const auto& [k, c] : g.terms()) {
            RatPoly term = RatPoly::constant(Rat(c));
            for (long i = 0; i < k.first; ++i) term = term * x;
            for (long j = 0; j < k.second; ++j) term = term * y;
            r = r + term;
        }
        if (r.degree() < 1) continue;
        // integer rescale, then numeric roots
        RatPoly prim = r.primitive_positive();
        std::vector<Int> ic;
        for (const auto& q : prim.coeffs()) ic.push_back(q.get_num());
        auto nz = numeric_zeros(IntPoly(std::move(ic)), 1e-12, seed + static_cast<unsigned>(trial));
        for (const auto& z : nz.zeros) {
            if (z.imag() > tol) {
                out.counterexample_found = true;
                out.a1 = a1;
                out.b1 = b1;
                out.a2 = a2;
                out.b2 = b2;
                out.root = z;
                return out;
            }
        }
    }
    return out;
}

}  // namespace knotstab

#endif
