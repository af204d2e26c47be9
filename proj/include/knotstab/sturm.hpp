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

#ifndef KNOTSTAB_STURM_HPP
#define KNOTSTAB_STURM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "polyring.hpp"

namespace knotstab {

struct IsolatingInterval {
    Rat lo, hi;            // lo == hi marks an exact rational root
    int multiplicity = 1;  // in the polynomial that was isolated

    bool exact() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    double mid_double() const { return mid().get_d(); }
};

// Yun decomposition: pairwise-coprime square-free factors h_i with f =
// lc * prod h_i^i (monic factors, multiplicities strictly increasing).
inline std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& f) {
    if (f.is_zero()) raise(errc::zero_polynomial, "squarefree_decomposition(0)");
    std::vector<std::pair<RatPoly, int>> out;
    if (f.degree() == 0) return out;
    RatPoly fp = f.derivative();
    RatPoly g = gcd(f, fp);
    RatPoly w = divmod(f, g).first;
    RatPoly y = divmod(fp, g).first;
    int i = 1;
    while (w.degree() > 0) {
        RatPoly z = y - w.derivative();
        RatPoly h = gcd(w, z);
        if (h.degree() > 0) out.emplace_back(h.monic(), i);
        w = divmod(w, h).first;
        y = divmod(z, h).first;
        ++i;
    }
    return out;
}

inline RatPoly squarefree_part(const RatPoly& f) {
    auto g = gcd(f, f.derivative());
    return divmod(f, g).first.monic();
}

inline IntPoly squarefree_part(const IntPoly& f) {
    RatPoly sf = squarefree_part(RatPoly(f)).primitive_positive();
    std::vector<Int> c;
    for (const auto& q : sf.coeffs()) c.push_back(q.get_num());
    return IntPoly(std::move(c));
}

inline bool is_squarefree(const IntPoly& f) {
    if (f.is_zero()) return false;
    return gcd(RatPoly(f), RatPoly(f).derivative()).degree() == 0;
}

class SturmChain {
public:
    explicit SturmChain(const RatPoly& f) {
        RatPoly a = f.primitive_positive();
        seq_.push_back(a);
        RatPoly b = a.derivative().primitive_positive();
        while (!b.is_zero()) {
            seq_.push_back(b);
            RatPoly r = divmod(a, b).second;
            a = b;
            // negate the remainder; positive scaling keeps the sign pattern
            b = (Rat(-1) * r).primitive_positive();
        }
    }

    int variations(const Rat& x) const {
        int v = 0, prev = 0;
        for (const auto& p : seq_) {
            int s = sign_of(p.eval(x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    // number of distinct real roots in (a, b]; requires f(a) != 0
    int count(const Rat& a, const Rat& b) const { return variations(a) - variations(b); }

    const RatPoly& poly() const { return seq_.front(); }

private:
    std::vector<RatPoly> seq_;
};

// 1 + max |c_i / c_d|: strictly larger than the absolute value of any root.
inline Rat cauchy_root_bound(const RatPoly& f) {
    Rat m = 0;
    for (const auto& c : f.coeffs()) {
        Rat a = abs(c / f.leading());
        if (a > m) m = a;
    }
    return m + 1;
}

namespace detail {

// Exactly one root of the square-free f lies in (lo, hi) and f(lo), f(hi) != 0;
// shrink by sign-change bisection until width < eps or the root is hit exactly.
inline IsolatingInterval refine_simple_root(const RatPoly& f, Rat lo, Rat hi, const Rat& eps) {
    int slo = sign_of(f.eval(lo));
    while (hi - lo >= eps) {
        Rat mid = (lo + hi) / 2;
        int sm = sign_of(f.eval(mid));
        if (sm == 0) return {mid, mid, 1};
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi, 1};
}

}  // namespace detail

// Keep shrinking an isolating interval of the square-free f (exactly one
// simple root inside, endpoints not roots) until its width drops below eps.
inline void refine_below(IsolatingInterval& iv, const RatPoly& f, const Rat& eps) {
    if (iv.exact() || iv.width() < eps) return;
    int mult = iv.multiplicity;
    iv = detail::refine_simple_root(f, iv.lo, iv.hi, eps);
    iv.multiplicity = mult;
}

// Isolating intervals for all distinct real roots of the square-free f,
// sorted ascending, pairwise disjoint, multiplicity left at 1.
inline std::vector<IsolatingInterval> isolate_squarefree(const RatPoly& f, const Rat& eps) {
    std::vector<IsolatingInterval> out;
    if (f.degree() <= 0) return out;
    SturmChain chain(f);
    Rat bound = cauchy_root_bound(f);
    struct Job {
        Rat lo, hi;
        int count;
    };
    std::vector<Job> stack;
    stack.push_back({-bound, bound, chain.count(-bound, bound)});
    while (!stack.empty()) {
        Job job = stack.back();
        stack.pop_back();
        if (job.count == 0) continue;
        if (job.count == 1) {
            // endpoints are non-roots by construction
            out.push_back(detail::refine_simple_root(f, job.lo, job.hi, eps));
            continue;
        }
        Rat mid = (job.lo + job.hi) / 2;
        if (f.eval(mid) == 0) {
            out.push_back({mid, mid, 1});
            // nudge away from the exact root until only it sits between the cuts
            Rat delta = (job.hi - job.lo) / 4;
            while (f.eval(mid - delta) == 0 || f.eval(mid + delta) == 0 ||
                   chain.count(mid - delta, mid + delta) != 1)
                delta /= 2;
            int left = chain.count(job.lo, mid - delta);
            int right = chain.count(mid + delta, job.hi);
            if (left > 0) stack.push_back({job.lo, mid - delta, left});
            if (right > 0) stack.push_back({mid + delta, job.hi, right});
        } else {
            int left = chain.count(job.lo, mid);
            stack.push_back({job.lo, mid, left});
            stack.push_back({mid, job.hi, job.count - left});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
    return out;
}

// Real roots of p with multiplicities, optionally restricted to the open
// interval (range->first, range->second); intervals of distinct roots are
// pairwise disjoint and sorted ascending.
inline std::vector<IsolatingInterval> isolate_real_roots(
    const RatPoly& p, std::optional<std::pair<Rat, Rat>> range = std::nullopt,
    const Rat& eps = rat_pow10_inv(12)) {
    if (p.is_zero()) raise(errc::zero_polynomial, "isolate_real_roots(0)");
    auto factors = squarefree_decomposition(p);
    std::vector<IsolatingInterval> all;
    std::vector<RatPoly> owner;
    for (const auto& [h, mult] : factors) {
        for (auto iv : isolate_squarefree(h, eps)) {
            iv.multiplicity = mult;
            all.push_back(iv);
            owner.push_back(h);
        }
    }
    // roots of distinct Yun factors are distinct; separate their intervals
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) {
            while (!(all[i].hi < all[j].lo || all[j].hi < all[i].lo) &&
                   !(all[i].exact() && all[j].exact())) {
                Rat w = all[i].width() + all[j].width();
                if (w == 0) break;  // both exact and distinct
                refine_below(all[i], owner[i], all[i].width() / 4);
                refine_below(all[j], owner[j], all[j].width() / 4);
            }
        }
    if (range) {
        std::vector<IsolatingInterval> kept;
        std::vector<RatPoly> kept_owner;
        const Rat& lo = range->first;
        const Rat& hi = range->second;
        for (size_t i = 0; i < all.size(); ++i) {
            auto& iv = all[i];
            // refine until the interval is strictly inside or outside (lo, hi)
            while (true) {
                if (iv.hi < lo || iv.lo > hi) break;
                if (iv.lo > lo && iv.hi < hi) break;
                if (iv.exact()) break;
                if (owner[i].eval(lo) == 0 || owner[i].eval(hi) == 0) {
                    // an endpoint is itself a root: it may be this one
                    if (owner[i].eval(lo) == 0 && iv.lo <= lo && lo <= iv.hi) {
                        iv = {lo, lo, iv.multiplicity};
                        break;
                    }
                    if (owner[i].eval(hi) == 0 && iv.lo <= hi && hi <= iv.hi) {
                        iv = {hi, hi, iv.multiplicity};
                        break;
                    }
                }
                refine_below(iv, owner[i], iv.width() / 4);
            }
            bool inside = iv.exact() ? (iv.lo > lo && iv.lo < hi) : (iv.lo > lo && iv.hi < hi);
            if (inside) {
                kept.push_back(iv);
                kept_owner.push_back(owner[i]);
            }
        }
        all = std::move(kept);
    }
    std::sort(all.begin(), all.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
    return all;
}

inline std::vector<IsolatingInterval> isolate_real_roots(
    const IntPoly& p, std::optional<std::pair<Rat, Rat>> range = std::nullopt,
    const Rat& eps = rat_pow10_inv(12)) {
    return isolate_real_roots(RatPoly(p), range, eps);
}

// Total number of real roots counted with multiplicity.
inline int real_root_count(const IntPoly& p) {
    int n = 0;
    for (const auto& iv : isolate_real_roots(p)) n += iv.multiplicity;
    return n;
}

}  // namespace knotstab

#endif
