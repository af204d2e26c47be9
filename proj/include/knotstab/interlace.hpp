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

#ifndef KNOTSTAB_INTERLACE_HPP
#define KNOTSTAB_INTERLACE_HPP

#include <vector>

#include "stability.hpp"
#include "sturm.hpp"

namespace knotstab {

enum class InterlaceDirection { f_le_g, g_le_f, equal_multiset, not_applicable };

struct InterlaceVerdict {
    bool interlaced = false;
    InterlaceDirection direction = InterlaceDirection::not_applicable;
    std::vector<IsolatingInterval> shared_roots;
};

inline const char* direction_name(InterlaceDirection d) {
    switch (d) {
        case InterlaceDirection::f_le_g: return "f_le_g";
        case InterlaceDirection::g_le_f: return "g_le_f";
        case InterlaceDirection::equal_multiset: return "equal_multiset";
        case InterlaceDirection::not_applicable: return "n/a";
    }
    return "?";
}

namespace detail {

// The distinct real roots of f*g (as intervals of the square-free part),
// plus each root's multiplicity in f and in g; all comparisons exact.
struct MergedRoots {
    std::vector<IsolatingInterval> distinct;  // sorted ascending
    std::vector<int> mult_f, mult_g;
};

inline int multiplicity_in(const std::vector<std::pair<RatPoly, int>>& yun,
                           const IsolatingInterval& iv) {
    for (const auto& [factor, mult] : yun) {
        if (factor.degree() < 1) continue;
        if (iv.exact()) {
            if (factor.eval(iv.lo) == 0) return mult;
            continue;
        }
        SturmChain chain(factor);
        if (factor.eval(iv.lo) == 0 || factor.eval(iv.hi) == 0)
            raise(errc::internal, "interval endpoint hit a factor root");
        if (chain.count(iv.lo, iv.hi) == 1) return mult;
    }
    return 0;
}

inline MergedRoots merge_roots(const IntPoly& f, const IntPoly& g) {
    MergedRoots out;
    RatPoly product = RatPoly(f) * RatPoly(g);
    out.distinct = isolate_real_roots(squarefree_part(product));
    auto yun_f = squarefree_decomposition(RatPoly(f));
    auto yun_g = squarefree_decomposition(RatPoly(g));
    for (const auto& iv : out.distinct) {
        out.mult_f.push_back(multiplicity_in(yun_f, iv));
        out.mult_g.push_back(multiplicity_in(yun_g, iv));
    }
    return out;
}

// indices into the distinct list, expanded by multiplicity
inline std::vector<size_t> expand(const std::vector<int>& mult) {
    std::vector<size_t> seq;
    for (size_t i = 0; i < mult.size(); ++i)
        for (int k = 0; k < mult[i]; ++k) seq.push_back(i);
    return seq;
}

inline bool chain_le(const std::vector<size_t>& a, const std::vector<size_t>& b) {
    // a_1 <= b_1 <= a_2 <= b_2 <= ... over the shared index order
    for (size_t i = 0; i < b.size(); ++i) {
        if (i >= a.size()) return false;
        if (!(a[i] <= b[i])) return false;
        if (i + 1 < a.size() && !(b[i] <= a[i + 1])) return false;
    }
    return true;
}

}  // namespace detail

// Exact interlacing for real-rooted f, g; shared roots are detected by gcd
// and participate in the "<=" chains.
inline InterlaceVerdict interlaced_real(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) raise(errc::zero_polynomial, "interlaced_real(0)");
    auto merged = detail::merge_roots(f, g);
    int count_f = 0, count_g = 0;
    for (size_t i = 0; i < merged.distinct.size(); ++i) {
        count_f += merged.mult_f[i];
        count_g += merged.mult_g[i];
    }
    if (count_f != f.degree() || count_g != g.degree())
        raise(errc::not_real_rooted, "interlaced_real needs real-rooted inputs");

    InterlaceVerdict out;
    for (size_t i = 0; i < merged.distinct.size(); ++i)
        if (merged.mult_f[i] > 0 && merged.mult_g[i] > 0) out.shared_roots.push_back(merged.distinct[i]);

    auto seq_f = detail::expand(merged.mult_f);
    auto seq_g = detail::expand(merged.mult_g);
    const size_t n = seq_f.size(), m = seq_g.size();
    if (seq_f == seq_g) {
        out.interlaced = true;
        out.direction = InterlaceDirection::equal_multiset;
        return out;
    }
    if (n + 1 < m || m + 1 < n) return out;  // |m - n| > 1

    bool f_first = (n == m || n == m + 1) && detail::chain_le(seq_f, seq_g);
    bool g_first = (n == m || m == n + 1) && detail::chain_le(seq_g, seq_f);
    if (f_first || g_first) {
        out.interlaced = true;
        out.direction = f_first ? InterlaceDirection::f_le_g : InterlaceDirection::g_le_f;
    }
    return out;
}

enum class ProperPositionKind { f_ll_g, g_ll_f, neither };

struct ProperPosition {
    ProperPositionKind kind = ProperPositionKind::neither;
    bool degenerate_equal = false;  // W identically zero
};

// Sign-constancy of the Wronskian W[f,g] = f'g - fg' on the real line,
// decided exactly: every real root of W must have even multiplicity.
inline ProperPosition proper_position(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) raise(errc::zero_polynomial, "proper_position(0)");
    IntPoly w = f.derivative() * g - f * g.derivative();
    ProperPosition out;
    if (w.is_zero()) {
        out.kind = ProperPositionKind::f_ll_g;
        out.degenerate_equal = true;
        return out;
    }
    for (const auto& [factor, mult] : squarefree_decomposition(RatPoly(w))) {
        if (mult % 2 == 0 || factor.degree() < 1) continue;
        if (!isolate_squarefree(factor, Rat(1)).empty()) return out;  // sign change
    }
    out.kind = w.leading() > 0 ? ProperPositionKind::g_ll_f : ProperPositionKind::f_ll_g;
    return out;
}

// Interlacing of the real parts of upper-half-plane zeros of two c-stable
// reciprocal polynomials, via their modifications on (-2, 2).
inline InterlaceVerdict interlaced_unit(const IntPoly& f_in, const IntPoly& g_in) {
    auto reduce = [](IntPoly p) {
        if (p.is_zero()) raise(errc::zero_polynomial, "interlaced_unit(0)");
        auto rep = classify(p);
        if (!all_zeros_unit(rep)) raise(errc::not_c_stable, "interlaced_unit needs c-stable inputs");
        p.strip_linear_root(1, 1);
        p.strip_linear_root(-1, 1);
        if (p.degree() == 0) return IntPoly::constant(1);
        if (!is_palindromic(p) || p.degree() % 2 != 0)
            raise(errc::not_c_stable, "c-stable core must be palindromic of even degree");
        return modification(p);
    };
    return interlaced_real(reduce(f_in), reduce(g_in));
}

}  // namespace knotstab

#endif
