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

#ifndef KNOTSTAB_POLYRING_HPP
#define KNOTSTAB_POLYRING_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "common.hpp"

namespace knotstab {

// Dense univariate polynomial with exact integer coefficients.
// Coefficients are stored ascending by exponent; index 0 is the constant
// term and trailing zeros are trimmed, so degree() == coeffs().size()-1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { trim(); }
    IntPoly(std::initializer_list<int> ascending) {
        for (int v : ascending) c_.emplace_back(v);
        trim();
    }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int v) {
        IntPoly p;
        p.c_.push_back(std::move(v));
        p.trim();
        return p;
    }
    static IntPoly monomial(Int coeff, int exp) {
        IntPoly p;
        if (coeff != 0) {
            p.c_.assign(static_cast<size_t>(exp) + 1, Int(0));
            p.c_[static_cast<size_t>(exp)] = std::move(coeff);
        }
        return p;
    }
    // t - helper used all over the place
    static IntPoly var() { return IntPoly({0, 1}); }
    static IntPoly from_descending(std::vector<Int> desc) {
        std::reverse(desc.begin(), desc.end());
        return IntPoly(std::move(desc));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Int(0);
        return c_[static_cast<size_t>(k)];
    }
    const Int& leading() const {
        if (c_.empty()) raise(errc::zero_polynomial, "leading coefficient of 0");
        return c_.back();
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a) {
        std::vector<Int> r = a.c_;
        for (auto& v : r) v = -v;
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const Int& s, const IntPoly& a) {
        if (s == 0) return IntPoly();
        std::vector<Int> r = a.c_;
        for (auto& v : r) v *= s;
        return IntPoly(std::move(r));
    }
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    IntPoly shifted(int k) const {  // multiply by t^k, k >= 0
        if (is_zero() || k == 0) return *this;
        std::vector<Int> r(c_.size() + static_cast<size_t>(k), Int(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i + static_cast<size_t>(k)] = c_[i];
        return IntPoly(std::move(r));
    }

    // t^deg * p(1/t)
    IntPoly reversed() const {
        std::vector<Int> r(c_.rbegin(), c_.rend());
        return IntPoly(std::move(r));
    }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        std::vector<Int> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Int(static_cast<long>(i)) * c_[i];
        return IntPoly(std::move(r));
    }

    // p(q(t)), exact
    IntPoly compose(const IntPoly& q) const {
        IntPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + IntPoly::constant(*it);
        return acc;
    }

    // Multiplicity of the rational root num/den (den > 0, coprime); the
    // quotient by (den*t - num)^mult is written back in place.
    int strip_linear_root(const Int& num, const Int& den) {
        int mult = 0;
        while (!is_zero() && eval(make_rat(num, den)) == 0) {
            // synthetic division by (den*t - num)
            std::vector<Int> q(c_.size() - 1);
            Int carry = 0;  // remainder accumulator, works back from leading coeff
            for (int i = degree(); i >= 1; --i) {
                Int top = c_[static_cast<size_t>(i)] + carry;
                // top must be divisible by den for an exact quotient term
                Int qi = top / den;
                if (qi * den != top) raise(errc::internal, "non-exact synthetic division");
                q[static_cast<size_t>(i - 1)] = qi;
                carry = qi * num;
            }
            c_ = std::move(q);
            trim();
            ++mult;
        }
        return mult;
    }

    std::string text() const {  // descending comma-separated, bit-exact
        if (is_zero()) return "0";
        std::string out;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (!out.empty()) out += ',';
            out += it->get_str();
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

inline IntPoly pow(IntPoly base, unsigned e) {
    IntPoly r = IntPoly::constant(1);
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

// Dense univariate polynomial with exact rational coefficients, each stored
// canonically (lowest terms, positive denominator; the mpq invariant).
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }
    explicit RatPoly(const IntPoly& p) {
        c_.reserve(p.coeffs().size());
        for (const auto& v : p.coeffs()) c_.emplace_back(v);
    }
    static RatPoly constant(Rat v) {
        RatPoly p;
        p.c_.push_back(std::move(v));
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
        return c_[static_cast<size_t>(k)];
    }
    const Rat& leading() const {
        if (c_.empty()) raise(errc::zero_polynomial, "leading coefficient of 0");
        return c_.back();
    }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return RatPoly(std::move(r));
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return RatPoly(std::move(r));
    }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return RatPoly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return RatPoly(std::move(r));
    }
    friend RatPoly operator*(const Rat& s, const RatPoly& a) {
        if (s == 0) return RatPoly();
        std::vector<Rat> r = a.c_;
        for (auto& v : r) v *= s;
        return RatPoly(std::move(r));
    }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    RatPoly derivative() const {
        if (c_.size() <= 1) return RatPoly();
        std::vector<Rat> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * c_[i];
        return RatPoly(std::move(r));
    }

    RatPoly monic() const {
        if (is_zero()) return *this;
        Rat inv = 1 / leading();
        return inv * *this;
    }

    // Divide by a positive scalar so coefficients are integers with content 1.
    // Positive scaling preserves signs, which Sturm chains rely on.
    RatPoly primitive_positive() const {
        if (is_zero()) return *this;
        Int num_gcd = 0, den_lcm = 1;
        for (const auto& q : c_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
        }
        Rat scale = make_rat(den_lcm, num_gcd);  // positive
        return scale * *this;
    }

    friend std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
        if (b.is_zero()) raise(errc::zero_polynomial, "division by zero polynomial");
        RatPoly r = a;
        std::vector<Rat> q(a.degree() >= b.degree() ? static_cast<size_t>(a.degree() - b.degree()) + 1 : 0,
                           Rat(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            Rat f = r.leading() / b.leading();
            q[static_cast<size_t>(shift)] = f;
            std::vector<Rat> sub(static_cast<size_t>(r.degree()) + 1, Rat(0));
            for (size_t i = 0; i < b.c_.size(); ++i) sub[i + static_cast<size_t>(shift)] = f * b.c_[i];
            r = r - RatPoly(std::move(sub));
        }
        return {RatPoly(std::move(q)), r};
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a.primitive_positive(), y = b.primitive_positive();
    while (!y.is_zero()) {
        RatPoly r = divmod(x, y).second;
        x = y;
        y = r.primitive_positive();
    }
    if (x.is_zero()) return x;
    return x.monic();
}

// Integer-primitive gcd with positive leading coefficient.
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    RatPoly g = gcd(RatPoly(a), RatPoly(b));
    if (g.is_zero()) return IntPoly();
    RatPoly ip = g.primitive_positive();
    std::vector<Int> c;
    c.reserve(ip.coeffs().size());
    for (const auto& q : ip.coeffs()) c.push_back(q.get_num());
    IntPoly r{std::move(c)};
    if (r.leading() < 0) r = -r;
    return r;
}

inline bool divides(const IntPoly& d, const IntPoly& a) {
    if (d.is_zero()) return a.is_zero();
    return divmod(RatPoly(a), RatPoly(d)).second.is_zero();
}

inline IntPoly divexact(const IntPoly& a, const IntPoly& d) {
    auto [q, r] = divmod(RatPoly(a), RatPoly(d));
    if (!r.is_zero()) raise(errc::internal, "inexact polynomial division");
    std::vector<Int> c;
    c.reserve(q.coeffs().size());
    for (const auto& v : q.coeffs()) {
        if (v.get_den() != 1) raise(errc::internal, "non-integer quotient");
        c.push_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

struct CoeffProfile {
    bool is_alternating_sign = false;
    std::optional<int> is_trapezoidal;  // plateau start index k (0-based coefficients)
    bool is_strictly_log_concave = false;
};

// --- polyring operations ---------------------------------------------------

// Strip the t^k unit and force a positive leading coefficient; sign_hint, when
// given, is applied first and must already yield the positive leading sign.
inline IntPoly normalize_alexander(const IntPoly& p, std::optional<int> sign_hint = std::nullopt) {
    if (p.is_zero()) raise(errc::zero_polynomial, "normalize_alexander(0)");
    size_t low = 0;
    while (p.coeff(static_cast<int>(low)) == 0) ++low;
    std::vector<Int> c(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end());
    IntPoly q{std::move(c)};
    if (sign_hint) {
        int h = *sign_hint;
        if (h != 1 && h != -1) raise(errc::spec_violation, "sign hint must be +1 or -1");
        if (h == -1) q = -q;
        if (q.leading() < 0)
            raise(errc::spec_violation, "sign hint disagrees with positive-leading normalization");
    }
    if (q.leading() < 0) q = -q;
    return q;
}

// Reciprocal up to units: the reversed coefficient sequence equals +-p.
// Knot polynomials are palindromic; link polynomials of odd degree are
// anti-palindromic and still count.
inline bool is_reciprocal(const IntPoly& p) {
    if (p.is_zero()) raise(errc::zero_polynomial, "is_reciprocal(0)");
    IntPoly rev = p.reversed();
    return rev == p || rev == -p;
}

inline bool is_palindromic(const IntPoly& p) {
    if (p.is_zero()) raise(errc::zero_polynomial, "is_palindromic(0)");
    return p == p.reversed();
}

// F with t^{-n} p(t) = F(t + 1/t), via the integer recurrence for t^k + t^{-k}.
inline IntPoly modification(const IntPoly& p) {
    if (p.is_zero()) raise(errc::zero_polynomial, "modification(0)");
    if (!is_palindromic(p)) raise(errc::not_reciprocal, "modification needs a palindromic polynomial");
    if (p.degree() % 2 != 0) raise(errc::odd_degree, "modification needs even degree");
    int n = p.degree() / 2;
    IntPoly F = IntPoly::constant(p.coeff(n));
    IntPoly pk_prev = IntPoly::constant(2);  // t^0 + t^0
    IntPoly pk = IntPoly::var();             // t + 1/t
    const IntPoly x = IntPoly::var();
    for (int k = 1; k <= n; ++k) {
        F += p.coeff(n + k) * pk;
        IntPoly next = x * pk - pk_prev;
        pk_prev = pk;
        pk = next;
    }
    return F;
}

// a_0 (x-2)^n + a_1 (x-2)^{n-1} + ... + a_n, from the even-part coefficients
// a_0..a_n of z^{2n}, z^{2n-2}, ..., z^0.
inline IntPoly conway_to_modified(const std::vector<Int>& a) {
    IntPoly xm2({-2, 1});
    IntPoly acc;
    for (const auto& ai : a) acc = acc * xm2 + IntPoly::constant(ai);
    return acc;
}

inline CoeffProfile coeff_profile(const IntPoly& p) {
    if (p.is_zero()) raise(errc::zero_polynomial, "coeff_profile(0)");
    const int d = p.degree();
    CoeffProfile out;

    out.is_alternating_sign = true;
    for (int j = 0; j <= d; ++j) {
        if (p.coeff(j) == 0 || (j > 0 && sign_of(p.coeff(j)) * sign_of(p.coeff(j - 1)) != -1)) {
            out.is_alternating_sign = false;
            break;
        }
    }

    std::vector<Int> a(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) a[static_cast<size_t>(j)] = abs(p.coeff(j));

    // strictly increasing to index k, constant on the symmetric plateau
    // [k, d-k], strictly decreasing after
    for (int k = 1; 2 * k <= d + 1 && !out.is_trapezoidal; ++k) {
        if (d - k < k) break;
        bool ok = true;
        for (int j = 1; j <= k && ok; ++j) ok = a[j - 1] < a[j];
        for (int j = k + 1; j <= d - k && ok; ++j) ok = a[j] == a[static_cast<size_t>(k)];
        for (int j = d - k + 1; j <= d && ok; ++j) ok = a[j - 1] > a[j];
        if (ok) out.is_trapezoidal = k;
    }

    out.is_strictly_log_concave = d >= 2;
    for (int j = 1; j < d; ++j) {
        if (!(a[j - 1] * a[j + 1] < a[j] * a[j])) {
            out.is_strictly_log_concave = false;
            break;
        }
    }
    return out;
}

}  // namespace knotstab

#endif
