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

#ifndef KNOTSTAB_CF_HPP
#define KNOTSTAB_CF_HPP

#include <string>
#include <vector>

#include "common.hpp"

namespace knotstab {

// Even continued fraction [2a_1, ..., 2a_m], stored by half-entries a_i != 0.
struct EvenCF {
    std::vector<long long> half_entries;

    EvenCF() = default;
    explicit EvenCF(std::vector<long long> a) : half_entries(std::move(a)) {
        for (long long v : half_entries)
            if (v == 0) raise(errc::zero_entry, "zero half-entry in continued fraction");
    }
    // from full (even) entries 2a_i
    static EvenCF from_entries(const std::vector<long long>& full) {
        std::vector<long long> halves;
        halves.reserve(full.size());
        for (long long v : full) {
            if (v == 0) raise(errc::zero_entry, "zero entry in continued fraction");
            if (v % 2 != 0) raise(errc::parity_violation, "continued fraction entries must be even");
            halves.push_back(v / 2);
        }
        return EvenCF(std::move(halves));
    }

    size_t length() const { return half_entries.size(); }
    bool empty() const { return half_entries.empty(); }

    std::string text() const {  // "[2,-2,-8,2]" with full entries
        std::string out = "[";
        for (size_t i = 0; i < half_entries.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(2 * half_entries[i]);
        }
        out += ']';
        return out;
    }

    friend bool operator==(const EvenCF& a, const EvenCF& b) {
        return a.half_entries == b.half_entries;
    }
};

// Reduced fraction beta/alpha with alpha >= 1; beta may be negative.
struct Fraction {
    Int beta, alpha;

    Fraction(Int b, Int a) : beta(std::move(b)), alpha(std::move(a)) {
        if (alpha == 0) raise(errc::bad_fraction, "zero denominator");
        if (beta == 0) raise(errc::bad_fraction, "zero numerator");
        if (alpha < 0) {
            alpha = -alpha;
            beta = -beta;
        }
        Int g;
        mpz_gcd(g.get_mpz_t(), beta.get_mpz_t(), alpha.get_mpz_t());
        if (g > 1) {
            beta /= g;
            alpha /= g;
        }
        if (abs(beta) > alpha) raise(errc::bad_fraction, "|beta| must not exceed alpha");
    }

    std::string text() const { return beta.get_str() + "/" + alpha.get_str(); }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.beta == b.beta && a.alpha == b.alpha;
    }
};

}  // namespace knotstab

#endif
