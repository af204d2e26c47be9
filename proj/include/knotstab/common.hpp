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

#ifndef KNOTSTAB_COMMON_HPP
#define KNOTSTAB_COMMON_HPP

#include <gmpxx.h>

#include <climits>
#include <stdexcept>
#include <string>

namespace knotstab {

using Int = mpz_class;
using Rat = mpq_class;

enum class errc {
    zero_polynomial,
    not_reciprocal,
    odd_degree,
    non_positive_leading,
    empty_cf,
    zero_entry,
    dimension_mismatch,
    spec_violation,
    not_symmetric,
    not_real_rooted,
    not_c_stable,
    not_expandable,
    odd_denominator,
    zero_k,
    bad_dimensions,
    parity_violation,
    even_length,
    not_multi_affine,
    zero_input,
    pole_at_i,
    root_at_zero_or_i,
    bad_fraction,
    even_p,
    parse_error,
    cap_exceeded,
    io_error,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::not_reciprocal: return "NotReciprocal";
        case errc::odd_degree: return "OddDegree";
        case errc::non_positive_leading: return "NonPositiveLeading";
        case errc::empty_cf: return "EmptyCF";
        case errc::zero_entry: return "ZeroEntry";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::spec_violation: return "SpecViolation";
        case errc::not_symmetric: return "NotSymmetric";
        case errc::not_real_rooted: return "NotRealRooted";
        case errc::not_c_stable: return "NotCStable";
        case errc::not_expandable: return "NotExpandable";
        case errc::odd_denominator: return "OddDenominator";
        case errc::zero_k: return "ZeroK";
        case errc::bad_dimensions: return "BadDimensions";
        case errc::parity_violation: return "ParityViolation";
        case errc::even_length: return "EvenLength";
        case errc::not_multi_affine: return "NotMultiAffine";
        case errc::zero_input: return "ZeroInput";
        case errc::pole_at_i: return "PoleAtI";
        case errc::root_at_zero_or_i: return "RootAtZeroOrI";
        case errc::bad_fraction: return "BadFraction";
        case errc::even_p: return "EvenP";
        case errc::parse_error: return "ParseError";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::io_error: return "IOError";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

inline int sign_of(const Int& x) { return sgn(x); }
inline int sign_of(const Rat& x) { return sgn(x); }

inline Int to_int(long long v) {
    if (v >= LONG_MIN && v <= LONG_MAX) return Int(static_cast<long>(v));
    return Int(std::to_string(v));
}

inline Rat make_rat(Int num, Int den) {
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

// 10^-k as exact rational
inline Rat rat_pow10_inv(unsigned k) {
    Int d = 1;
    for (unsigned i = 0; i < k; ++i) d *= 10;
    return make_rat(1, d);
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int int_pow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace knotstab

#endif
