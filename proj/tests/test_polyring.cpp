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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotstab/polyring.hpp"
#include "knotstab/text.hpp"
#include "test_util.hpp"

using namespace knotstab;

TEST_CASE("normalize strips units and fixes the sign") {
    // -(t^2 - 3t + 1) t^3
    IntPoly p = Int(-1) * IntPoly({1, -3, 1}).shifted(3);
    CHECK(normalize_alexander(p) == IntPoly({1, -3, 1}));

    // determinant route for the twisted chain of [2,-2] is -t^2 + 3t - 1;
    // the sign hint from the entry signs restores the positive leading form
    IntPoly det({-1, 3, -1});
    CHECK(normalize_alexander(det, -1) == IntPoly({1, -3, 1}));

    CHECK(normalize_alexander(IntPoly::constant(5)) == IntPoly::constant(5));
    CHECK_THROWS_AS(normalize_alexander(IntPoly()), error);
    // a hint that disagrees with the positivity fix is a contract violation
    CHECK_THROWS_AS(normalize_alexander(IntPoly({1, -3, 1}), -1), error);
}

TEST_CASE("normalize is idempotent") {
    ktest::Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        IntPoly p = ktest::rnd_poly(rng, static_cast<int>(ktest::rnd_range(rng, 0, 9)), 9);
        if (p.is_zero()) continue;
        IntPoly q = normalize_alexander(p);
        CHECK(normalize_alexander(q) == q);
    }
}

TEST_CASE("reciprocal detection") {
    CHECK(is_reciprocal(IntPoly({1, -7, 13, -7, 1})));
    CHECK_FALSE(is_reciprocal(IntPoly({-2, 1})));
    CHECK(is_reciprocal(IntPoly({-1, 3, -3, 3, -3, 1})));
    CHECK_THROWS_AS(is_reciprocal(IntPoly()), error);
}

TEST_CASE("modification of reciprocal polynomials") {
    CHECK(modification(IntPoly({1, -3, 2, -1, 2, -3, 1})) == IntPoly({5, -1, -3, 1}));
    CHECK(modification(IntPoly({1, -3, 1})) == IntPoly({-3, 1}));
    CHECK(modification(IntPoly({1, 0, 1})) == IntPoly({0, 1}));
    CHECK_THROWS_AS(modification(IntPoly({-2, 1})), error);
    // odd-degree palindrome
    CHECK_THROWS_AS(modification(IntPoly({1, 0, 0, 1})), error);
}

TEST_CASE("modification evaluation identity") {
    ktest::Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        int n = static_cast<int>(ktest::rnd_range(rng, 1, 6));
        IntPoly p = ktest::rnd_reciprocal(rng, n, 9);
        IntPoly f = modification(p);
        for (int j = 0; j < 20; ++j) {
            Rat alpha = make_rat(ktest::rnd_nonzero(rng, 40), ktest::rnd_range(rng, 1, 12));
            Rat x = alpha + 1 / alpha;
            Rat lhs = f.eval(x);
            for (int k = 0; k < n; ++k) lhs *= alpha;
            CHECK(lhs == p.eval(alpha));
        }
    }
}

TEST_CASE("conway coefficients to the modified polynomial") {
    CHECK(conway_to_modified({Int(1), Int(1)}) == IntPoly({-1, 1}));   // z^2 + 1
    CHECK(conway_to_modified({Int(1)}) == IntPoly::constant(1));
    CHECK(conway_to_modified({Int(-1), Int(1)}) == IntPoly({3, -1}));  // -z^2 + 1
}

TEST_CASE("conway route agrees with the modification route") {
    ktest::Rng rng(13);
    const IntPoly tm1sq = IntPoly({-1, 1}) * IntPoly({-1, 1});
    for (int trial = 0; trial < 60; ++trial) {
        int n = static_cast<int>(ktest::rnd_range(rng, 1, 5));  // conway degree 2n <= 10
        std::vector<Int> a(static_cast<size_t>(n) + 1);
        a[0] = ktest::rnd_nonzero(rng, 5);
        for (int i = 1; i <= n; ++i) a[static_cast<size_t>(i)] = ktest::rnd_range(rng, -5, 5);
        // p(t) = sum a_i (t-1)^{2(n-i)} t^i realizes z^2 = t + 1/t - 2
        IntPoly p;
        for (int i = 0; i <= n; ++i)
            p += a[static_cast<size_t>(i)] * pow(tm1sq, static_cast<unsigned>(n - i)).shifted(i);
        REQUIRE(is_reciprocal(p));
        CHECK(conway_to_modified(a) == modification(p));
    }
}

TEST_CASE("coefficient profiles") {
    auto pr = coeff_profile(IntPoly({-1, 3, -3, 3, -3, 1}));
    CHECK(pr.is_alternating_sign);
    REQUIRE(pr.is_trapezoidal.has_value());
    CHECK(*pr.is_trapezoidal == 1);  // |c| = 1,3,3,3,3,1 plateaus from index 1

    CHECK_FALSE(coeff_profile(IntPoly({1, -2, 1, -2, 1})).is_trapezoidal.has_value());

    auto lg = coeff_profile(IntPoly({1, -7, 13, -7, 1}));
    CHECK(lg.is_strictly_log_concave);
    CHECK(lg.is_trapezoidal.has_value());

    CHECK_THROWS_AS(coeff_profile(IntPoly()), error);
}

TEST_CASE("strict log-concavity forces a short plateau") {
    // symmetric sequences, as the absolute coefficients of a reciprocal
    // polynomial always are
    ktest::Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        int d = static_cast<int>(ktest::rnd_range(rng, 2, 9));
        int m = d / 2;
        // strictly decreasing ratio steps >= 2 up to the middle, mirrored after
        std::vector<long> v(static_cast<size_t>(m));
        long cur = 2 + ktest::rnd_range(rng, 0, 3);
        for (int i = m - 1; i >= 0; --i) {
            v[static_cast<size_t>(i)] = cur;
            cur += 1 + ktest::rnd_range(rng, 0, 2);
        }
        std::vector<Int> c(static_cast<size_t>(d) + 1);
        for (int j = 0; j <= d; ++j) {
            Int val = 1;
            int upto = std::min(j, d - j);
            for (int i = 0; i < upto; ++i) val *= v[static_cast<size_t>(i)];
            c[static_cast<size_t>(j)] = val;
        }
        IntPoly p(std::move(c));
        auto prof = coeff_profile(p);
        REQUIRE(prof.is_strictly_log_concave);
        REQUIRE(prof.is_trapezoidal.has_value());
        int k = *prof.is_trapezoidal;
        CHECK(p.degree() - 2 * k + 1 <= 2);  // plateau of length at most 2
    }
}

TEST_CASE("gcd, division, square-free helpers") {
    IntPoly a = IntPoly({-1, 1}) * IntPoly({-1, 1}) * IntPoly({1, 1});
    IntPoly b = IntPoly({-1, 1}) * IntPoly({2, 1});
    CHECK(gcd(a, b) == IntPoly({-1, 1}));
    CHECK(divexact(a, IntPoly({1, 1})) == IntPoly({-1, 1}) * IntPoly({-1, 1}));
    CHECK(divides(IntPoly({-1, 1}), a));
    CHECK_FALSE(divides(IntPoly({5, 1}), a));
}

TEST_CASE("polynomial text format round-trips bit-exactly") {
    CHECK(IntPoly({1, -7, 13, -7, 1}).text() == "1,-7,13,-7,1");
    CHECK(parse_poly("1,-7,13,-7,1") == IntPoly({1, -7, 13, -7, 1}));
    CHECK(parse_poly("0").is_zero());
    CHECK(IntPoly().text() == "0");
    ktest::Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        IntPoly p = ktest::rnd_poly(rng, static_cast<int>(ktest::rnd_range(rng, 0, 12)), 1000);
        CHECK(parse_poly(p.text()) == p);
    }
    CHECK_THROWS_AS(parse_poly("1,,2"), parse_error);
    try {
        parse_poly("1,x,2");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position() == 2);
    }
}
