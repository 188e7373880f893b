// Copyright 2026 The f2sigma Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include <f2sigma/beatty.hpp>

#include "test_support.hpp"

namespace
{

using namespace f2sigma;

// floor(k * slope) in extended precision; exact for the small k used here
// because k*sqrt(2) stays far (>1e-6) from an integer.
std::uint64_t float_beatty(BeattyKind kind, std::uint64_t k)
{
    const long double r2 = std::sqrt(2.0L);
    const long double kk = static_cast<long double>(k);
    switch (kind) {
        case BeattyKind::w:
            return static_cast<std::uint64_t>(std::floor((kk - 0.5L) * (2 + r2)));
        case BeattyKind::alpha:
            return static_cast<std::uint64_t>(std::floor(kk * (2 + r2)));
        case BeattyKind::beta:
            return static_cast<std::uint64_t>(std::floor(kk * (1 + r2 / 2)));
        case BeattyKind::gamma:
            return static_cast<std::uint64_t>(std::floor((2 * kk - 1) * (1 + r2)));
        case BeattyKind::delta:
            return static_cast<std::uint64_t>(std::floor(kk * (2 + 2 * r2)));
        case BeattyKind::epsilon:
            return static_cast<std::uint64_t>(std::floor(kk * (1 + r2)));
    }
    return 0;
}

TEST(Isqrt, MatchesIncrementalRoot)
{
    std::uint64_t r = 0;
    for (std::uint64_t n = 0; n < 1'000'000; ++n) {
        while ((r + 1) * (r + 1) <= n) {
            ++r;
        }
        ASSERT_EQ(isqrt(n), r) << n;
    }
}

TEST(Isqrt, LargeValues)
{
    const std::uint64_t max = ~std::uint64_t{0};
    EXPECT_EQ(isqrt(max), 0xFFFFFFFFULL);
    EXPECT_EQ(isqrt(uint128{max} * max), max);
    EXPECT_EQ(isqrt(uint128{max} * max - 1), max - 1);
    const uint128 top = ~uint128{0};
    const std::uint64_t rt = isqrt(top);
    EXPECT_EQ(rt, max);
    for (const std::uint64_t r : {std::uint64_t{1} << 40, (std::uint64_t{1} << 62) + 12345, max - 7}) {
        const uint128 sq = uint128{r} * r;
        EXPECT_EQ(isqrt(sq), r);
        EXPECT_EQ(isqrt(sq - 1), r - 1);
        EXPECT_EQ(isqrt(sq + 2 * uint128{r}), r);
    }
}

TEST(CFunction, Examples)
{
    EXPECT_EQ(c_function(1), 1U);
    EXPECT_EQ(c_function(2), 2U);
    EXPECT_EQ(c_function(3), 2U);
    EXPECT_EQ(c_function(4), 3U);
    EXPECT_EQ(c_function(100), 17U); // 10 squares, 7 doubled squares
}

TEST(BeattyTerm, Examples)
{
    EXPECT_EQ(beatty_term(BeattyKind::w, 1), 1U);
    EXPECT_EQ(beatty_term(BeattyKind::w, 2), 5U);
    EXPECT_EQ(beatty_term(BeattyKind::w, 3), 8U);
    EXPECT_EQ(beatty_term(BeattyKind::epsilon, 1), 2U);
    EXPECT_EQ(beatty_term(BeattyKind::beta, 2), 3U);
    EXPECT_ERRC(beatty_term(BeattyKind::w, 0), errc::invalid_argument);
    EXPECT_ERRC(beatty_term(BeattyKind::w, max_beatty_index + 1), errc::invalid_argument);
    EXPECT_NO_THROW((void)beatty_term(BeattyKind::delta, max_beatty_index));
}

TEST(BeattyTerm, MatchesFloatingEvaluation)
{
    for (const auto kind : all_beatty_kinds) {
        for (std::uint64_t k = 1; k <= 10000; ++k) {
            ASSERT_EQ(beatty_term(kind, k), float_beatty(kind, k)) << beatty_name(kind) << " k=" << k;
        }
    }
}

TEST(BeattyTerm, WythoffDirectAgreesToOneMillion)
{
    for (std::uint64_t k = 1; k <= 1'000'000; ++k) {
        ASSERT_EQ(beatty_term(BeattyKind::w, k), wythoff_direct(k)) << k;
    }
    EXPECT_EQ(beatty_term(BeattyKind::w, max_beatty_index), wythoff_direct(max_beatty_index));
}

TEST(BeattyTerm, ComplementaryPairsPartitionTheIntegers)
{
    // floor(k sqrt2) and floor(k (2 + sqrt2)) are complementary Beatty sequences.
    std::vector<int> hit(30000, 0);
    for (std::uint64_t k = 1; k < 20000; ++k) {
        const auto a = beatty_term(BeattyKind::epsilon, k) - k; // floor(k sqrt2)
        const auto b = beatty_term(BeattyKind::alpha, k);       // floor(k (2 + sqrt2))
        if (a < hit.size()) {
            ++hit[a];
        }
        if (b < hit.size()) {
            ++hit[b];
        }
    }
    for (std::size_t n = 1; n < 28000; ++n) {
        ASSERT_EQ(hit[n], 1) << n;
    }
}

TEST(BeattyNames, RoundTrip)
{
    for (const auto kind : all_beatty_kinds) {
        EXPECT_EQ(parse_beatty_kind(beatty_name(kind)), kind);
    }
    EXPECT_FALSE(parse_beatty_kind("zeta").has_value());
}

TEST(SigmaEnumeration, FirstTerms)
{
    const auto e = enumerate_sigma(8);
    EXPECT_EQ(e.terms, (std::vector<std::uint64_t>{1, 2, 4, 8, 9, 16, 18, 25}));
    EXPECT_EQ(e.at(1), 1U);
    EXPECT_EQ(e.at(8), 25U);
    EXPECT_THROW((void)e.at(9), std::out_of_range);
    EXPECT_ERRC(enumerate_sigma(0), errc::invalid_argument);
}

TEST(SigmaEnumeration, MatchesOddDivisorSums)
{
    // Positive n with sigma(n) odd, straight from the divisor sums.
    const auto s = divisor_sums(200000);
    std::vector<std::uint64_t> want;
    for (std::uint64_t n = 1; n < s.size(); ++n) {
        if (s[n] % 2 == 1) {
            want.push_back(n);
        }
    }
    EXPECT_EQ(enumerate_sigma(want.size()).terms, want);
}

TEST(SigmaEnumeration, CInvertsIt)
{
    const auto o = verify_c_inverts_enumeration(1'000'000);
    EXPECT_TRUE(o.holds()) << o.report_line();
    EXPECT_EQ(o.label, "C_OF_SIGMA_ENUMERATION");
}

TEST(BeattyProps, HoldToTenThousand)
{
    const auto outcomes = verify_beatty_props(10000);
    for (const auto &o : outcomes) {
        EXPECT_TRUE(o.holds()) << o.report_line();
    }
    EXPECT_EQ(outcomes[0].label, "BEATTY_INDEX_w");
    EXPECT_ERRC(verify_beatty_props(0), errc::invalid_argument);
}

TEST(LOperator, Examples)
{
    const auto s = divisor_sums(100);
    const std::vector<std::uint64_t> sigma_values(s.begin() + 1, s.end());
    EXPECT_EQ(l_operator(sigma_values, 5), (std::vector<std::uint64_t>{1, 2, 4, 8, 9}));

    const auto l_sigma = l_operator(sigma_values, 12);
    EXPECT_EQ(l_operator(l_sigma, 3), (std::vector<std::uint64_t>{1, 5, 8}));

    const std::vector<std::uint64_t> evens{2, 4, 6, 8};
    EXPECT_ERRC(l_operator(evens, 1), errc::insufficient_odd_values);
    EXPECT_TRUE(l_operator(evens, 0).empty());
}

TEST(LOperator, FindingAgainstWAndC)
{
    const auto f = l_operator_finding(1000);
    EXPECT_EQ(f.ll_sigma.size(), 1000U);
    EXPECT_TRUE(f.matches_w());
    EXPECT_FALSE(f.matches_c());
    EXPECT_EQ(f.first_mismatch_c, 2U);
}

} // namespace
