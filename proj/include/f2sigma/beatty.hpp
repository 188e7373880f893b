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

// Positions of squares and twice-squares inside the sequence
// 1, 2, 4, 8, 9, 16, 18, 25, ... of positive n with sigma(n) odd, and the
// six Beatty sequences in sqrt(2) that index them.
//
// No floating point is used here. Every floor of an irrational multiple goes
// through an integer square root on 128-bit intermediates:
//
//   floor(x * sqrt 2) = isqrt(2 x^2)
//   floor(x / sqrt 2) = isqrt(floor(x^2 / 2))
//
// which gives, with x = 2k - 1,
//
//   w_k     = floor((k - 1/2)(2 + sqrt 2))   = x + isqrt(floor(x^2 / 2))
//   alpha_k = floor(k (2 + sqrt 2))          = 2k + isqrt(2 k^2)
//   beta_k  = floor(k (2 + sqrt 2) / 2)      = k + isqrt(floor(k^2 / 2))
//   gamma_k = floor((k - 1/2)(2 + 2 sqrt 2)) = x + isqrt(2 x^2)
//   delta_k = floor(k (2 + 2 sqrt 2))        = 2k + isqrt(8 k^2)
//   eps_k   = floor(k (1 + sqrt 2))          = k + isqrt(2 k^2)
//
// Terms are defined for 1 <= k <= 2^60.

#ifndef F2SIGMA_BEATTY_HPP
#define F2SIGMA_BEATTY_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <f2sigma/error.hpp>
#include <f2sigma/seqgen.hpp>
#include <f2sigma/verification.hpp>

namespace f2sigma
{

using uint128 = unsigned __int128;

// floor(sqrt(n)) by integer Newton iteration from an upper bound.
[[nodiscard]] inline constexpr std::uint64_t isqrt(uint128 n) noexcept
{
    if (n < 2) {
        return static_cast<std::uint64_t>(n);
    }
    const auto hi = static_cast<std::uint64_t>(n >> 64);
    const auto lo = static_cast<std::uint64_t>(n);
    const int width = hi != 0 ? 64 + std::bit_width(hi) : std::bit_width(lo);
    uint128 x = uint128{1} << ((width + 1) / 2);
    while (true) {
        const uint128 y = (x + n / x) / 2;
        if (y >= x) {
            break;
        }
        x = y;
    }
    return static_cast<std::uint64_t>(x);
}

[[nodiscard]] inline constexpr std::uint64_t isqrt(std::uint64_t n) noexcept
{
    if (n < 2) {
        return n;
    }
    std::uint64_t x = std::uint64_t{1} << ((std::bit_width(n) + 1) / 2);
    while (true) {
        const std::uint64_t y = (x + n / x) / 2;
        if (y >= x) {
            break;
        }
        x = y;
    }
    return x;
}

// Number of positive k^2 or 2k^2 that are <= n.
[[nodiscard]] inline constexpr std::uint64_t c_function(std::uint64_t n) noexcept
{
    return isqrt(n) + isqrt(n / 2);
}

enum class BeattyKind { w, alpha, beta, gamma, delta, epsilon };

inline constexpr std::array<BeattyKind, 6> all_beatty_kinds = {
    BeattyKind::w, BeattyKind::alpha, BeattyKind::beta, BeattyKind::gamma, BeattyKind::delta, BeattyKind::epsilon,
};

[[nodiscard]] inline constexpr std::string_view beatty_name(BeattyKind k) noexcept
{
    switch (k) {
        case BeattyKind::w:
            return "w";
        case BeattyKind::alpha:
            return "alpha";
        case BeattyKind::beta:
            return "beta";
        case BeattyKind::gamma:
            return "gamma";
        case BeattyKind::delta:
            return "delta";
        case BeattyKind::epsilon:
            return "epsilon";
    }
    return "";
}

[[nodiscard]] inline std::optional<BeattyKind> parse_beatty_kind(std::string_view name) noexcept
{
    for (const auto k : all_beatty_kinds) {
        if (beatty_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

inline constexpr std::uint64_t max_beatty_index = std::uint64_t{1} << 60;

[[nodiscard]] inline std::uint64_t beatty_term(BeattyKind kind, std::uint64_t k)
{
    if (k == 0 || k > max_beatty_index) {
        throw error(errc::invalid_argument, "Beatty index must be in [1, 2^60], got " + std::to_string(k));
    }
    const uint128 kk = k;
    const uint128 x = 2 * kk - 1;
    switch (kind) {
        case BeattyKind::w:
            return static_cast<std::uint64_t>(x) + isqrt(x * x / 2);
        case BeattyKind::alpha:
            return 2 * k + isqrt(2 * kk * kk);
        case BeattyKind::beta:
            return k + isqrt(kk * kk / 2);
        case BeattyKind::gamma:
            return static_cast<std::uint64_t>(x) + isqrt(2 * x * x);
        case BeattyKind::delta:
            return 2 * k + isqrt(8 * kk * kk);
        case BeattyKind::epsilon:
            return k + isqrt(2 * kk * kk);
    }
    return 0;
}

// w_k evaluated as floor((2x + floor(x sqrt 2)) / 2), x = 2k - 1: the direct
// reading of floor((k - 1/2)(2 + sqrt 2)), independent of the c-function route.
[[nodiscard]] inline std::uint64_t wythoff_direct(std::uint64_t k)
{
    if (k == 0 || k > max_beatty_index) {
        throw error(errc::invalid_argument, "Beatty index must be in [1, 2^60]");
    }
    const uint128 x = 2 * uint128{k} - 1;
    return static_cast<std::uint64_t>((2 * x + isqrt(2 * x * x)) / 2);
}

// The increasing sequence of positive k^2 and 2k^2.
struct SigmaEnumeration {
    std::vector<std::uint64_t> terms;

    // 1-based access, matching the usual indexing of the sequence.
    [[nodiscard]] std::uint64_t at(std::size_t n) const
    {
        return terms.at(n - 1);
    }
};

[[nodiscard]] inline SigmaEnumeration enumerate_sigma(std::size_t count)
{
    if (count == 0) {
        throw error(errc::invalid_argument, "count must be at least 1");
    }
    SigmaEnumeration e;
    e.terms.reserve(count);
    std::uint64_t a = 1; // next k for k^2
    std::uint64_t b = 1; // next k for 2k^2
    while (e.terms.size() < count) {
        const std::uint64_t sq = a * a;
        const std::uint64_t twice = 2 * b * b;
        // The two streams never meet: k^2 = 2j^2 has no positive solution.
        if (sq < twice) {
            e.terms.push_back(sq);
            ++a;
        } else {
            e.terms.push_back(twice);
            ++b;
        }
    }
    return e;
}

// Expected value of the sigma enumeration at the kind's index, per k.
[[nodiscard]] inline std::uint64_t beatty_target(BeattyKind kind, std::uint64_t k) noexcept
{
    const std::uint64_t x = 2 * k - 1;
    switch (kind) {
        case BeattyKind::w:
            return x * x;
        case BeattyKind::alpha:
            return 4 * k * k;
        case BeattyKind::beta:
            return k * k;
        case BeattyKind::gamma:
            return 2 * x * x;
        case BeattyKind::delta:
            return 8 * k * k;
        case BeattyKind::epsilon:
            return 2 * k * k;
    }
    return 0;
}

[[nodiscard]] inline std::string beatty_prop_label(BeattyKind kind)
{
    return "BEATTY_INDEX_" + std::string(beatty_name(kind));
}

// For each kind and 1 <= k <= bound: the sigma enumeration at index
// beatty_term(kind, k) equals beatty_target(kind, k).
[[nodiscard]] inline std::array<VerificationOutcome, 6> verify_beatty_props(std::uint64_t bound)
{
    if (bound == 0) {
        throw error(errc::invalid_argument, "bound must be at least 1");
    }
    std::uint64_t needed = 0;
    for (const auto kind : all_beatty_kinds) {
        needed = std::max(needed, beatty_term(kind, bound));
    }
    const auto sigma_seq = enumerate_sigma(needed);

    std::array<VerificationOutcome, 6> out;
    for (std::size_t i = 0; i < all_beatty_kinds.size(); ++i) {
        const auto kind = all_beatty_kinds[i];
        out[i] = {beatty_prop_label(kind), bound, std::nullopt};
        for (std::uint64_t k = 1; k <= bound; ++k) {
            if (sigma_seq.at(beatty_term(kind, k)) != beatty_target(kind, k)) {
                out[i].first_mismatch = k;
                break;
            }
        }
    }
    return out;
}

// c(sigma_n) = n for 1 <= n <= count.
[[nodiscard]] inline VerificationOutcome verify_c_inverts_enumeration(std::size_t count)
{
    const auto e = enumerate_sigma(count);
    VerificationOutcome out{"C_OF_SIGMA_ENUMERATION", count, std::nullopt};
    for (std::size_t n = 1; n <= count; ++n) {
        if (c_function(e.at(n)) != n) {
            out.first_mismatch = n;
            break;
        }
    }
    return out;
}

// L(f): the first count indices n >= 1 with f(n) odd. values[i] is f(i + 1).
[[nodiscard]] inline std::vector<std::uint64_t> l_operator(std::span<const std::uint64_t> values, std::size_t count)
{
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::size_t i = 0; i < values.size() && out.size() < count; ++i) {
        if (values[i] % 2 == 1) {
            out.push_back(i + 1);
        }
    }
    if (out.size() < count) {
        throw error(errc::insufficient_odd_values, "source has only " + std::to_string(out.size())
                                                       + " odd values, " + std::to_string(count) + " requested");
    }
    return out;
}

// Termwise comparison of L(L(sigma)) with w and with c, for k <= bound.
struct LOperatorFinding {
    std::size_t bound = 0;
    std::vector<std::uint64_t> ll_sigma;
    std::optional<std::uint64_t> first_mismatch_w;
    std::optional<std::uint64_t> first_mismatch_c;

    [[nodiscard]] bool matches_w() const noexcept
    {
        return !first_mismatch_w;
    }
    [[nodiscard]] bool matches_c() const noexcept
    {
        return !first_mismatch_c;
    }
};

[[nodiscard]] inline LOperatorFinding l_operator_finding(std::size_t bound)
{
    if (bound == 0) {
        throw error(errc::invalid_argument, "bound must be at least 1");
    }
    // L(L(sigma))(bound) is near w_bound, so the inner L needs that many
    // terms; those reach (2 bound - 1)^2 plus slack.
    const std::uint64_t inner_terms = beatty_term(BeattyKind::w, bound) + 8;
    const std::uint64_t sigma_bound = enumerate_sigma(inner_terms).terms.back() + 1;
    const auto sigma_values = divisor_sums(sigma_bound);
    const auto l_sigma = l_operator(std::span(sigma_values).subspan(1), inner_terms);

    LOperatorFinding f;
    f.bound = bound;
    f.ll_sigma = l_operator(l_sigma, bound);
    for (std::uint64_t k = 1; k <= bound; ++k) {
        if (!f.first_mismatch_w && f.ll_sigma[k - 1] != beatty_term(BeattyKind::w, k)) {
            f.first_mismatch_w = k;
        }
        if (!f.first_mismatch_c && f.ll_sigma[k - 1] != c_function(k)) {
            f.first_mismatch_c = k;
        }
    }
    return f;
}

} // namespace f2sigma

#endif
