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

// Indicator series of the named integer sets, plus brute-force oracles
// (divisor-sum sieve, partition dynamic program) and the exact pentagonal
// recurrences for p(n) and sigma(n).

#ifndef F2SIGMA_SEQGEN_HPP
#define F2SIGMA_SEQGEN_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <f2sigma/bit_series.hpp>
#include <f2sigma/error.hpp>
#include <f2sigma/verification.hpp>

namespace f2sigma
{

enum class SequenceKind {
    squares,
    odd_squares,
    triangular,
    gen_pentagonal,
    sigma_parity,
    sigma_bar,
    partition_parity,
    distinct_parts_product,
};

inline constexpr std::array<SequenceKind, 8> all_sequence_kinds = {
    SequenceKind::squares,          SequenceKind::odd_squares,      SequenceKind::triangular,
    SequenceKind::gen_pentagonal,   SequenceKind::sigma_parity,     SequenceKind::sigma_bar,
    SequenceKind::partition_parity, SequenceKind::distinct_parts_product,
};

[[nodiscard]] inline constexpr std::string_view sequence_name(SequenceKind k) noexcept
{
    switch (k) {
        case SequenceKind::squares:
            return "squares";
        case SequenceKind::odd_squares:
            return "odd-squares";
        case SequenceKind::triangular:
            return "triangular";
        case SequenceKind::gen_pentagonal:
            return "pentagonal";
        case SequenceKind::sigma_parity:
            return "sigma";
        case SequenceKind::sigma_bar:
            return "sigma-bar";
        case SequenceKind::partition_parity:
            return "partitions";
        case SequenceKind::distinct_parts_product:
            return "distinct-product";
    }
    return "";
}

[[nodiscard]] inline std::optional<SequenceKind> parse_sequence_kind(std::string_view name) noexcept
{
    for (const auto k : all_sequence_kinds) {
        if (sequence_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

// The kind whose series is the inverse of this one, if it has a name.
[[nodiscard]] inline constexpr std::optional<SequenceKind> reciprocal_kind(SequenceKind k) noexcept
{
    switch (k) {
        case SequenceKind::sigma_parity:
            return SequenceKind::sigma_bar;
        case SequenceKind::sigma_bar:
            return SequenceKind::sigma_parity;
        case SequenceKind::gen_pentagonal:
            return SequenceKind::partition_parity;
        case SequenceKind::partition_parity:
            return SequenceKind::gen_pentagonal;
        default:
            return std::nullopt;
    }
}

namespace detail
{

inline void check_precision(std::size_t n)
{
    if (n == 0) {
        throw error(errc::invalid_precision, "precision must be at least 1");
    }
}

inline void set_bit(std::vector<word> &ws, std::uint64_t i) noexcept
{
    ws[i / word_bits] |= word{1} << (i % word_bits);
}

inline BitSeries pack_bytes(const std::vector<std::uint8_t> &bits)
{
    std::vector<word> ws(words_for(bits.size()), 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        ws[i / word_bits] |= static_cast<word>(bits[i] & 1U) << (i % word_bits);
    }
    return BitSeries(bits.size(), std::move(ws));
}

// f <- f * (1 + q^s) in place, keeping n coefficients. Walks downward so
// every read sees the old value.
inline void mul_one_plus_monomial(std::vector<word> &ws, std::size_t s, std::size_t n)
{
    const std::size_t wshift = s / word_bits;
    const unsigned bshift = static_cast<unsigned>(s % word_bits);
    for (std::size_t i = ws.size(); i-- > wshift;) {
        word v = ws[i - wshift] << bshift;
        if (bshift != 0 && i > wshift) {
            v |= ws[i - wshift - 1] >> (word_bits - bshift);
        }
        ws[i] ^= v;
    }
    const std::size_t tail = n % word_bits;
    if (tail != 0) {
        ws.back() &= (word{1} << tail) - 1;
    }
}

} // namespace detail

// prod_{n=1}^{N-1} (1 + q^n)^|k|, inverted when k < 0.
[[nodiscard]] inline BitSeries product_power(std::int64_t k, std::size_t precision)
{
    detail::check_precision(precision);
    if (k == 0) {
        return BitSeries::one(precision);
    }
    std::vector<word> ws(words_for(precision), 0);
    ws[0] = 1;
    for (std::size_t n = 1; n < precision; ++n) {
        detail::mul_one_plus_monomial(ws, n, precision);
    }
    const BitSeries g(precision, std::move(ws));
    const auto magnitude = static_cast<std::uint64_t>(k < 0 ? -k : k);
    BitSeries gk = pow(g, magnitude);
    return k < 0 ? inverse(gk) : gk;
}

[[nodiscard]] inline BitSeries generate(SequenceKind kind, std::size_t precision)
{
    detail::check_precision(precision);
    const std::uint64_t n = precision;
    std::vector<word> ws(words_for(precision), 0);
    switch (kind) {
        case SequenceKind::squares:
            for (std::uint64_t k = 1; k * k < n; ++k) {
                detail::set_bit(ws, k * k);
            }
            break;
        case SequenceKind::odd_squares:
            for (std::uint64_t k = 1; k * k < n; k += 2) {
                detail::set_bit(ws, k * k);
            }
            break;
        case SequenceKind::triangular:
            for (std::uint64_t k = 0; k * (k + 1) / 2 < n; ++k) {
                detail::set_bit(ws, k * (k + 1) / 2);
            }
            break;
        case SequenceKind::gen_pentagonal:
            // k(3k-1)/2 over all integers k: the pairs k(3k-1)/2, k(3k+1)/2 for k >= 0.
            for (std::uint64_t k = 0; k * (3 * k - 1) / 2 < n || k == 0; ++k) {
                detail::set_bit(ws, k * (3 * k - 1) / 2);
                if (k * (3 * k + 1) / 2 < n) {
                    detail::set_bit(ws, k * (3 * k + 1) / 2);
                }
            }
            break;
        case SequenceKind::sigma_parity:
            // sigma(n) is odd iff the odd part of n is a square: n = 2^r j^2, j odd.
            detail::set_bit(ws, 0);
            for (std::uint64_t j = 1; j * j < n; j += 2) {
                for (std::uint64_t v = j * j; v < n; v *= 2) {
                    detail::set_bit(ws, v);
                }
            }
            break;
        case SequenceKind::sigma_bar:
            return inverse(generate(SequenceKind::sigma_parity, precision));
        case SequenceKind::partition_parity:
            return inverse(generate(SequenceKind::gen_pentagonal, precision));
        case SequenceKind::distinct_parts_product:
            return product_power(1, precision);
    }
    return BitSeries(precision, std::move(ws));
}

// sigma(n) for 0 <= n < bound by a sieve over multiples; sigma(0) is stored as 0.
[[nodiscard]] inline std::vector<std::uint64_t> divisor_sums(std::size_t bound)
{
    std::vector<std::uint64_t> s(bound, 0);
    for (std::uint64_t d = 1; d < bound; ++d) {
        for (std::uint64_t m = d; m < bound; m += d) {
            s[m] += d;
        }
    }
    return s;
}

// Parity of the full divisor sum, sigma(0) = 1 by convention.
[[nodiscard]] inline BitSeries sigma_parity_oracle(std::size_t precision)
{
    detail::check_precision(precision);
    std::vector<std::uint8_t> bits(precision, 0);
    bits[0] = 1;
    for (std::uint64_t d = 1; d < precision; d += 2) {
        // Even divisors never change the parity.
        for (std::uint64_t m = d; m < precision; m += d) {
            bits[m] ^= 1U;
        }
    }
    return detail::pack_bytes(bits);
}

// p(n) mod 2 by the coin-change dynamic program over parts 1..N-1.
[[nodiscard]] inline BitSeries partition_parity_oracle(std::size_t precision)
{
    detail::check_precision(precision);
    std::vector<std::uint8_t> p(precision, 0);
    p[0] = 1;
    for (std::size_t part = 1; part < precision; ++part) {
        for (std::size_t m = part; m < precision; ++m) {
            p[m] ^= p[m - part];
        }
    }
    return detail::pack_bytes(p);
}

// Exact p(n) for 0 <= n < bound.
[[nodiscard]] inline std::vector<boost::multiprecision::cpp_int> partition_numbers(std::size_t bound)
{
    std::vector<boost::multiprecision::cpp_int> p(bound, 0);
    if (bound > 0) {
        p[0] = 1;
    }
    for (std::size_t part = 1; part < bound; ++part) {
        for (std::size_t m = part; m < bound; ++m) {
            p[m] += p[m - part];
        }
    }
    return p;
}

// Checks p(n) = sum_k (-1)^(k-1) p(n - g_k) and the same recurrence for sigma
// (with the sigma(0) term read as n) for 1 <= n < bound, where g_k = k(3k-1)/2
// runs over k = 1, -1, 2, -2, ...
[[nodiscard]] inline std::array<VerificationOutcome, 2> verify_pentagonal_recurrences(std::size_t bound)
{
    using boost::multiprecision::cpp_int;
    if (bound < 2) {
        throw error(errc::invalid_argument, "recurrence bound must be at least 2");
    }

    struct offset {
        std::uint64_t g;
        int sign;
    };
    std::vector<offset> offsets;
    for (std::int64_t k = 1;; ++k) {
        const auto minus = static_cast<std::uint64_t>(k * (3 * k - 1) / 2);
        const auto plus = static_cast<std::uint64_t>(k * (3 * k + 1) / 2);
        if (minus >= bound) {
            break;
        }
        const int sign = (k % 2 == 1) ? 1 : -1;
        offsets.push_back({minus, sign});
        if (plus < bound) {
            offsets.push_back({plus, sign});
        }
    }

    const auto p = partition_numbers(bound);
    const auto sigma = divisor_sums(bound);

    VerificationOutcome p_out{"PENTAGONAL_RECURRENCE_P", bound, std::nullopt};
    VerificationOutcome s_out{"PENTAGONAL_RECURRENCE_SIGMA", bound, std::nullopt};
    for (std::uint64_t n = 1; n < bound; ++n) {
        cpp_int p_sum = 0;
        std::int64_t s_sum = 0;
        for (const auto &o : offsets) {
            if (o.g > n) {
                continue;
            }
            p_sum += o.sign * p[n - o.g];
            const auto term = o.g == n ? static_cast<std::int64_t>(n) : static_cast<std::int64_t>(sigma[n - o.g]);
            s_sum += o.sign * term;
        }
        if (!p_out.first_mismatch && p_sum != p[n]) {
            p_out.first_mismatch = n;
        }
        if (!s_out.first_mismatch && s_sum != static_cast<std::int64_t>(sigma[n])) {
            s_out.first_mismatch = n;
        }
    }
    return {p_out, s_out};
}

} // namespace f2sigma

#endif
