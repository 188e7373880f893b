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

#ifndef F2SIGMA_BIT_SERIES_HPP
#define F2SIGMA_BIT_SERIES_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <f2sigma/clmul.hpp>
#include <f2sigma/error.hpp>

namespace f2sigma
{

using word = std::uint64_t;
using exponent = std::uint64_t;

inline constexpr std::size_t word_bits = 64;

[[nodiscard]] inline constexpr std::size_t words_for(std::size_t precision) noexcept
{
    return (precision + word_bits - 1) / word_bits;
}

// Strictly increasing list of exponents.
class IndexSet
{
public:
    IndexSet() = default;

    // Throws invalid_argument unless the input is strictly increasing.
    explicit IndexSet(std::vector<exponent> exponents) : m_exponents(std::move(exponents))
    {
        for (std::size_t i = 1; i < m_exponents.size(); ++i) {
            if (m_exponents[i] <= m_exponents[i - 1]) {
                throw error(errc::invalid_argument,
                            "exponents must be strictly increasing (position " + std::to_string(i) + ")");
            }
        }
    }

    IndexSet(std::initializer_list<exponent> exponents) : IndexSet(std::vector<exponent>(exponents)) {}

    [[nodiscard]] const std::vector<exponent> &values() const noexcept
    {
        return m_exponents;
    }
    [[nodiscard]] std::size_t size() const noexcept
    {
        return m_exponents.size();
    }
    [[nodiscard]] bool empty() const noexcept
    {
        return m_exponents.empty();
    }
    [[nodiscard]] auto begin() const noexcept
    {
        return m_exponents.begin();
    }
    [[nodiscard]] auto end() const noexcept
    {
        return m_exponents.end();
    }
    exponent operator[](std::size_t i) const noexcept
    {
        return m_exponents[i];
    }

    friend bool operator==(const IndexSet &, const IndexSet &) = default;

private:
    std::vector<exponent> m_exponents;
};

// Power series over GF(2) known modulo q^precision. Bit i of the packed
// storage is the coefficient of q^i; storage past precision-1 is always zero,
// so equality is a plain word compare.
class BitSeries
{
public:
    // Zero series.
    explicit BitSeries(std::size_t precision) : BitSeries(precision, std::vector<word>(words_for(precision), 0)) {}

    // Takes ownership of packed words; missing words are zero-filled, bits past
    // precision are cleared.
    BitSeries(std::size_t precision, std::vector<word> words) : m_precision(precision), m_words(std::move(words))
    {
        if (precision == 0) {
            throw error(errc::invalid_precision, "precision must be at least 1");
        }
        m_words.resize(words_for(precision), 0);
        const std::size_t tail = precision % word_bits;
        if (tail != 0) {
            m_words.back() &= (word{1} << tail) - 1;
        }
    }

    [[nodiscard]] static BitSeries one(std::size_t precision)
    {
        BitSeries r(precision);
        r.m_words[0] = 1;
        return r;
    }

    [[nodiscard]] std::size_t precision() const noexcept
    {
        return m_precision;
    }
    [[nodiscard]] std::span<const word> words() const noexcept
    {
        return m_words;
    }
    [[nodiscard]] bool coefficient(std::size_t i) const noexcept
    {
        return i < m_precision && ((m_words[i / word_bits] >> (i % word_bits)) & 1U) != 0;
    }
    [[nodiscard]] bool is_zero() const noexcept
    {
        return std::all_of(m_words.begin(), m_words.end(), [](word w) { return w == 0; });
    }
    [[nodiscard]] std::size_t popcount() const noexcept
    {
        std::size_t n = 0;
        for (const word w : m_words) {
            n += static_cast<std::size_t>(std::popcount(w));
        }
        return n;
    }

    // Moves the storage out; used by operations that build on an input.
    [[nodiscard]] std::vector<word> release() &&
    {
        return std::move(m_words);
    }

    friend bool operator==(const BitSeries &, const BitSeries &) = default;

private:
    std::size_t m_precision;
    std::vector<word> m_words;
};

// Calls fn(i) for every set coefficient, in increasing order.
template <typename Fn>
void for_each_exponent(const BitSeries &f, Fn &&fn)
{
    const auto ws = f.words();
    for (std::size_t wi = 0; wi < ws.size(); ++wi) {
        word w = ws[wi];
        while (w != 0) {
            const auto b = static_cast<std::size_t>(std::countr_zero(w));
            fn(static_cast<exponent>(wi * word_bits + b));
            w &= w - 1;
        }
    }
}

[[nodiscard]] inline BitSeries from_indices(const IndexSet &exponents, std::size_t precision)
{
    if (precision == 0) {
        throw error(errc::invalid_precision, "precision must be at least 1");
    }
    std::vector<word> ws(words_for(precision), 0);
    for (const exponent e : exponents) {
        if (e >= precision) {
            break;
        }
        ws[e / word_bits] |= word{1} << (e % word_bits);
    }
    return BitSeries(precision, std::move(ws));
}

[[nodiscard]] inline IndexSet to_indices(const BitSeries &f)
{
    std::vector<exponent> out;
    out.reserve(f.popcount());
    for_each_exponent(f, [&](exponent e) { out.push_back(e); });
    return IndexSet(std::move(out));
}

// Reduction modulo q^precision; precision may not exceed the input's.
[[nodiscard]] inline BitSeries truncate(const BitSeries &f, std::size_t precision)
{
    if (precision > f.precision()) {
        throw error(errc::invalid_precision, "cannot truncate to a larger precision");
    }
    const auto ws = f.words();
    return BitSeries(precision, std::vector<word>(ws.begin(), ws.begin() + static_cast<std::ptrdiff_t>(words_for(precision))));
}

[[nodiscard]] inline BitSeries add(const BitSeries &f, const BitSeries &g)
{
    const std::size_t n = std::min(f.precision(), g.precision());
    const auto a = f.words();
    const auto b = g.words();
    std::vector<word> out(words_for(n));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a[i] ^ b[i];
    }
    return BitSeries(n, std::move(out));
}

[[nodiscard]] inline BitSeries operator+(const BitSeries &f, const BitSeries &g)
{
    return add(f, g);
}

[[nodiscard]] inline BitSeries mul(const BitSeries &f, const BitSeries &g,
                                   std::size_t threshold = clmul::default_threshold)
{
    const std::size_t n = std::min(f.precision(), g.precision());
    const std::size_t nw = words_for(n);
    auto prod = clmul::multiply(f.words().first(nw), g.words().first(nw), threshold);
    prod.resize(nw);
    return BitSeries(n, std::move(prod));
}

[[nodiscard]] inline BitSeries operator*(const BitSeries &f, const BitSeries &g)
{
    return mul(f, g);
}

// Multiplication by q^s at the same precision.
[[nodiscard]] inline BitSeries shift(const BitSeries &f, std::size_t s)
{
    const std::size_t n = f.precision();
    const auto in = f.words();
    std::vector<word> out(in.size(), 0);
    const std::size_t ws = s / word_bits;
    const unsigned bs = static_cast<unsigned>(s % word_bits);
    for (std::size_t i = 0; i + ws < out.size(); ++i) {
        out[i + ws] ^= in[i] << bs;
        if (bs != 0 && i + ws + 1 < out.size()) {
            out[i + ws + 1] ^= in[i] >> (word_bits - bs);
        }
    }
    return BitSeries(n, std::move(out));
}

namespace detail
{

[[nodiscard]] inline constexpr word spread32(word x) noexcept
{
    x &= 0xFFFFFFFFULL;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFULL;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFULL;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0FULL;
    x = (x | (x << 2)) & 0x3333333333333333ULL;
    x = (x | (x << 1)) & 0x5555555555555555ULL;
    return x;
}

[[nodiscard]] inline constexpr word compact32(word x) noexcept
{
    x &= 0x5555555555555555ULL;
    x = (x | (x >> 1)) & 0x3333333333333333ULL;
    x = (x | (x >> 2)) & 0x0F0F0F0F0F0F0F0FULL;
    x = (x | (x >> 4)) & 0x00FF00FF00FF00FFULL;
    x = (x | (x >> 8)) & 0x0000FFFF0000FFFFULL;
    x = (x | (x >> 16)) & 0x00000000FFFFFFFFULL;
    return x;
}

// f(q^2) at an explicit output precision (at most 2 * f.precision()).
[[nodiscard]] inline BitSeries spread(const BitSeries &f, std::size_t precision)
{
    const auto in = f.words();
    std::vector<word> out(words_for(precision), 0);
    for (std::size_t i = 0; i < in.size() && 2 * i < out.size(); ++i) {
        out[2 * i] = spread32(in[i]);
        if (2 * i + 1 < out.size()) {
            out[2 * i + 1] = spread32(in[i] >> 32);
        }
    }
    return BitSeries(precision, std::move(out));
}

inline constexpr word even_mask = 0x5555555555555555ULL;

} // namespace detail

// f(q)^2 = f(q^2), truncated to the input precision.
[[nodiscard]] inline BitSeries square(const BitSeries &f)
{
    return detail::spread(f, f.precision());
}

// Inverse of square on series supported on even exponents; precision ceil(N/2).
[[nodiscard]] inline BitSeries sqrt_even(const BitSeries &f)
{
    const auto in = f.words();
    for (std::size_t i = 0; i < in.size(); ++i) {
        if ((in[i] & ~detail::even_mask) != 0) {
            const auto bit = static_cast<std::size_t>(std::countr_zero(in[i] & ~detail::even_mask));
            throw error(errc::odd_exponent_present, "coefficient of q^" + std::to_string(i * word_bits + bit) + " is set");
        }
    }
    const std::size_t n = (f.precision() + 1) / 2;
    std::vector<word> out(words_for(n), 0);
    for (std::size_t i = 0; i < in.size(); ++i) {
        const word half = detail::compact32(in[i]);
        out[i / 2] |= (i % 2 == 0) ? half : (half << 32);
    }
    return BitSeries(n, std::move(out));
}

// Binary exponentiation; f^0 = 1.
[[nodiscard]] inline BitSeries pow(const BitSeries &f, std::uint64_t k)
{
    BitSeries result = BitSeries::one(f.precision());
    if (k == 0) {
        return result;
    }
    const int top = static_cast<int>(std::bit_width(k)) - 1;
    result = f;
    for (int b = top - 1; b >= 0; --b) {
        result = square(result);
        if ((k >> b) & 1U) {
            result = mul(result, f);
        }
    }
    return result;
}

// Multiplicative inverse by Newton iteration. Over GF(2) the step
// g <- g(2 - f g) reduces to g <- f g^2, doubling the known precision.
[[nodiscard]] inline BitSeries inverse(const BitSeries &f, std::size_t threshold = clmul::default_threshold)
{
    if (!f.coefficient(0)) {
        throw error(errc::zero_constant_term, "series is not invertible");
    }
    const std::size_t n = f.precision();
    BitSeries g = BitSeries::one(1);
    std::size_t known = 1;
    while (known < n) {
        const std::size_t next = std::min(2 * known, n);
        g = mul(truncate(f, next), detail::spread(g, next), threshold);
        known = next;
    }
    return g;
}

// Quadratic reference inverse from the convolution recurrence
// b_n = sum_{a in F, 1 <= a <= n} b_{n-a}  (mod 2).
[[nodiscard]] inline BitSeries inverse_oracle(const BitSeries &f)
{
    if (!f.coefficient(0)) {
        throw error(errc::zero_constant_term, "series is not invertible");
    }
    std::vector<exponent> support;
    for_each_exponent(f, [&](exponent e) {
        if (e != 0) {
            support.push_back(e);
        }
    });
    const std::size_t n = f.precision();
    std::vector<std::uint8_t> b(n, 0);
    b[0] = 1;
    for (std::size_t i = 1; i < n; ++i) {
        std::uint8_t acc = 0;
        for (const exponent a : support) {
            if (a > i) {
                break;
            }
            acc ^= b[i - a];
        }
        b[i] = acc;
    }
    std::vector<word> ws(words_for(n), 0);
    for (std::size_t i = 0; i < n; ++i) {
        ws[i / word_bits] |= static_cast<word>(b[i]) << (i % word_bits);
    }
    return BitSeries(n, std::move(ws));
}

// d/dq over GF(2): q^n -> q^(n-1) for odd n, 0 for even n. Precision N-1.
[[nodiscard]] inline BitSeries derivative(const BitSeries &f)
{
    if (f.precision() < 2) {
        throw error(errc::invalid_precision, "derivative of a precision-1 series has precision 0");
    }
    const auto in = f.words();
    std::vector<word> out(in.size(), 0);
    for (std::size_t i = 0; i < in.size(); ++i) {
        out[i] = (in[i] & ~detail::even_mask) >> 1;
    }
    return BitSeries(f.precision() - 1, std::move(out));
}

[[nodiscard]] inline BitSeries even_part(const BitSeries &f)
{
    std::vector<word> out(f.words().begin(), f.words().end());
    for (auto &w : out) {
        w &= detail::even_mask;
    }
    return BitSeries(f.precision(), std::move(out));
}

[[nodiscard]] inline BitSeries odd_part(const BitSeries &f)
{
    std::vector<word> out(f.words().begin(), f.words().end());
    for (auto &w : out) {
        w &= ~detail::even_mask;
    }
    return BitSeries(f.precision(), std::move(out));
}

// Keeps exponents congruent to residue modulo modulus.
[[nodiscard]] inline BitSeries residue_extract(const BitSeries &f, std::uint64_t modulus, std::uint64_t residue)
{
    if (modulus == 0 || residue >= modulus) {
        throw error(errc::invalid_residue,
                    "residue " + std::to_string(residue) + " is not in [0, " + std::to_string(modulus) + ")");
    }
    const auto in = f.words();
    std::vector<word> out(in.size(), 0);
    for (std::size_t i = residue; i < f.precision(); i += modulus) {
        out[i / word_bits] |= in[i / word_bits] & (word{1} << (i % word_bits));
    }
    return BitSeries(f.precision(), std::move(out));
}

// For f supported on s + m*j, returns sum_j [q^(s+mj)]f * q^j with precision
// ceil((N - s) / m).
[[nodiscard]] inline BitSeries downshift_decimate(const BitSeries &f, std::uint64_t s, std::uint64_t m)
{
    if (m == 0) {
        throw error(errc::invalid_argument, "stride must be positive");
    }
    if (f.precision() <= s) {
        throw error(errc::invalid_precision, "shift leaves no coefficients");
    }
    const std::size_t n = (f.precision() - s + m - 1) / m;
    std::vector<word> out(words_for(n), 0);
    for_each_exponent(f, [&](exponent e) {
        if (e < s || (e - s) % m != 0) {
            throw error(errc::stride_violation, "coefficient of q^" + std::to_string(e) + " is set");
        }
        const std::uint64_t j = (e - s) / m;
        out[j / word_bits] |= word{1} << (j % word_bits);
    });
    return BitSeries(n, std::move(out));
}

// Number of set coefficients with exponent <= n (n < precision).
[[nodiscard]] inline std::size_t count_upto(const BitSeries &f, std::size_t n)
{
    if (n >= f.precision()) {
        throw error(errc::checkpoint_out_of_range,
                    std::to_string(n) + " is not below precision " + std::to_string(f.precision()));
    }
    const auto ws = f.words();
    std::size_t count = 0;
    const std::size_t last = n / word_bits;
    for (std::size_t i = 0; i < last; ++i) {
        count += static_cast<std::size_t>(std::popcount(ws[i]));
    }
    const unsigned bits = static_cast<unsigned>(n % word_bits) + 1;
    const word mask = bits == word_bits ? ~word{0} : ((word{1} << bits) - 1);
    count += static_cast<std::size_t>(std::popcount(ws[last] & mask));
    return count;
}

} // namespace f2sigma

#endif
