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

// Carryless (GF(2)[x]) multiplication of packed word vectors.
//
// Word i of a vector holds coefficients 64*i .. 64*i+63, least significant
// bit first. The 64x64 -> 128 kernel uses PCLMULQDQ when the compiler
// targets it and a 4-bit windowed table otherwise. Long products go through
// Karatsuba above a word threshold and schoolbook below it.

#ifndef F2SIGMA_CLMUL_HPP
#define F2SIGMA_CLMUL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#if defined(__PCLMUL__) && defined(__SSE2__)
#include <wmmintrin.h>
#include <emmintrin.h>
#define F2SIGMA_HAVE_PCLMUL 1
#else
#define F2SIGMA_HAVE_PCLMUL 0
#endif

namespace f2sigma::clmul
{

using word = std::uint64_t;

struct word_pair {
    word lo;
    word hi;
};

// Default Karatsuba cut-over, in 64-bit words.
inline constexpr std::size_t default_threshold = 64;

[[nodiscard]] inline constexpr bool hardware_accelerated() noexcept
{
    return F2SIGMA_HAVE_PCLMUL != 0;
}

// Portable 64x64 carryless product. The table is built from the low 61 bits
// of b so that no entry overflows a word; the top three bits of b are folded
// in afterwards.
[[nodiscard]] inline constexpr word_pair mul_word_portable(word a, word b) noexcept
{
    const word bl = b & 0x1FFFFFFFFFFFFFFFULL;
    word table[16] = {};
    table[1] = bl;
    for (unsigned i = 2; i < 16; i += 2) {
        table[i] = table[i / 2] << 1;
        table[i + 1] = table[i] ^ bl;
    }

    word lo = table[a & 15U];
    word hi = 0;
    for (unsigned s = 4; s < 64; s += 4) {
        const word t = table[(a >> s) & 15U];
        lo ^= t << s;
        hi ^= t >> (64 - s);
    }

    for (unsigned s = 61; s < 64; ++s) {
        const word mask = word{0} - ((b >> s) & 1U);
        lo ^= (a << s) & mask;
        hi ^= (a >> (64 - s)) & mask;
    }
    return {lo, hi};
}

[[nodiscard]] inline word_pair mul_word(word a, word b) noexcept
{
#if F2SIGMA_HAVE_PCLMUL
    const __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                           _mm_cvtsi64_si128(static_cast<long long>(b)), 0x00);
    return {static_cast<word>(_mm_cvtsi128_si64(r)),
            static_cast<word>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)))};
#else
    return mul_word_portable(a, b);
#endif
}

// out[0 .. a.size()+b.size()) ^= a * b
inline void mul_schoolbook_acc(std::span<const word> a, std::span<const word> b, std::span<word> out) noexcept
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        const word ai = a[i];
        if (ai == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            const auto [lo, hi] = mul_word(ai, b[j]);
            out[i + j] ^= lo;
            out[i + j + 1] ^= hi;
        }
    }
}

namespace detail
{

inline std::size_t karatsuba_scratch_words(std::size_t n) noexcept
{
    return 8 * n + 64;
}

// out[0 .. 2n) = a * b for equal-length operands. out is overwritten.
inline void karatsuba(const word *a, const word *b, std::size_t n, word *out, word *scratch,
                      std::size_t threshold) noexcept
{
    if (n < 2 || n <= threshold) {
        std::fill(out, out + 2 * n, word{0});
        mul_schoolbook_acc({a, n}, {b, n}, {out, 2 * n});
        return;
    }

    const std::size_t h = (n + 1) / 2;
    const std::size_t l = n - h;

    word *sa = scratch;
    word *sb = sa + h;
    word *mid = sb + h;
    word *next = mid + 2 * h;

    for (std::size_t i = 0; i < h; ++i) {
        sa[i] = a[i];
        sb[i] = b[i];
    }
    for (std::size_t i = 0; i < l; ++i) {
        sa[i] ^= a[h + i];
        sb[i] ^= b[h + i];
    }

    karatsuba(a, b, h, out, next, threshold);
    karatsuba(a + h, b + h, l, out + 2 * h, next, threshold);
    karatsuba(sa, sb, h, mid, next, threshold);

    // mid = a0*b1 + a1*b0 has at most n words.
    for (std::size_t i = 0; i < 2 * h; ++i) {
        mid[i] ^= out[i];
    }
    for (std::size_t i = 0; i < 2 * l; ++i) {
        mid[i] ^= out[2 * h + i];
    }
    for (std::size_t i = 0; i < n; ++i) {
        out[h + i] ^= mid[i];
    }
}

} // namespace detail

// Full product, a.size() + b.size() words (empty when either side is empty).
[[nodiscard]] inline std::vector<word> multiply(std::span<const word> a, std::span<const word> b,
                                                std::size_t threshold = default_threshold)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    std::vector<word> out(a.size() + b.size(), 0);
    if (a.size() < b.size()) {
        std::swap(a, b);
    }
    const std::size_t n = b.size();
    if (n <= threshold) {
        mul_schoolbook_acc(a, b, out);
        return out;
    }

    // Unbalanced operands are cut into n-word blocks of the longer side.
    std::vector<word> scratch(detail::karatsuba_scratch_words(n));
    std::vector<word> block(2 * n);
    std::vector<word> padded;
    for (std::size_t off = 0; off < a.size(); off += n) {
        const std::size_t len = std::min(n, a.size() - off);
        const word *src = a.data() + off;
        if (len < n) {
            padded.assign(n, 0);
            std::copy(src, src + len, padded.begin());
            src = padded.data();
        }
        detail::karatsuba(src, b.data(), n, block.data(), scratch.data(), threshold);
        const std::size_t limit = std::min(2 * n, out.size() - off);
        for (std::size_t i = 0; i < limit; ++i) {
            out[off + i] ^= block[i];
        }
    }
    return out;
}

// Reference product, one bit at a time. Only for tests and small inputs.
[[nodiscard]] inline std::vector<word> multiply_naive(std::span<const word> a, std::span<const word> b)
{
    std::vector<word> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size() * 64; ++i) {
        if (((a[i / 64] >> (i % 64)) & 1U) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size() * 64; ++j) {
            if ((b[j / 64] >> (j % 64)) & 1U) {
                out[(i + j) / 64] ^= word{1} << ((i + j) % 64);
            }
        }
    }
    return out;
}

} // namespace f2sigma::clmul

#endif
