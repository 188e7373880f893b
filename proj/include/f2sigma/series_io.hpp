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

// Serialization of BitSeries.
//
// Binary "F2S1": the magic bytes F2S1, the precision as a little-endian
// uint64, then ceil(N/64) little-endian uint64 words of packed coefficients
// (bit i of the stream is the coefficient of q^i, padding bits zero).
//
// Text: one decimal exponent per line, strictly increasing. Blank lines and
// lines starting with '#' are ignored.

#ifndef F2SIGMA_SERIES_IO_HPP
#define F2SIGMA_SERIES_IO_HPP

#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <f2sigma/bit_series.hpp>
#include <f2sigma/error.hpp>

namespace f2sigma::io
{

inline constexpr std::string_view f2s1_magic = "F2S1";

namespace detail
{

inline void put_u64(std::ostream &os, std::uint64_t v)
{
    std::array<char, 8> buf{};
    for (std::size_t i = 0; i < 8; ++i) {
        buf[i] = static_cast<char>((v >> (8 * i)) & 0xFFU);
    }
    os.write(buf.data(), 8);
}

inline std::uint64_t get_u64(std::istream &is)
{
    std::array<unsigned char, 8> buf{};
    is.read(reinterpret_cast<char *>(buf.data()), 8);
    if (is.gcount() != 8) {
        throw error(errc::format_error, "truncated F2S1 stream");
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    }
    return v;
}

inline std::string_view trim(std::string_view s) noexcept
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

} // namespace detail

inline void write_f2s1(std::ostream &os, const BitSeries &f)
{
    os.write(f2s1_magic.data(), static_cast<std::streamsize>(f2s1_magic.size()));
    detail::put_u64(os, f.precision());
    for (const word w : f.words()) {
        detail::put_u64(os, w);
    }
}

// Reads the body of an F2S1 stream whose magic has already been consumed.
inline BitSeries read_f2s1_body(std::istream &is)
{
    const std::uint64_t precision = detail::get_u64(is);
    if (precision == 0) {
        throw error(errc::format_error, "F2S1 precision is zero");
    }
    std::vector<word> ws(words_for(precision));
    for (auto &w : ws) {
        w = detail::get_u64(is);
    }
    const std::size_t tail = precision % word_bits;
    if (tail != 0 && (ws.back() >> tail) != 0) {
        throw error(errc::format_error, "F2S1 padding bits are not zero");
    }
    return BitSeries(precision, std::move(ws));
}

inline BitSeries read_f2s1(std::istream &is)
{
    std::array<char, 4> magic{};
    is.read(magic.data(), 4);
    if (is.gcount() != 4 || std::string_view(magic.data(), 4) != f2s1_magic) {
        throw error(errc::format_error, "missing F2S1 magic");
    }
    return read_f2s1_body(is);
}

inline void write_indices(std::ostream &os, const BitSeries &f)
{
    for_each_exponent(f, [&](exponent e) { os << e << '\n'; });
}

inline IndexSet read_indices(std::istream &is)
{
    std::vector<exponent> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto t = detail::trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        exponent v = 0;
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc{} || ptr != t.data() + t.size()) {
            throw error(errc::parse_error, "line " + std::to_string(lineno) + ": not an exponent: '" + std::string(t) + "'");
        }
        if (!out.empty() && v <= out.back()) {
            throw error(errc::parse_error, "line " + std::to_string(lineno) + ": exponents must be strictly increasing");
        }
        out.push_back(v);
    }
    return IndexSet(std::move(out));
}

// Accepts either format. Text input needs a precision; F2S1 carries its own
// (an explicit precision then truncates, and may not exceed it).
inline BitSeries read_series(std::istream &is, std::optional<std::size_t> precision)
{
    std::array<char, 4> head{};
    std::size_t got = 0;
    while (got < head.size() && is.peek() != std::char_traits<char>::eof()) {
        head[got++] = static_cast<char>(is.get());
    }
    if (got == 4 && std::string_view(head.data(), 4) == f2s1_magic) {
        auto f = read_f2s1_body(is);
        return precision ? truncate(f, *precision) : f;
    }
    if (!precision) {
        throw error(errc::invalid_argument, "text input requires an explicit precision");
    }
    std::string rest(head.data(), got);
    rest.append(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
    std::istringstream text(rest);
    return from_indices(read_indices(text), *precision);
}

} // namespace f2sigma::io

#endif
