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

// OEIS b-file handling: parsing, an on-disk cache ({cache}/bNNNNNN.txt,
// stored verbatim), optional network fetch, and termwise comparison against
// generated sequences.
//
// Which generator corresponds to which A-number is data, not code: it lives
// in a mapping CSV next to the fixtures. Constructs are looked up by name in
// construct_registry().

#ifndef F2SIGMA_OEIS_HPP
#define F2SIGMA_OEIS_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#if defined(F2SIGMA_WITH_NETWORK)
#include <httplib.h>
#endif

#include <f2sigma/analysis.hpp>
#include <f2sigma/beatty.hpp>
#include <f2sigma/bit_series.hpp>
#include <f2sigma/error.hpp>
#include <f2sigma/seqgen.hpp>

namespace f2sigma::oeis
{

using integer = boost::multiprecision::cpp_int;

enum class Source { cache, network, stream };

struct Entry {
    std::int64_t index;
    integer value;

    friend bool operator==(const Entry &, const Entry &) = default;
};

struct BFile {
    std::string a_number;
    std::vector<Entry> entries;
    Source source = Source::stream;
    // '#' lines, without the marker, in file order.
    std::vector<std::string> comments;
};

[[nodiscard]] inline bool is_a_number(std::string_view s) noexcept
{
    return s.size() == 7 && s[0] == 'A'
           && std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline void require_a_number(std::string_view s)
{
    if (!is_a_number(s)) {
        throw error(errc::invalid_argument, "not an A-number: '" + std::string(s) + "'");
    }
}

[[nodiscard]] inline std::filesystem::path cache_path(const std::filesystem::path &cache_dir, std::string_view a_number)
{
    require_a_number(a_number);
    return cache_dir / ("b" + std::string(a_number.substr(1)) + ".txt");
}

// Whitespace-separated "index value" lines; '#' comments and blank lines skipped.
[[nodiscard]] inline BFile parse_bfile(std::istream &is, std::string a_number)
{
    BFile b;
    b.a_number = std::move(a_number);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        if (line[first] == '#') {
            const auto text = line.substr(first + 1);
            const auto start = text.find_first_not_of(' ');
            b.comments.push_back(start == std::string::npos ? std::string() : text.substr(start));
            continue;
        }
        std::istringstream fields(line);
        std::string idx_text;
        std::string val_text;
        std::string extra;
        fields >> idx_text >> val_text;
        const auto fail = [&](const std::string &why) {
            return error(errc::parse_error, b.a_number + " line " + std::to_string(lineno) + ": " + why);
        };
        if (val_text.empty() || (fields >> extra)) {
            throw fail("expected 'index value', got '" + line + "'");
        }
        std::int64_t index = 0;
        const auto [ptr, ec] = std::from_chars(idx_text.data(), idx_text.data() + idx_text.size(), index);
        if (ec != std::errc{} || ptr != idx_text.data() + idx_text.size()) {
            throw fail("bad index '" + idx_text + "'");
        }
        const std::size_t digits_from = (val_text[0] == '-' || val_text[0] == '+') ? 1 : 0;
        if (digits_from == val_text.size()
            || !std::all_of(val_text.begin() + static_cast<std::ptrdiff_t>(digits_from), val_text.end(),
                            [](char c) { return c >= '0' && c <= '9'; })) {
            throw fail("bad value '" + val_text + "'");
        }
        if (!b.entries.empty() && index <= b.entries.back().index) {
            throw fail("indices must be strictly increasing");
        }
        b.entries.push_back({index, integer(val_text)});
    }
    return b;
}

struct FetchOptions {
    bool allow_network = false;
    std::string host = "https://oeis.org";
};

[[nodiscard]] inline BFile fetch_bfile(std::string_view a_number, const std::filesystem::path &cache_dir,
                                       const FetchOptions &opts = {})
{
    const auto path = cache_path(cache_dir, a_number);
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        if (!in) {
            throw error(errc::invalid_argument, "cannot read " + path.string());
        }
        auto b = parse_bfile(in, std::string(a_number));
        b.source = Source::cache;
        return b;
    }
    if (!opts.allow_network) {
        throw error(errc::network_unavailable,
                    "no cached copy at " + path.string() + " and network fetching is disabled");
    }
#if defined(F2SIGMA_WITH_NETWORK)
    const std::string digits(a_number.substr(1));
    httplib::Client client(opts.host);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    client.set_follow_location(true);
    const auto res = client.Get("/" + std::string(a_number) + "/b" + digits + ".txt");
    if (!res || res->status != 200) {
        throw error(errc::network_unavailable,
                    "fetch of " + std::string(a_number) + " failed"
                        + (res ? " with HTTP " + std::to_string(res->status) : ": " + httplib::to_string(res.error())));
    }
    // Parse before caching so a bad download never lands in the cache.
    std::istringstream body(res->body);
    auto b = parse_bfile(body, std::string(a_number));
    std::filesystem::create_directories(cache_dir);
    std::ofstream out(path, std::ios::binary);
    out << res->body;
    b.source = Source::network;
    return b;
#else
    throw error(errc::network_unavailable, "built without network support");
#endif
}

enum class CompareMode { exact, parity };

struct Mismatch {
    std::int64_t index;
    integer expected;
    integer actual;
};

struct ComparisonResult {
    std::string a_number;
    std::size_t matched_count = 0;
    std::size_t overlap = 0;
    std::optional<Mismatch> first_mismatch;
    std::int64_t offset_used = 0;

    [[nodiscard]] bool matches() const noexcept
    {
        return !first_mismatch;
    }
};

// Aligns generated[0] with reference index offset (default: the first index
// in the b-file) and compares the overlapping terms.
[[nodiscard]] inline ComparisonResult compare_sequence(std::span<const std::uint64_t> generated, const BFile &reference,
                                                       std::optional<std::int64_t> offset = std::nullopt,
                                                       CompareMode mode = CompareMode::exact)
{
    ComparisonResult r;
    r.a_number = reference.a_number;
    r.offset_used = offset.value_or(reference.entries.empty() ? 0 : reference.entries.front().index);
    for (const auto &e : reference.entries) {
        if (e.index < r.offset_used) {
            continue;
        }
        const auto pos = static_cast<std::uint64_t>(e.index - r.offset_used);
        if (pos >= generated.size()) {
            break;
        }
        ++r.overlap;
        integer expected = e.value;
        integer actual = generated[pos];
        if (mode == CompareMode::parity) {
            expected = expected & 1;
            actual = actual & 1;
        }
        if (expected == actual) {
            ++r.matched_count;
        } else if (!r.first_mismatch) {
            r.first_mismatch = Mismatch{e.index, expected, actual};
        }
    }
    if (r.overlap == 0) {
        throw error(errc::empty_overlap, "no overlapping terms with " + reference.a_number);
    }
    return r;
}

// A named generator: first `count` terms of some sequence built by this library.
using Generator = std::function<std::vector<std::uint64_t>(std::size_t count)>;

namespace detail
{

// Exponents of a series family, grown until count terms exist or the
// precision cap is hit (then the available prefix is returned).
inline std::vector<std::uint64_t> exponents_of(const std::function<BitSeries(std::size_t)> &make, std::size_t count,
                                               std::uint64_t drop_below = 0)
{
    constexpr std::size_t cap = std::size_t{1} << 20;
    std::vector<std::uint64_t> out;
    for (std::size_t n = 1 << 12;; n *= 2) {
        out.clear();
        for_each_exponent(make(n), [&](exponent e) {
            if (e >= drop_below && out.size() < count) {
                out.push_back(e);
            }
        });
        if (out.size() >= count || n >= cap) {
            return out;
        }
    }
}

inline BitSeries sigma_bar_v(std::size_t n)
{
    return downshift_decimate(residue_extract(generate(SequenceKind::sigma_bar, 8 * n + 7), 8, 7), 7, 8);
}

inline BitSeries t_series(std::size_t n)
{
    const BitSeries delta2 = generate(SequenceKind::triangular, 2 * n);
    return mul(square(square(delta2)), inverse(sqrt_even(even_part(delta2))));
}

} // namespace detail

[[nodiscard]] inline const std::map<std::string, Generator> &construct_registry()
{
    static const std::map<std::string, Generator> registry = [] {
        std::map<std::string, Generator> r;
        for (const auto kind : all_beatty_kinds) {
            r["beatty-" + std::string(beatty_name(kind))] = [kind](std::size_t count) {
                std::vector<std::uint64_t> v;
                for (std::uint64_t k = 1; k <= count; ++k) {
                    v.push_back(beatty_term(kind, k));
                }
                return v;
            };
        }
        r["sigma-positive"] = [](std::size_t count) {
            const std::size_t precision = enumerate_sigma(count).terms.back() + 1;
            std::vector<std::uint64_t> v;
            for (const auto e : to_indices(generate(SequenceKind::sigma_parity, precision))) {
                if (e != 0) {
                    v.push_back(e);
                }
            }
            return v;
        };
        r["sigma-function"] = [](std::size_t count) {
            const auto s = divisor_sums(count + 1);
            return std::vector<std::uint64_t>(s.begin() + 1, s.end());
        };
        r["sigma-bar"] = [](std::size_t count) {
            return detail::exponents_of([](std::size_t n) { return generate(SequenceKind::sigma_bar, n); }, count);
        };
        r["sigma-bar-positive"] = [](std::size_t count) {
            return detail::exponents_of([](std::size_t n) { return generate(SequenceKind::sigma_bar, n); }, count, 1);
        };
        for (const std::uint64_t res : {3U, 7U}) {
            r["sigma-bar-" + std::to_string(res) + "mod8"] = [res](std::size_t count) {
                return detail::exponents_of(
                    [res](std::size_t n) { return residue_extract(generate(SequenceKind::sigma_bar, n), 8, res); },
                    count);
            };
        }
        r["sigma-bar-indicator"] = [](std::size_t count) {
            const BitSeries f = generate(SequenceKind::sigma_bar, count);
            std::vector<std::uint64_t> v(count);
            for (std::size_t i = 0; i < count; ++i) {
                v[i] = f.coefficient(i) ? 1 : 0;
            }
            return v;
        };
        r["v-series"] = [](std::size_t count) { return detail::exponents_of(detail::sigma_bar_v, count); };
        r["t-series"] = [](std::size_t count) { return detail::exponents_of(detail::t_series, count); };
        r["partition-parity-odd"] = [](std::size_t count) {
            return detail::exponents_of([](std::size_t n) { return generate(SequenceKind::partition_parity, n); },
                                        count);
        };
        return r;
    }();
    return registry;
}

// One row of the mapping table. construct is empty for A-numbers whose
// correspondence has not been established.
struct MappingRow {
    std::string a_number;
    std::string construct;
    CompareMode mode = CompareMode::exact;
    std::string note;
};

// a_number,construct,mode,note ('#' comments; note may contain commas).
[[nodiscard]] inline std::vector<MappingRow> parse_mapping(std::istream &is)
{
    std::vector<MappingRow> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (int i = 0; i < 3; ++i) {
            const auto comma = line.find(',', start);
            if (comma == std::string::npos) {
                throw error(errc::parse_error, "mapping line " + std::to_string(lineno) + ": expected 4 fields");
            }
            fields.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        fields.push_back(line.substr(start));
        if (fields[0] == "a_number") {
            continue;
        }
        MappingRow row{fields[0], fields[1], CompareMode::exact, fields[3]};
        require_a_number(row.a_number);
        if (fields[2] == "parity") {
            row.mode = CompareMode::parity;
        } else if (fields[2] != "exact" && !fields[2].empty()) {
            throw error(errc::parse_error, "mapping line " + std::to_string(lineno) + ": unknown mode '" + fields[2] + "'");
        }
        if (!row.construct.empty() && construct_registry().count(row.construct) == 0) {
            throw error(errc::parse_error,
                        "mapping line " + std::to_string(lineno) + ": unknown construct '" + row.construct + "'");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

[[nodiscard]] inline std::vector<MappingRow> load_mapping(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw error(errc::invalid_argument, "cannot read mapping table " + path.string());
    }
    return parse_mapping(in);
}

// Generates a construct with as many terms as the b-file provides and compares.
[[nodiscard]] inline ComparisonResult check_construct(const std::string &construct, const BFile &reference,
                                                      CompareMode mode = CompareMode::exact)
{
    const auto it = construct_registry().find(construct);
    if (it == construct_registry().end()) {
        throw error(errc::invalid_argument, "unknown construct '" + construct + "'");
    }
    const auto generated = it->second(reference.entries.size());
    return compare_sequence(generated, reference, std::nullopt, mode);
}

// Every registered construct that matches the b-file over its full range.
[[nodiscard]] inline std::vector<std::string> discover_constructs(const BFile &reference)
{
    std::vector<std::string> hits;
    for (const auto &[name, gen] : construct_registry()) {
        try {
            const auto r = compare_sequence(gen(reference.entries.size()), reference);
            if (r.matches() && r.overlap == reference.entries.size()) {
                hits.push_back(name);
            }
        } catch (const error &) {
        }
    }
    return hits;
}

} // namespace f2sigma::oeis

#endif
