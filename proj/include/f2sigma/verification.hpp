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

#ifndef F2SIGMA_VERIFICATION_HPP
#define F2SIGMA_VERIFICATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <f2sigma/bit_series.hpp>

namespace f2sigma
{

// Result of checking one identity or property up to a bound. holds is true
// exactly when first_mismatch is empty.
struct VerificationOutcome {
    std::string label;
    std::size_t precision = 0;
    std::optional<std::uint64_t> first_mismatch;

    [[nodiscard]] bool holds() const noexcept
    {
        return !first_mismatch.has_value();
    }

    // IDENTITY,N,PASS|FAIL[,first_mismatch]
    [[nodiscard]] std::string report_line() const
    {
        std::string line = label + "," + std::to_string(precision) + (holds() ? ",PASS" : ",FAIL");
        if (first_mismatch) {
            line += "," + std::to_string(*first_mismatch);
        }
        return line;
    }
};

// Lowest exponent where the two series differ, compared at the smaller
// precision.
[[nodiscard]] inline std::optional<std::uint64_t> first_difference(const BitSeries &a, const BitSeries &b)
{
    const BitSeries d = add(a, b);
    std::optional<std::uint64_t> first;
    const auto ws = d.words();
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (ws[i] != 0) {
            first = i * word_bits + static_cast<std::size_t>(std::countr_zero(ws[i]));
            break;
        }
    }
    return first;
}

[[nodiscard]] inline VerificationOutcome compare_series(std::string label, const BitSeries &lhs, const BitSeries &rhs)
{
    return {std::move(label), std::min(lhs.precision(), rhs.precision()), first_difference(lhs, rhs)};
}

} // namespace f2sigma

#endif
