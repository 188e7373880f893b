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

#ifndef F2SIGMA_ERROR_HPP
#define F2SIGMA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace f2sigma
{

enum class errc {
    invalid_precision,
    odd_exponent_present,
    zero_constant_term,
    stride_violation,
    invalid_residue,
    even_k_requested,
    checkpoint_out_of_range,
    insufficient_odd_values,
    invalid_argument,
    format_error,
    parse_error,
    network_unavailable,
    empty_overlap,
};

inline constexpr std::string_view errc_name(errc c) noexcept
{
    switch (c) {
        case errc::invalid_precision:
            return "InvalidPrecision";
        case errc::odd_exponent_present:
            return "OddExponentPresent";
        case errc::zero_constant_term:
            return "ZeroConstantTerm";
        case errc::stride_violation:
            return "StrideViolation";
        case errc::invalid_residue:
            return "InvalidResidue";
        case errc::even_k_requested:
            return "EvenKRequested";
        case errc::checkpoint_out_of_range:
            return "CheckpointOutOfRange";
        case errc::insufficient_odd_values:
            return "InsufficientOddValues";
        case errc::invalid_argument:
            return "InvalidArgument";
        case errc::format_error:
            return "FormatError";
        case errc::parse_error:
            return "ParseError";
        case errc::network_unavailable:
            return "NetworkUnavailable";
        case errc::empty_overlap:
            return "EmptyOverlap";
    }
    return "Unknown";
}

// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error
{
public:
    error(errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), m_code(code)
    {
    }

    [[nodiscard]] errc code() const noexcept
    {
        return m_code;
    }

private:
    errc m_code;
};

} // namespace f2sigma

#endif
