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

// Identity catalog for the sum-of-divisors parity series Sigma and its
// reciprocal Sigma-bar, and density reporting.
//
// Notation used in the comments below (all series over GF(2)):
//   S      positive squares            D    odd squares
//   Delta  triangular numbers          G    prod_{n>=1} (1 + q^n)
//   Sigma  {0} + {n : sigma(n) odd}    SB   1 / Sigma
//   SB_k   exponents of SB congruent to k mod 8
//   T      Delta^4 / sqrt(even part of Delta),   V with SB_7 = q^7 V(q)^8
//
// Every identity is checked modulo q^N. Infinite sums are cut at the first
// term whose lowest exponent is >= N (the lowest exponent of D^j is j).

#ifndef F2SIGMA_ANALYSIS_HPP
#define F2SIGMA_ANALYSIS_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <f2sigma/bit_series.hpp>
#include <f2sigma/error.hpp>
#include <f2sigma/seqgen.hpp>
#include <f2sigma/verification.hpp>

namespace f2sigma
{

enum class IdentityTag {
    l3_sigma_decomp,
    l4_s_from_d,
    c1_sigma_from_d,
    l5_sigmabar_series,
    l9_subsets,
    l10_i_tail,
    l10_ii_qdelta8,
    t11_triple_product,
    t12_gk_even,
    c13_delta_fraction,
    t16_final_equation,
    eqk_v_identity,
    t19_mod16_vanishing,
    sigma3_square_plus_twice_square,
};

inline constexpr std::array<IdentityTag, 14> all_identity_tags = {
    IdentityTag::l3_sigma_decomp,    IdentityTag::l4_s_from_d,         IdentityTag::c1_sigma_from_d,
    IdentityTag::l5_sigmabar_series, IdentityTag::l9_subsets,          IdentityTag::l10_i_tail,
    IdentityTag::l10_ii_qdelta8,     IdentityTag::t11_triple_product,  IdentityTag::t12_gk_even,
    IdentityTag::c13_delta_fraction, IdentityTag::t16_final_equation,  IdentityTag::eqk_v_identity,
    IdentityTag::t19_mod16_vanishing, IdentityTag::sigma3_square_plus_twice_square,
};

[[nodiscard]] inline constexpr std::string_view identity_tag_name(IdentityTag t) noexcept
{
    switch (t) {
        case IdentityTag::l3_sigma_decomp:
            return "L3_SIGMA_DECOMP";
        case IdentityTag::l4_s_from_d:
            return "L4_S_FROM_D";
        case IdentityTag::c1_sigma_from_d:
            return "C1_SIGMA_FROM_D";
        case IdentityTag::l5_sigmabar_series:
            return "L5_SIGMABAR_SERIES";
        case IdentityTag::l9_subsets:
            return "L9_SUBSETS";
        case IdentityTag::l10_i_tail:
            return "L10_I_TAIL";
        case IdentityTag::l10_ii_qdelta8:
            return "L10_II_QDELTA8";
        case IdentityTag::t11_triple_product:
            return "T11_TRIPLE_PRODUCT";
        case IdentityTag::t12_gk_even:
            return "T12_GK_EVEN";
        case IdentityTag::c13_delta_fraction:
            return "C13_DELTA_FRACTION";
        case IdentityTag::t16_final_equation:
            return "T16_FINAL_EQUATION";
        case IdentityTag::eqk_v_identity:
            return "EQK_V_IDENTITY";
        case IdentityTag::t19_mod16_vanishing:
            return "T19_MOD16_VANISHING";
        case IdentityTag::sigma3_square_plus_twice_square:
            return "SIGMA3_SQUARE_PLUS_TWICE_SQUARE";
    }
    return "";
}

// An identity, with the exponent k for the T12_GK_EVEN family.
struct IdentityId {
    IdentityTag tag;
    std::int64_t k = 0;

    [[nodiscard]] std::string name() const
    {
        std::string n(identity_tag_name(tag));
        if (tag == IdentityTag::t12_gk_even) {
            n += "(k=" + std::to_string(k) + ")";
        }
        return n;
    }

    friend bool operator==(const IdentityId &, const IdentityId &) = default;
};

// Exponents used for the T12 family when the whole catalog is run.
inline constexpr std::array<std::int64_t, 4> default_t12_exponents = {1, 3, 5, -1};

// The full catalog in report order.
[[nodiscard]] inline std::vector<IdentityId> identity_catalog()
{
    std::vector<IdentityId> out;
    for (const auto t : all_identity_tags) {
        if (t == IdentityTag::t12_gk_even) {
            for (const auto k : default_t12_exponents) {
                out.push_back({t, k});
            }
        } else {
            out.push_back({t, 0});
        }
    }
    return out;
}

// Accepts "NAME", or "T12_GK_EVEN:k" / "T12_GK_EVEN(k=K)" for the
// parameterized family. Bare T12_GK_EVEN means k = 1.
[[nodiscard]] inline std::optional<IdentityId> parse_identity(std::string_view text)
{
    std::string_view base = text;
    std::optional<std::int64_t> k;
    if (const auto colon = text.find(':'); colon != std::string_view::npos) {
        base = text.substr(0, colon);
        try {
            k = std::stoll(std::string(text.substr(colon + 1)));
        } catch (const std::exception &) {
            return std::nullopt;
        }
    } else if (const auto paren = text.find("(k="); paren != std::string_view::npos && text.back() == ')') {
        base = text.substr(0, paren);
        try {
            k = std::stoll(std::string(text.substr(paren + 3, text.size() - paren - 4)));
        } catch (const std::exception &) {
            return std::nullopt;
        }
    }
    for (const auto t : all_identity_tags) {
        if (identity_tag_name(t) == base) {
            if (t == IdentityTag::t12_gk_even) {
                return IdentityId{t, k.value_or(1)};
            }
            if (k) {
                return std::nullopt;
            }
            return IdentityId{t, 0};
        }
    }
    return std::nullopt;
}

// Minimum precision for the catalog.
inline constexpr std::size_t min_identity_precision = 16;

// Evaluates identities at one precision, sharing the common series.
class IdentityVerifier
{
public:
    explicit IdentityVerifier(std::size_t precision) : m_n(precision)
    {
        if (precision < min_identity_precision) {
            throw error(errc::invalid_precision, "identity checks need precision >= 16");
        }
    }

    [[nodiscard]] std::size_t precision() const noexcept
    {
        return m_n;
    }

    // The outcome reports the verifier's precision even where the compared
    // series are shorter (V has precision about N/8).
    [[nodiscard]] VerificationOutcome verify(const IdentityId &id)
    {
        auto out = evaluate(id);
        out.precision = m_n;
        return out;
    }

    // Shared series, built on first use.
    const BitSeries &sigma()
    {
        return cached(m_sigma, [&] { return generate(SequenceKind::sigma_parity, m_n); });
    }
    const BitSeries &sigma_bar()
    {
        return cached(m_sigma_bar, [&] { return inverse(sigma()); });
    }
    const BitSeries &squares()
    {
        return cached(m_squares, [&] { return generate(SequenceKind::squares, m_n); });
    }
    const BitSeries &odd_squares()
    {
        return cached(m_odd_squares, [&] { return generate(SequenceKind::odd_squares, m_n); });
    }
    const BitSeries &triangular()
    {
        return cached(m_triangular, [&] { return generate(SequenceKind::triangular, m_n); });
    }
    const BitSeries &t_series()
    {
        return cached(m_t, [&] {
            const BitSeries delta2 = generate(SequenceKind::triangular, 2 * m_n);
            const BitSeries root = sqrt_even(even_part(delta2));
            return mul(square(square(delta2)), inverse(root));
        });
    }

private:
    [[nodiscard]] VerificationOutcome evaluate(const IdentityId &id)
    {
        const std::string label = id.name();
        switch (id.tag) {
            case IdentityTag::l3_sigma_decomp:
                // Sigma = 1 + S + S^2
                return compare_series(label, sigma(), one() + squares() + square(squares()));
            case IdentityTag::l4_s_from_d:
                // S = sum_{n>=0} D^(4^n)
                return compare_series(label, squares(), squares_from_odd_squares());
            case IdentityTag::c1_sigma_from_d: {
                // Sigma = 1 + sum_{n>=0} D^(2^n)
                BitSeries acc = one();
                BitSeries term = odd_squares();
                for (std::size_t e = 1; e < m_n; e *= 2) {
                    acc = acc + term;
                    term = square(term);
                }
                return compare_series(label, sigma(), acc);
            }
            case IdentityTag::l5_sigmabar_series:
                // SB = sum_{n>=0} D^(2^n - 1)
                return compare_series(label, sigma_bar(), mersenne_power_sum(0));
            case IdentityTag::l9_subsets:
                return verify_subsets(label);
            case IdentityTag::l10_i_tail: {
                // SB - 1 - D - D^3 = D^7 SB^8
                const BitSeries lhs = sigma_bar() + one() + odd_squares() + odd_squares_cubed();
                const BitSeries rhs = mul(pow(odd_squares(), 7), square(square(square(sigma_bar()))));
                return compare_series(label, lhs, rhs);
            }
            case IdentityTag::l10_ii_qdelta8:
                // q Delta^8 = D
                return compare_series(label, shift(square(square(square(triangular()))), 1), odd_squares());
            case IdentityTag::t11_triple_product:
                // Delta = prod (1 + q^n)^3
                return compare_series(label, triangular(), product_power(3, m_n));
            case IdentityTag::t12_gk_even: {
                // Sigma G^k = (G^k)_e for odd k
                if (id.k % 2 == 0) {
                    throw error(errc::even_k_requested, "T12_GK_EVEN needs odd k, got " + std::to_string(id.k));
                }
                const BitSeries gk = product_power(id.k, m_n);
                return compare_series(label, mul(sigma(), gk), even_part(gk));
            }
            case IdentityTag::c13_delta_fraction:
                // SB = Delta / Delta_e
                return compare_series(label, sigma_bar(), mul(triangular(), inverse(even_part(triangular()))));
            case IdentityTag::t16_final_equation: {
                // SB_7 = q^7 T^16; T is assembled at 2N so sqrt_even lands on N.
                const BitSeries t16 = square(square(square(square(t_series()))));
                return compare_series(label, residue_extract(sigma_bar(), 8, 7), shift(t16, 7));
            }
            case IdentityTag::eqk_v_identity: {
                // V = Delta^7 SB, with V read off SB_7 = q^7 V(q^8)
                const BitSeries v = downshift_decimate(residue_extract(sigma_bar(), 8, 7), 7, 8);
                const BitSeries rhs = mul(pow(triangular(), 7), sigma_bar());
                return compare_series(label, v, truncate(rhs, v.precision()));
            }
            case IdentityTag::t19_mod16_vanishing:
                // no exponent of SB is 15 mod 16
                return compare_series(label, residue_extract(sigma_bar(), 16, 15), BitSeries(m_n));
            case IdentityTag::sigma3_square_plus_twice_square:
                // SB_3 = D * D^2: parity of #{a, b >= 1 : a^2 + 2 b^2 = n} on n = 3 mod 8
                return compare_series(label, residue_extract(sigma_bar(), 8, 3), square_plus_twice_square_parity());
        }
        throw error(errc::invalid_argument, "unknown identity");
    }

    template <typename Fn>
    const BitSeries &cached(std::optional<BitSeries> &slot, Fn &&make)
    {
        if (!slot) {
            slot.emplace(make());
        }
        return *slot;
    }

    [[nodiscard]] BitSeries one() const
    {
        return BitSeries::one(m_n);
    }

    const BitSeries &odd_squares_cubed()
    {
        return cached(m_d3, [&] { return mul(odd_squares(), square(odd_squares())); });
    }

    [[nodiscard]] BitSeries squares_from_odd_squares()
    {
        BitSeries acc(m_n);
        BitSeries term = odd_squares();
        for (std::size_t e = 1; e < m_n; e *= 4) {
            acc = acc + term;
            term = square(square(term));
        }
        return acc;
    }

    // sum of D^(2^n - 1) over n >= first.
    [[nodiscard]] BitSeries mersenne_power_sum(unsigned first)
    {
        BitSeries acc(m_n);
        BitSeries term = one();
        for (unsigned n = 0; (std::uint64_t{1} << n) - 1 < m_n; ++n) {
            if (n >= first) {
                acc = acc + term;
            }
            term = mul(square(term), odd_squares());
        }
        return acc;
    }

    [[nodiscard]] VerificationOutcome verify_subsets(const std::string &label)
    {
        const BitSeries &sb = sigma_bar();
        const std::array<VerificationOutcome, 5> parts = {
            compare_series(label, residue_extract(sb, 8, 0), one()),
            compare_series(label, residue_extract(sb, 8, 1), odd_squares()),
            compare_series(label, residue_extract(sb, 8, 3), odd_squares_cubed()),
            compare_series(label, residue_extract(sb, 8, 7), mersenne_power_sum(3)),
            // SB lives on residues {0, 1, 3, 7}
            compare_series(label,
                           sb,
                           residue_extract(sb, 8, 0) + residue_extract(sb, 8, 1) + residue_extract(sb, 8, 3)
                               + residue_extract(sb, 8, 7)),
        };
        VerificationOutcome out{label, m_n, std::nullopt};
        for (const auto &p : parts) {
            if (p.first_mismatch && (!out.first_mismatch || *p.first_mismatch < *out.first_mismatch)) {
                out.first_mismatch = p.first_mismatch;
            }
        }
        return out;
    }

    [[nodiscard]] BitSeries square_plus_twice_square_parity() const
    {
        std::vector<word> ws(words_for(m_n), 0);
        for (std::uint64_t a = 1; a * a < m_n; ++a) {
            for (std::uint64_t b = 1; a * a + 2 * b * b < m_n; ++b) {
                const std::uint64_t n = a * a + 2 * b * b;
                if (n % 8 == 3) {
                    ws[n / word_bits] ^= word{1} << (n % word_bits);
                }
            }
        }
        return BitSeries(m_n, std::move(ws));
    }

    std::size_t m_n;
    std::optional<BitSeries> m_sigma;
    std::optional<BitSeries> m_sigma_bar;
    std::optional<BitSeries> m_squares;
    std::optional<BitSeries> m_odd_squares;
    std::optional<BitSeries> m_triangular;
    std::optional<BitSeries> m_t;
    std::optional<BitSeries> m_d3;
};

[[nodiscard]] inline VerificationOutcome verify(const IdentityId &id, std::size_t precision)
{
    IdentityVerifier v(precision);
    return v.verify(id);
}

// Runs the whole catalog at one precision, in catalog order.
[[nodiscard]] inline std::vector<VerificationOutcome> verify_catalog(std::size_t precision)
{
    IdentityVerifier v(precision);
    std::vector<VerificationOutcome> out;
    for (const auto &id : identity_catalog()) {
        out.push_back(v.verify(id));
    }
    return out;
}

// Counts of a set's elements in [0, n] at each checkpoint, overall and split
// by residue class.
struct DensityReport {
    std::vector<std::size_t> checkpoints;
    std::vector<std::size_t> counts;
    std::vector<double> densities;
    std::uint64_t modulus = 1;
    // per_residue[i][r]: elements <= checkpoints[i] that are = r mod modulus
    std::vector<std::vector<std::size_t>> per_residue;

    // n,count,density,class0,...,class{m-1}
    void write_csv(std::ostream &os) const
    {
        os << "n,count,density";
        for (std::uint64_t r = 0; r < modulus; ++r) {
            os << ",class" << r;
        }
        os << '\n';
        for (std::size_t i = 0; i < checkpoints.size(); ++i) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.12f", densities[i]);
            os << checkpoints[i] << ',' << counts[i] << ',' << buf;
            for (const auto c : per_residue[i]) {
                os << ',' << c;
            }
            os << '\n';
        }
    }
};

// Powers of two below the precision, followed by N-1.
[[nodiscard]] inline std::vector<std::size_t> default_checkpoints(std::size_t precision)
{
    std::vector<std::size_t> out;
    for (std::size_t p = 1; p < precision; p *= 2) {
        out.push_back(p);
    }
    if (precision >= 2 && (out.empty() || out.back() != precision - 1)) {
        out.push_back(precision - 1);
    }
    return out;
}

[[nodiscard]] inline DensityReport density_report(const BitSeries &f, std::uint64_t modulus,
                                                  std::vector<std::size_t> checkpoints)
{
    if (modulus == 0) {
        throw error(errc::invalid_argument, "modulus must be positive");
    }
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] >= f.precision()) {
            throw error(errc::checkpoint_out_of_range, "checkpoint " + std::to_string(checkpoints[i])
                                                           + " is not below precision " + std::to_string(f.precision()));
        }
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
            throw error(errc::invalid_argument, "checkpoints must be strictly increasing");
        }
    }

    DensityReport rep;
    rep.modulus = modulus;
    rep.checkpoints = std::move(checkpoints);
    std::vector<std::size_t> classes(modulus, 0);
    std::size_t total = 0;
    std::size_t next = 0;
    const auto emit = [&] {
        rep.counts.push_back(total);
        rep.densities.push_back(static_cast<double>(total) / static_cast<double>(rep.checkpoints[next] + 1));
        rep.per_residue.push_back(classes);
        ++next;
    };
    for_each_exponent(f, [&](exponent e) {
        while (next < rep.checkpoints.size() && rep.checkpoints[next] < e) {
            emit();
        }
        if (next == rep.checkpoints.size()) {
            return;
        }
        ++total;
        ++classes[e % modulus];
    });
    while (next < rep.checkpoints.size()) {
        emit();
    }
    return rep;
}

// Violations of the residue structure of SB: exponents outside {0, 1, 3, 7}
// mod 8, and exponents that are 15 mod 16.
struct ResidueStructure {
    std::size_t outside_0137 = 0;
    std::size_t fifteen_mod_16 = 0;
    std::optional<std::uint64_t> first_violation;
};

[[nodiscard]] inline ResidueStructure sigma_bar_structure(const BitSeries &sigma_bar)
{
    ResidueStructure s;
    for_each_exponent(sigma_bar, [&](exponent e) {
        const auto r = e % 8;
        bool bad = false;
        if (r != 0 && r != 1 && r != 3 && r != 7) {
            ++s.outside_0137;
            bad = true;
        }
        if (e % 16 == 15) {
            ++s.fifteen_mod_16;
            bad = true;
        }
        if (bad && !s.first_violation) {
            s.first_violation = e;
        }
    });
    return s;
}

// Membership in {p^e k^2 : p prime, p = 3 mod 8, e = 1 mod 4, k odd, p does not divide k}.
// spf holds the smallest prime factor of every index.
[[nodiscard]] inline bool in_sigma3_predicate(std::uint64_t n, const std::vector<std::uint32_t> &spf)
{
    if (n < 3 || n % 2 == 0) {
        return false;
    }
    std::optional<std::uint64_t> odd_prime;
    std::uint64_t odd_exp = 0;
    while (n > 1) {
        const std::uint64_t p = spf[n];
        std::uint64_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e % 2 == 1) {
            if (odd_prime) {
                return false;
            }
            odd_prime = p;
            odd_exp = e;
        }
    }
    return odd_prime && *odd_prime % 8 == 3 && odd_exp % 4 == 1;
}

[[nodiscard]] inline std::vector<std::uint32_t> smallest_prime_factors(std::size_t bound)
{
    std::vector<std::uint32_t> spf(bound, 0);
    for (std::size_t i = 2; i < bound; ++i) {
        if (spf[i] == 0) {
            for (std::size_t m = i; m < bound; m += i) {
                if (spf[m] == 0) {
                    spf[m] = static_cast<std::uint32_t>(i);
                }
            }
        }
    }
    return spf;
}

inline constexpr std::size_t max_sigma3_bound = 1'000'000;

// Compares SB_3 against the prime-power description, element by element below bound.
[[nodiscard]] inline VerificationOutcome sigma3_characterization_check(std::size_t bound)
{
    if (bound < 1 || bound > max_sigma3_bound) {
        throw error(errc::invalid_argument, "bound must be in [1, 10^6]");
    }
    const BitSeries sb3 = residue_extract(generate(SequenceKind::sigma_bar, bound), 8, 3);
    const auto spf = smallest_prime_factors(bound);
    std::vector<word> ws(words_for(bound), 0);
    for (std::uint64_t n = 3; n < bound; n += 8) {
        if (in_sigma3_predicate(n, spf)) {
            ws[n / word_bits] |= word{1} << (n % word_bits);
        }
    }
    return compare_series("SIGMA3_CHARACTERIZATION", sb3, BitSeries(bound, std::move(ws)));
}

// Draws random sets containing 0 (each positive index kept with probability
// rho), inverts each, and returns the density of the reciprocal on [0, N-1].
[[nodiscard]] inline std::vector<double> random_reciprocal_experiment(std::size_t trials, double rho,
                                                                      std::size_t precision, std::uint64_t seed)
{
    if (!(rho > 0.0 && rho < 1.0)) {
        throw error(errc::invalid_argument, "inclusion probability must be in (0, 1)");
    }
    if (precision == 0) {
        throw error(errc::invalid_precision, "precision must be at least 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<double> out;
    out.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<word> ws(words_for(precision), 0);
        ws[0] = 1;
        for (std::size_t i = 1; i < precision; ++i) {
            // 53 random bits as a uniform double in [0, 1); identical on every platform.
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < rho) {
                ws[i / word_bits] |= word{1} << (i % word_bits);
            }
        }
        const BitSeries recip = inverse(BitSeries(precision, std::move(ws)));
        out.push_back(static_cast<double>(recip.popcount()) / static_cast<double>(precision));
    }
    return out;
}

} // namespace f2sigma

#endif
