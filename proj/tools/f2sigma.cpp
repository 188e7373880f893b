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

// f2sigma command-line tool.
//
// Exit status: 0 success, 1 a verification or comparison failed (FAIL lines
// are on stdout), 2 usage or input error (message on stderr).

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <f2sigma/f2sigma.hpp>

#ifndef F2SIGMA_DATA_DIR
#define F2SIGMA_DATA_DIR "data"
#endif

namespace
{

using namespace f2sigma;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<std::size_t> precision;
    std::string format = "indices";
    std::string out;
    std::string cache_dir = std::string(F2SIGMA_DATA_DIR) + "/oeis";
    std::uint64_t seed = 1;
    std::uint64_t modulus = 8;
    bool allow_network = false;

    // subcommand positionals
    std::string kind;
    std::string input = "-";
    std::string target;
    std::string source;
    std::size_t count = 20;
    std::size_t trials = 20;
    double rho = 0.5;
    std::string a_number = "all";
};

class Output
{
public:
    explicit Output(const std::string &path)
    {
        if (!path.empty() && path != "-") {
            m_file = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*m_file) {
                throw usage_error("cannot open " + path + " for writing");
            }
        }
    }

    std::ostream &stream()
    {
        return m_file ? *m_file : std::cout;
    }

private:
    std::unique_ptr<std::ofstream> m_file;
};

std::size_t require_precision(const Options &o, std::size_t minimum = 1)
{
    if (!o.precision) {
        throw usage_error("--precision is required");
    }
    if (*o.precision < minimum) {
        throw usage_error("--precision must be at least " + std::to_string(minimum));
    }
    return *o.precision;
}

void write_series(const Options &o, const BitSeries &f)
{
    Output out(o.out);
    auto &os = out.stream();
    if (o.format == "f2s1") {
        io::write_f2s1(os, f);
    } else if (o.format == "indices") {
        io::write_indices(os, f);
    } else if (o.format == "csv") {
        os << "exponent\n";
        io::write_indices(os, f);
    } else {
        throw usage_error("unknown --format '" + o.format + "' (f2s1, indices, csv)");
    }
}

BitSeries read_input(const std::string &path, std::optional<std::size_t> precision)
{
    if (path == "-") {
        return io::read_series(std::cin, precision);
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw usage_error("cannot open " + path);
    }
    return io::read_series(in, precision);
}

SequenceKind require_kind(const std::string &name)
{
    const auto k = parse_sequence_kind(name);
    if (!k) {
        throw usage_error("unknown sequence '" + name
                          + "' (squares, odd-squares, triangular, pentagonal, sigma, sigma-bar, partitions, distinct-product)");
    }
    return *k;
}

int cmd_gen(const Options &o)
{
    write_series(o, generate(require_kind(o.kind), require_precision(o)));
    return exit_ok;
}

int cmd_invert(const Options &o)
{
    write_series(o, inverse(read_input(o.input, o.precision)));
    return exit_ok;
}

// Catalog, then pentagonal recurrences, Beatty index properties, c(sigma_n) = n
// and the prime-power description of SB_3. Everything runs even after a failure.
int cmd_verify(const Options &o)
{
    const std::size_t n = require_precision(o, min_identity_precision);
    Output out(o.out);
    auto &os = out.stream();
    std::vector<VerificationOutcome> results;
    if (o.target == "all") {
        results = verify_catalog(n);
        for (const auto &r : verify_pentagonal_recurrences(2000)) {
            results.push_back(r);
        }
        for (const auto &r : verify_beatty_props(10'000)) {
            results.push_back(r);
        }
        results.push_back(verify_c_inverts_enumeration(1'000'000));
        results.push_back(sigma3_characterization_check(std::min(n, max_sigma3_bound)));
    } else {
        const auto id = parse_identity(o.target);
        if (!id) {
            throw usage_error("unknown identity '" + o.target + "'");
        }
        results.push_back(verify(*id, n));
    }
    bool ok = true;
    for (const auto &r : results) {
        os << r.report_line() << '\n';
        ok = ok && r.holds();
    }
    return ok ? exit_ok : exit_failed;
}

int cmd_density(const Options &o)
{
    BitSeries f = [&] {
        if (const auto kind = parse_sequence_kind(o.source)) {
            return generate(*kind, require_precision(o));
        }
        return read_input(o.source, o.precision);
    }();
    if (o.modulus == 0) {
        throw usage_error("--modulus must be positive");
    }
    const auto rep = density_report(f, o.modulus, default_checkpoints(f.precision()));
    Output out(o.out);
    rep.write_csv(out.stream());
    return exit_ok;
}

int cmd_beatty(const Options &o)
{
    Output out(o.out);
    auto &os = out.stream();
    if (o.count == 0) {
        throw usage_error("count must be positive");
    }
    if (o.kind == "l-operator") {
        const auto finding = l_operator_finding(o.count);
        os << "k,ll_sigma,w,c\n";
        for (std::uint64_t k = 1; k <= o.count; ++k) {
            os << k << ',' << finding.ll_sigma[k - 1] << ',' << beatty_term(BeattyKind::w, k) << ','
               << c_function(k) << '\n';
        }
        const auto describe = [](const std::optional<std::uint64_t> &m) {
            return m ? "differs first at k=" + std::to_string(*m) : std::string("matches");
        };
        std::cerr << "L(L(sigma)) vs w: " << describe(finding.first_mismatch_w) << "; vs c: "
                  << describe(finding.first_mismatch_c) << " (k <= " << o.count << ")\n";
        return exit_ok;
    }
    std::vector<BeattyKind> kinds;
    if (o.kind == "all") {
        kinds.assign(all_beatty_kinds.begin(), all_beatty_kinds.end());
    } else if (const auto k = parse_beatty_kind(o.kind)) {
        kinds.push_back(*k);
    } else {
        throw usage_error("unknown Beatty kind '" + o.kind + "' (w, alpha, beta, gamma, delta, epsilon, all, l-operator)");
    }
    os << "k,kind,value\n";
    for (const auto kind : kinds) {
        for (std::uint64_t k = 1; k <= o.count; ++k) {
            os << k << ',' << beatty_name(kind) << ',' << beatty_term(kind, k) << '\n';
        }
    }
    return exit_ok;
}

int cmd_oeis_check(const Options &o)
{
    const std::filesystem::path cache(o.cache_dir);
    const std::filesystem::path local_mapping = cache / "mapping.csv";
    const auto mapping = oeis::load_mapping(std::filesystem::exists(local_mapping)
                                                ? local_mapping
                                                : std::filesystem::path(F2SIGMA_DATA_DIR) / "oeis" / "mapping.csv");
    if (o.a_number != "all") {
        oeis::require_a_number(o.a_number);
    }
    oeis::FetchOptions fetch;
    fetch.allow_network = o.allow_network;

    Output out(o.out);
    auto &os = out.stream();
    os << "a_number,matched,first_mismatch_index\n";
    bool ok = true;
    bool found = false;
    for (const auto &row : mapping) {
        if (o.a_number != "all" && row.a_number != o.a_number) {
            continue;
        }
        found = true;
        std::optional<oeis::BFile> ref;
        try {
            ref = oeis::fetch_bfile(row.a_number, cache, fetch);
        } catch (const error &e) {
            // A single requested entry that cannot be read is an error; in
            // 'all' mode missing entries are reported and skipped.
            if (o.a_number != "all") {
                throw;
            }
            std::cerr << row.a_number << ": skipped: " << e.what() << '\n';
            os << row.a_number << ",,\n";
            continue;
        }
        if (!ref->comments.empty() && ref->comments.front().find("NOT downloaded") != std::string::npos) {
            std::cerr << row.a_number << ": note: reference file is locally computed, not the published b-file\n";
        }
        if (row.construct.empty()) {
            const auto hits = oeis::discover_constructs(*ref);
            std::cerr << row.a_number << ": unmapped; matching constructs: ";
            for (const auto &h : hits) {
                std::cerr << h << ' ';
            }
            std::cerr << (hits.empty() ? "(none)\n" : "\n");
            os << row.a_number << ",,\n";
            continue;
        }
        const auto r = oeis::check_construct(row.construct, *ref, row.mode);
        os << row.a_number << ',' << r.matched_count << ',';
        if (r.first_mismatch) {
            os << r.first_mismatch->index;
            ok = false;
        }
        os << '\n';
    }
    if (!found) {
        throw usage_error(o.a_number + " is not in the mapping table");
    }
    return ok ? exit_ok : exit_failed;
}

int cmd_recip_experiment(const Options &o)
{
    const std::size_t n = o.precision.value_or(std::size_t{1} << 16);
    if (n == 0) {
        throw usage_error("--precision must be at least 1");
    }
    if (!(o.rho > 0.0 && o.rho < 1.0)) {
        throw usage_error("rho must be in (0, 1)");
    }
    const auto densities = random_reciprocal_experiment(o.trials, o.rho, n, o.seed);
    Output out(o.out);
    auto &os = out.stream();
    os << "trial,density\n";
    char buf[64];
    for (std::size_t t = 0; t < densities.size(); ++t) {
        std::snprintf(buf, sizeof(buf), "%.12f", densities[t]);
        os << t + 1 << ',' << buf << '\n';
    }
    if (!densities.empty()) {
        const double mean = std::accumulate(densities.begin(), densities.end(), 0.0) / static_cast<double>(densities.size());
        std::snprintf(buf, sizeof(buf), "%.12f", mean);
        os << "mean," << buf << '\n';
    }
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Binary power series tools for the sum-of-divisors parity set and its reciprocal"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    std::size_t precision = 0;
    auto *precision_opt = app.add_option("--precision", precision, "number of coefficients N (q^0 .. q^(N-1))");
    app.add_option("--format", o.format, "series output: f2s1, indices, csv")
        ->check(CLI::IsMember({"f2s1", "indices", "csv"}));
    app.add_option("--out", o.out, "write output to PATH instead of stdout");
    app.add_option("--cache-dir", o.cache_dir, "OEIS b-file cache directory");
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--modulus", o.modulus, "residue classes in density reports");

    auto *gen = app.add_subcommand("gen", "write the indicator series of a named set");
    gen->add_option("kind", o.kind, "sequence name")->required();

    auto *invert = app.add_subcommand("invert", "invert a series (F2S1 or exponent list; '-' is stdin)");
    invert->add_option("input", o.input, "input file");

    auto *verify_cmd = app.add_subcommand("verify", "check an identity, or 'all'");
    verify_cmd->add_option("identity", o.target, "identity name or all")->required();

    auto *density = app.add_subcommand("density", "density report CSV for a named set or a series file");
    density->add_option("source", o.source, "sequence name, file, or '-'")->required();

    auto *beatty = app.add_subcommand("beatty", "Beatty sequence table, or the L-operator comparison");
    beatty->add_option("kind", o.kind, "w, alpha, beta, gamma, delta, epsilon, all, l-operator")->required();
    beatty->add_option("count", o.count, "number of terms");

    auto *oeis_cmd = app.add_subcommand("oeis-check", "compare generated sequences with cached OEIS b-files");
    oeis_cmd->add_option("a_number", o.a_number, "A-number or all");
    oeis_cmd->add_flag("--allow-network", o.allow_network, "fetch missing b-files from oeis.org");

    auto *recip = app.add_subcommand("recip-experiment", "densities of reciprocals of random sets");
    recip->add_option("trials", o.trials, "number of random sets");
    recip->add_option("rho", o.rho, "inclusion probability");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }
    if (*precision_opt) {
        o.precision = precision;
    }

    try {
        if (*gen) {
            return cmd_gen(o);
        }
        if (*invert) {
            return cmd_invert(o);
        }
        if (*verify_cmd) {
            return cmd_verify(o);
        }
        if (*density) {
            return cmd_density(o);
        }
        if (*beatty) {
            return cmd_beatty(o);
        }
        if (*oeis_cmd) {
            return cmd_oeis_check(o);
        }
        if (*recip) {
            return cmd_recip_experiment(o);
        }
    } catch (const usage_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
