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

// Runs the command-line tool as a subprocess and checks its output and exit codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#ifndef F2SIGMA_CLI_PATH
#error "F2SIGMA_CLI_PATH must name the f2sigma executable"
#endif

namespace
{

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run(const std::string &args)
{
    const std::string cmd = std::string("'") + F2SIGMA_CLI_PATH + "' " + args + " 2>/dev/null";
    CliResult r;
    FILE *pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    const int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::filesystem::path scratch(const std::string &name)
{
    return std::filesystem::temp_directory_path() / ("f2sigma_cli_" + name);
}

TEST(Cli, GenSigmaIndices)
{
    const CliResult r = run("gen sigma --precision 32 --format indices");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "0\n1\n2\n4\n8\n9\n16\n18\n25\n");
}

TEST(Cli, GenBinaryStartsWithMagic)
{
    const CliResult r = run("gen sigma-bar --precision 100 --format f2s1");
    EXPECT_EQ(r.status, 0);
    ASSERT_EQ(r.out.size(), 4U + 8U + 16U);
    EXPECT_EQ(r.out.substr(0, 4), "F2S1");
}

TEST(Cli, InvertRoundTripsThroughFiles)
{
    const auto sigma = scratch("sigma.f2s1");
    const auto bar = scratch("bar.f2s1");
    ASSERT_EQ(run("gen sigma --precision 5000 --format f2s1 --out '" + sigma.string() + "'").status, 0);
    ASSERT_EQ(run("invert '" + sigma.string() + "' --format f2s1 --out '" + bar.string() + "'").status, 0);
    const CliResult direct = run("gen sigma-bar --precision 5000 --format f2s1");
    std::ifstream in(bar, std::ios::binary);
    const std::string inverted((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(inverted, direct.out);
    std::filesystem::remove(sigma);
    std::filesystem::remove(bar);
}

TEST(Cli, InvertZeroConstantTermFails)
{
    const auto f = scratch("noconst.txt");
    {
        std::ofstream out(f);
        out << "1\n2\n";
    }
    EXPECT_EQ(run("invert '" + f.string() + "' --precision 8").status, 2);
    std::filesystem::remove(f);
}

TEST(Cli, VerifyExitCodes)
{
    const CliResult ok = run("verify L3_SIGMA_DECOMP --precision 1024");
    EXPECT_EQ(ok.status, 0);
    EXPECT_EQ(ok.out, "L3_SIGMA_DECOMP,1024,PASS\n");
    EXPECT_EQ(run("verify T12_GK_EVEN:2 --precision 64").status, 2);
    EXPECT_EQ(run("verify all --precision 0").status, 2);
    EXPECT_EQ(run("verify NO_SUCH_IDENTITY --precision 64").status, 2);
}

TEST(Cli, VerifyAllListsEveryCheck)
{
    const CliResult r = run("verify all --precision 1024");
    EXPECT_EQ(r.status, 0);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        ++n;
        EXPECT_NE(line.find(",PASS"), std::string::npos) << line;
    }
    EXPECT_GE(n, 17U);
}

TEST(Cli, DensityCsv)
{
    const CliResult r = run("density sigma --precision 101");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("n,count,density,class0", 0), 0U);
    EXPECT_NE(r.out.find("\n100,18,"), std::string::npos);
}

TEST(Cli, BeattyTable)
{
    const CliResult r = run("beatty w 3");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "k,kind,value\n1,w,1\n2,w,5\n3,w,8\n");
    EXPECT_EQ(run("beatty zeta 3").status, 2);
}

TEST(Cli, LOperatorReport)
{
    const CliResult r = run("beatty l-operator 5");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("k,ll_sigma,w,c\n1,1,1,1\n2,5,5,2\n", 0), 0U) << r.out;
}

TEST(Cli, RecipExperimentIsReproducible)
{
    const CliResult a = run("recip-experiment 3 0.5 --precision 512 --seed 7");
    const CliResult b = run("recip-experiment 3 0.5 --precision 512 --seed 7");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("mean,"), std::string::npos);
}

TEST(Cli, OutputsAreByteIdenticalAcrossRuns)
{
    for (const std::string args : {"gen partitions --precision 3000 --format f2s1", "density sigma-bar --precision 4096",
                                   "verify all --precision 256"}) {
        EXPECT_EQ(run(args).out, run(args).out) << args;
    }
}

TEST(Cli, OeisCheckAgainstBundledFixtures)
{
    const CliResult r = run("oeis-check A001954");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("a_number,matched,first_mismatch_index\nA001954,10000,", 0), 0U) << r.out;

    const auto empty = scratch("empty_cache");
    std::filesystem::create_directories(empty);
    EXPECT_NE(run("oeis-check A001954 --cache-dir '" + empty.string() + "'").status, 0);
    std::filesystem::remove_all(empty);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("gen").status, 2);
    EXPECT_EQ(run("gen sigma").status, 2); // no precision
    EXPECT_EQ(run("gen sigma --precision 8 --format xml").status, 2);
}

} // namespace
