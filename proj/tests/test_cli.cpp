// wbslope - wideband-slope analysis of K-user Gaussian interference channels
// Copyright (C) 2026 the wbslope authors
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
// ------------------------------------------------------------------------

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "subprocess.hpp"
#include "wbslope/channel.hpp"

namespace {

using testutil::cli_path;
using testutil::run_command;

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    std::string cur;
    while (std::getline(in, cur))
        if (cur == line) return true;
    return false;
}

}  // namespace

TEST_CASE("version flag") {
    const auto res = run_command(cli_path() + " --version");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "wbslope 0.1.0\n");
}

TEST_CASE("slope on an inline symmetric channel") {
    const auto res = run_command(cli_path() + " slope --symmetric k=10 a=0.5");
    CHECK(res.exit_code == 0);
    CHECK(has_line(res.output, "k=10"));
    CHECK(has_line(res.output, "ebno_min=0.69314718055994529"));
    CHECK(has_line(res.output, "s0_no_interference=20"));
    CHECK(has_line(res.output, "s0_tdma=2"));
    CHECK(has_line(res.output, "s0_tin=2"));

    const auto csv = run_command(cli_path() + " slope --symmetric k=10 a=0.5 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.rfind("k,ebno_min,s0_no_interference,s0_tdma,s0_tin,", 0) == 0);
}

TEST_CASE("slope on a channel file") {
    const auto path = std::filesystem::temp_directory_path() / "wbslope_cli_ch.txt";
    wbslope::save_channel(wbslope::make_symmetric(10, 0.5), path);
    const auto from_file = run_command(cli_path() + " slope --channel " + path.string());
    const auto inline_src = run_command(cli_path() + " slope --symmetric k=10 a=0.5");
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.output == inline_src.output);
    std::filesystem::remove(path);
}

TEST_CASE("align reports the optimum") {
    const auto res = run_command(cli_path() + " align --symmetric k=2 a=0.25");
    CHECK(res.exit_code == 0);
    CHECK(has_line(res.output, "converged=1"));

    // parse rather than string-compare: the optimum is only met to tol
    std::istringstream in(res.output);
    std::string line;
    double cost = 1e300, slope = 0.0;
    while (std::getline(in, line)) {
        if (line.rfind("cost_star=", 0) == 0) cost = std::stod(line.substr(10));
        if (line.rfind("s0_inta=", 0) == 0) slope = std::stod(line.substr(8));
    }
    CHECK(cost == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(slope == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("bound matches the closed form") {
    const auto res = run_command(cli_path() + " bound --symmetric k=10 a=0.5");
    CHECK(res.exit_code == 0);
    CHECK(has_line(res.output, "s0_bound=3.6363636363636362"));
    CHECK(has_line(res.output, "denominator=27.5"));
    CHECK(has_line(res.output, "membership=pass"));
}

TEST_CASE("membership prints certificates and the power threshold") {
    const auto res = run_command(cli_path() + " membership --symmetric k=3 a=0.5");
    CHECK(res.exit_code == 0);
    CHECK(has_line(res.output, "membership=pass"));
    CHECK(res.output.find("min_eigenvalue_j2=") != std::string::npos);
    CHECK(res.output.find("min_eigenvalue_j3=") != std::string::npos);
    // the zero-phase symmetric family has no finite threshold
    CHECK(res.output.find("epsilon=at_least_p_hi") != std::string::npos);
}

TEST_CASE("montecarlo is reproducible at any worker count") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto out1 = dir / "wbslope_cli_mc1.csv";
    const auto out2 = dir / "wbslope_cli_mc2.csv";
    const std::string base = cli_path() +
                             " montecarlo k=5 a=0.3,0.6 samples=10 seed=3 restarts=8 --out ";

    const auto r1 = run_command(base + out1.string() + " --jobs 1");
    const auto r2 = run_command(base + out2.string() + " --jobs 4");
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    const std::string text1 = read_file(out1);
    CHECK(!text1.empty());
    CHECK(text1 == read_file(out2));
    CHECK(std::filesystem::exists(out1.string() + ".meta"));
    // the sidecar records the experiment, not the scheduling
    CHECK(read_file(out1.string() + ".meta") == read_file(out2.string() + ".meta"));

    for (const auto& p : {out1, out2}) {
        std::filesystem::remove(p);
        std::filesystem::remove(p.string() + ".meta");
    }
}

TEST_CASE("sweep emits one row per a value") {
    const auto res =
        run_command(cli_path() + " sweep k=3 a=0.2,0.8 samples=9 seed=1 restarts=8");
    CHECK(res.exit_code == 0);
    std::istringstream in(res.output);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "a,median_inta,s0_tin,s0_tdma");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2);
}

TEST_CASE("flag styles override positional settings") {
    const auto pos = run_command(cli_path() + " sweep k=3 a=0.5 samples=7 seed=4 restarts=8");
    const auto flags = run_command(cli_path() +
                                   " sweep k=3 samples=7 restarts=8 --a 0.5 --seed 4");
    CHECK(pos.exit_code == 0);
    CHECK(pos.output == flags.output);
}

TEST_CASE("errors exit with code one and a message") {
    const auto nosub = run_command(cli_path());
    CHECK(nosub.exit_code == 1);

    const auto badsub = run_command(cli_path() + " frobnicate");
    CHECK(badsub.exit_code == 1);

    const auto nosource = run_command(cli_path() + " slope");
    CHECK(nosource.exit_code == 1);

    const auto badfile = run_command(cli_path() + " slope --channel /nonexistent/ch.txt");
    CHECK(badfile.exit_code == 1);

    const auto badk = run_command(cli_path() + " slope --symmetric k=zero a=0.5");
    CHECK(badk.exit_code == 1);
    CHECK(badk.output.find("wbslope: error:") != std::string::npos);

    const auto badsetting = run_command(cli_path() + " montecarlo k=3 a=0.5 bogus=1");
    CHECK(badsetting.exit_code == 1);

    const auto nowhere = run_command(cli_path() +
                                     " montecarlo k=3 a=0.5 samples=2 --out /nonexistent/d/x.csv");
    CHECK(nowhere.exit_code == 1);
}

TEST_CASE("help is exit zero") {
    const auto res = run_command(cli_path() + " --help");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("slope") != std::string::npos);
    CHECK(res.output.find("montecarlo") != std::string::npos);
}
