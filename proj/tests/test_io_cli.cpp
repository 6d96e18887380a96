// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The dofregion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dofregion/cli.hpp"
#include "dofregion/io.hpp"

using namespace dofregion;
using nlohmann::json;

namespace
{

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "dofregion_test_io_cli";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("SNR grid parsing")
{
    CHECK(parse_snr_grid("30:5:40") == std::vector<double>{30.0, 35.0, 40.0});
    CHECK(parse_snr_grid("12") == std::vector<double>{12.0});
    CHECK(parse_snr_grid("0:0.1:0.3").size() == 4);
    CHECK_THROWS_AS(parse_snr_grid("40:5:30"), std::invalid_argument);
    CHECK_THROWS_AS(parse_snr_grid("0:0:10"), std::invalid_argument);
    CHECK_THROWS_AS(parse_snr_grid("a:1:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_snr_grid("1:2"), std::invalid_argument);
}

TEST_CASE("region JSON carries the exact and previous regions")
{
    const Run r = run({"region", "--antennas", "1,2,3,4"});
    REQUIRE(r.code == exit_code::ok);
    const json j = json::parse(r.out);
    CHECK(j["case"] == "C");
    CHECK(j["L"] == 1);
    CHECK(j["mu"].get<double>() == doctest::Approx(0.5));
    CHECK(j["vertices"].size() == 4);
    CHECK(j["previous_outer_bound"]["vertices"][2][1].get<double>() == doctest::Approx(1.5));
    CHECK(j["provenance"]["command"] == "region");
    CHECK(r.out.find("-0") == std::string::npos);

    const json b = json::parse(run({"region", "--antennas", "2,2,3,4"}).out);
    CHECK(b["case"] == "B");
    CHECK(b["mu"].is_null());
}

TEST_CASE("usage errors exit with code 2")
{
    CHECK(run({"region", "--antennas", "0,1,1,1"}).code == exit_code::usage);
    CHECK(run({"region", "--antennas", "1,2,3"}).code == exit_code::usage);
    CHECK(run({"region"}).code == exit_code::usage);
    CHECK(run({}).code == exit_code::usage);
    CHECK(run({"frobnicate"}).code == exit_code::usage);
    CHECK(run({"verify", "--suite", "nosuch"}).code == exit_code::usage);
    CHECK(run({"sweep", "--antennas", "1,1,1,1", "--law", "ricean"}).code == exit_code::usage);
    CHECK(run({"sweep", "--antennas", "1,1,1,1", "--trials", "0"}).code == exit_code::usage);
    CHECK(run({"sweep", "--antennas", "1,1,1,1", "--snr-db", "9:1:3"}).code == exit_code::usage);
    CHECK(run({"--help"}).code == exit_code::ok);
}

TEST_CASE("I/O errors exit with code 3")
{
    CHECK(run({"region", "--antennas", "1,2,3,4", "--out", "/nonexistent-dir/x.json"}).code == exit_code::io);
    CHECK(run({"slope", "--in", "/nonexistent-dir/x.csv"}).code == exit_code::io);
    CHECK(run({"region", "--config", "/nonexistent-dir/x.cfg"}).code == exit_code::io);
}

TEST_CASE("sweep CSV round trip and slopes")
{
    const Run r = run({"sweep", "--antennas", "1,1,1,1", "--law", "fixed:1", "--snr-db", "30:5:40", "--trials",
                       "3", "--seed", "9"});
    REQUIRE(r.code == exit_code::ok);
    CHECK(r.out.rfind("# dofregion", 0) == 0);
    std::istringstream in(r.out);
    std::uint64_t seed = 0;
    const auto rows = parse_sweep_csv(in, &seed);
    CHECK(seed == 9);
    REQUIRE(rows.size() == 24);
    CHECK(rows[0].value.mean == doctest::Approx(std::log2(1001.0)).epsilon(1e-12));
    const auto slopes = sweep_slopes(rows);
    REQUIRE(slopes.size() == 8);
    CHECK(slopes[0].first == "single1");
    CHECK(slopes[0].second == doctest::Approx(1.0).epsilon(1e-9));

    const auto path = scratch("sweep.csv");
    std::ofstream(path) << r.out;
    const Run s = run({"slope", "--in", path.string(), "--format", "json"});
    REQUIRE(s.code == exit_code::ok);
    const json j = json::parse(s.out);
    CHECK(j["provenance"]["seed"] == 9);
}

TEST_CASE("malformed sweep CSV is rejected")
{
    std::istringstream bad_header("a,b\n1,2\n");
    CHECK_THROWS_AS(parse_sweep_csv(bad_header), std::runtime_error);
    std::istringstream bad_number("gamma_db,quantity,mean_bits,std_err,trials,seed\n1,single1,x,0,1,1\n");
    CHECK_THROWS_AS(parse_sweep_csv(bad_number), std::runtime_error);
    std::istringstream short_row("gamma_db,quantity,mean_bits,std_err,trials,seed\n1,single1,2\n");
    CHECK_THROWS_AS(parse_sweep_csv(short_row), std::runtime_error);

    const auto path = scratch("bad.csv");
    std::ofstream(path) << "nonsense\n";
    CHECK(run({"slope", "--in", path.string()}).code == exit_code::usage);
}

TEST_CASE("config file values yield to command-line flags")
{
    const auto cfg = scratch("run.cfg");
    std::ofstream(cfg) << "# comment\nantennas = 2,2,3,4\nformat=json\n";
    const Run a = run({"region", "--config", cfg.string()});
    REQUIRE(a.code == exit_code::ok);
    CHECK(json::parse(a.out)["case"] == "B");
    const Run b = run({"region", "--config", cfg.string(), "--antennas", "1,2,3,4"});
    CHECK(json::parse(b.out)["case"] == "C");

    const auto bad = scratch("bad.cfg");
    std::ofstream(bad) << "colour=blue\n";
    CHECK(run({"region", "--config", bad.string()}).code == exit_code::usage);
}

TEST_CASE("region with --out also writes the boundary CSV")
{
    const auto out = scratch("region.json");
    std::filesystem::remove(scratch("region.boundary.csv"));
    REQUIRE(run({"region", "--antennas", "1,2,3,4", "--out", out.string()}).code == exit_code::ok);
    CHECK(json::parse(slurp(out))["case"] == "C");
    const std::string csv = slurp(scratch("region.boundary.csv"));
    CHECK(csv.find("region,d1,d2\n") != std::string::npos);
    CHECK(csv.find("previous,") != std::string::npos);
}

TEST_CASE("identical seeds give byte-identical files")
{
    const std::vector<std::vector<std::string>> commands{
        {"sweep", "--antennas", "1,2,3,4", "--snr-db", "10:10:30", "--trials", "200", "--seed", "5"},
        {"achievable", "--antennas", "2,3,1,3", "--snr-db", "20", "--trials", "200", "--seed", "5"},
        {"verify", "--suite", "lemma3", "--trials", "50", "--seed", "5"},
        {"region", "--antennas", "3,4,1,2"},
    };
    int k = 0;
    for (auto args : commands)
    {
        CAPTURE(args[0]);
        const auto p1 = scratch("det" + std::to_string(k) + "a");
        const auto p2 = scratch("det" + std::to_string(k) + "b");
        ++k;
        auto a1 = args;
        a1.insert(a1.end(), {"--out", p1.string()});
        auto a2 = args;
        a2.insert(a2.end(), {"--out", p2.string()});
        REQUIRE(run(a1).code == exit_code::ok);
        REQUIRE(run(a2).code == exit_code::ok);
        CHECK(slurp(p1) == slurp(p2));
        CHECK(!slurp(p1).empty());
    }
    const Run other = run({"sweep", "--antennas", "1,2,3,4", "--snr-db", "10", "--trials", "200", "--seed", "6"});
    const Run base = run({"sweep", "--antennas", "1,2,3,4", "--snr-db", "10", "--trials", "200", "--seed", "5"});
    CHECK(other.out != base.out);
}

TEST_CASE("verify reports failures through the exit code and JSON")
{
    const Run r = run({"verify", "--suite", "immse"});
    REQUIRE(r.code == exit_code::ok);
    const json j = json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["suites"][0]["checks"].size() == 18);
}

TEST_CASE("achievable CSV lists all operating points")
{
    const Run r =
        run({"achievable", "--antennas", "1,2,3,4", "--snr-db", "30", "--trials", "100", "--format", "csv"});
    REQUIRE(r.code == exit_code::ok);
    for (const char* label : {"origin", "single1", "single2", "mac_user1_first", "mac_user2_first"})
        CHECK(r.out.find(std::string(",") + label + ",") != std::string::npos);
}
