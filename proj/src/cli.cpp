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

#include "dofregion/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "dofregion/capacity.hpp"
#include "dofregion/io.hpp"
#include "dofregion/region.hpp"
#include "dofregion/verify.hpp"
#include "dofregion/version.hpp"

namespace dofregion
{

namespace
{

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct RunConfig
{
    std::string command;
    std::string antennas;
    std::string law = "rayleigh";
    std::string snr_db = "30:5:40";
    int coherence_t = 1;
    std::size_t trials = 10000;
    bool trials_given = false;
    std::uint64_t seed = 1;
    std::string out;
    std::string format;
    std::string suite = "all";
    std::string in;
};

double parse_number(const std::string& s, const std::string& what)
{
    std::size_t used = 0;
    double v = 0.0;
    try
    {
        v = std::stod(s, &used);
    }
    catch (const std::exception&)
    {
        used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v))
        throw UsageError("bad " + what + " '" + s + "'");
    return v;
}

AntennaConfig parse_antennas(const std::string& spec)
{
    if (spec.empty())
        throw UsageError("--antennas M1,N1,M2,N2 is required");
    std::vector<int> v;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        const double x = parse_number(item, "antenna count");
        if (x != std::floor(x))
            throw UsageError("antenna counts must be integers, got '" + spec + "'");
        v.push_back(static_cast<int>(x));
    }
    if (v.size() != 4)
        throw UsageError("--antennas needs exactly four values M1,N1,M2,N2, got '" + spec + "'");
    const AntennaConfig cfg{v[0], v[1], v[2], v[3]};
    try
    {
        cfg.validate();
    }
    catch (const std::invalid_argument& e)
    {
        throw UsageError(e.what());
    }
    return cfg;
}

FadingLaw parse_law(const RunConfig& rc)
{
    try
    {
        return FadingLaw::parse(rc.law, rc.coherence_t);
    }
    catch (const std::invalid_argument& e)
    {
        throw UsageError(e.what());
    }
}

// Flat key=value file; blank lines and '#' comments are ignored.
std::vector<std::string> config_file_args(const std::string& path)
{
    static const std::map<std::string, std::string> keys{
        {"antennas", "--antennas"},   {"law", "--law"},     {"snr-db", "--snr-db"}, {"snr_db", "--snr-db"},
        {"coherence-t", "--coherence-t"}, {"coherence_t", "--coherence-t"}, {"trials", "--trials"},
        {"seed", "--seed"},           {"out", "--out"},     {"format", "--format"}, {"suite", "--suite"},
        {"in", "--in"}};
    std::ifstream f(path);
    if (!f)
        throw IoError("cannot read config file '" + path + "'");
    std::vector<std::string> args;
    std::string line;
    std::size_t line_no = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(f, line))
    {
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(line_no) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const auto it = keys.find(key);
        if (it == keys.end())
            throw UsageError(path + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
        args.push_back(it->second + "=" + trim(line.substr(eq + 1)));
    }
    return args;
}

void emit(const RunConfig& rc, const std::string& text, std::ostream& out)
{
    if (rc.out.empty())
    {
        out << text;
        return;
    }
    std::ofstream f(rc.out, std::ios::binary);
    if (!f)
        throw IoError("cannot open '" + rc.out + "' for writing");
    f << text;
    if (!f.flush())
        throw IoError("failed writing '" + rc.out + "'");
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text) || !f.flush())
        throw IoError("cannot write '" + path + "'");
}

std::string sibling_path(const std::string& out, const std::string& suffix)
{
    const auto slash = out.find_last_of('/');
    const auto dot = out.find_last_of('.');
    const std::string stem = (dot != std::string::npos && (slash == std::string::npos || dot > slash)) ? out.substr(0, dot)
                                                                                                     : out;
    return stem + suffix;
}

std::string format_or(const RunConfig& rc, const char* fallback)
{
    return rc.format.empty() ? fallback : rc.format;
}

Provenance provenance(const RunConfig& rc, bool with_law)
{
    Provenance p;
    p.command = rc.command;
    p.seed = rc.seed;
    p.trials = rc.trials;
    if (with_law)
    {
        p.law = rc.law;
        p.coherence_t = rc.coherence_t;
    }
    return p;
}

int cmd_region(const RunConfig& rc, std::ostream& out)
{
    const AntennaConfig cfg = parse_antennas(rc.antennas);
    const DofRegion exact = compute_region(cfg);
    const DofRegion previous = previous_outer_bound(cfg);
    Provenance prov = provenance(rc, false);
    prov.trials = 0;
    if (format_or(rc, "json") == "csv")
    {
        emit(rc, boundary_csv(exact, previous, prov), out);
        return exit_code::ok;
    }
    emit(rc, region_json(exact, previous, prov), out);
    if (!rc.out.empty())
        write_file(sibling_path(rc.out, ".boundary.csv"), boundary_csv(exact, previous, prov));
    return exit_code::ok;
}

std::vector<double> grid_db(const RunConfig& rc)
{
    try
    {
        return parse_snr_grid(rc.snr_db);
    }
    catch (const std::invalid_argument& e)
    {
        throw UsageError(e.what());
    }
}

int cmd_sweep(const RunConfig& rc, std::ostream& out)
{
    const AntennaConfig cfg = parse_antennas(rc.antennas);
    const FadingLaw law = parse_law(rc);
    const std::vector<double> db = grid_db(rc);
    const RngStream rng(rc.seed, 0);
    const std::vector<SweepRow> rows = sweep(rng, cfg, law, db, rc.trials);
    const Provenance prov = provenance(rc, true);
    emit(rc, format_or(rc, "csv") == "csv" ? sweep_csv(rows, prov) : sweep_json(rows, prov), out);
    return exit_code::ok;
}

int cmd_achievable(const RunConfig& rc, std::ostream& out)
{
    const AntennaConfig cfg = parse_antennas(rc.antennas);
    const FadingLaw law = parse_law(rc);
    const std::vector<double> db = grid_db(rc);
    const RngStream rng(rc.seed, 0);
    std::vector<AchievableRegion> regions;
    for (double x : db)
        regions.push_back(achievable_region_at_snr(rng, cfg, law, db_to_linear(x), rc.trials));
    const Provenance prov = provenance(rc, true);
    emit(rc, format_or(rc, "json") == "csv" ? achievable_csv(regions, db, prov) : achievable_json(regions, db, prov),
         out);
    return exit_code::ok;
}

int cmd_verify(const RunConfig& rc, std::ostream& out)
{
    std::vector<SuiteReport> reports;
    try
    {
        reports = run_suite(rc.suite, rc.seed, rc.trials_given ? rc.trials : 0);
    }
    catch (const std::invalid_argument& e)
    {
        throw UsageError(std::string(e.what()) + "; known suites: all, " + [] {
            std::string s;
            for (const auto& n : suite_names())
                s += (s.empty() ? "" : ", ") + n;
            return s;
        }());
    }
    Provenance prov = provenance(rc, false);
    prov.trials = rc.trials_given ? rc.trials : 0;
    emit(rc, format_or(rc, "json") == "csv" ? reports_csv(reports, prov) : reports_json(reports, prov), out);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });
    return ok ? exit_code::ok : exit_code::check_failed;
}

int cmd_slope(const RunConfig& rc, std::ostream& out)
{
    if (rc.in.empty())
        throw UsageError("slope needs --in <sweep.csv>");
    std::ifstream f(rc.in);
    if (!f)
        throw IoError("cannot read '" + rc.in + "'");
    std::uint64_t seed = rc.seed;
    std::vector<SweepRow> rows;
    std::vector<std::pair<std::string, double>> slopes;
    try
    {
        rows = parse_sweep_csv(f, &seed);
        slopes = sweep_slopes(rows);
    }
    catch (const std::exception& e)
    {
        throw UsageError(rc.in + ": " + e.what());
    }
    Provenance prov;
    prov.command = rc.command;
    prov.seed = seed;
    prov.trials = rows.empty() ? 0 : rows.front().value.trials;
    emit(rc, format_or(rc, "csv") == "csv" ? slopes_csv(slopes, prov) : slopes_json(slopes, prov), out);
    return exit_code::ok;
}

} // namespace

std::vector<double> parse_snr_grid(const std::string& spec)
{
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':'))
        parts.push_back(item);
    auto number = [&](const std::string& s) {
        try
        {
            return parse_number(s, "SNR");
        }
        catch (const UsageError& e)
        {
            throw std::invalid_argument(e.what());
        }
    };
    if (parts.size() == 1)
        return {number(parts[0])};
    if (parts.size() != 3)
        throw std::invalid_argument("SNR grid must be lo:step:hi, got '" + spec + "'");
    const double lo = number(parts[0]);
    const double step = number(parts[1]);
    const double hi = number(parts[2]);
    if (!(step > 0.0) || hi < lo)
        throw std::invalid_argument("SNR grid needs step > 0 and lo <= hi, got '" + spec + "'");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    if (count > 10000)
        throw std::invalid_argument("SNR grid has too many points");
    std::vector<double> grid(count);
    for (std::size_t k = 0; k < count; ++k)
        grid[k] = lo + static_cast<double>(k) * step;
    return grid;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig rc;
    CLI::App app{"Degree-of-freedom regions of two-user MIMO interference channels without CSIT", "dofregion"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.set_version_flag("--version", version);
    app.require_subcommand(1, 1);

    std::string config_path;
    app.add_option("--config", config_path, "key=value file; command-line flags take precedence");
    app.add_option("--antennas", rc.antennas, "Antenna counts M1,N1,M2,N2");
    app.add_option("--law", rc.law, "Fading law: rayleigh | fixed:<csv singular values>");
    app.add_option("--snr-db", rc.snr_db, "SNR grid in dB, lo:step:hi");
    app.add_option("--coherence-t", rc.coherence_t, "Coherence time T")->check(CLI::PositiveNumber);
    auto* trials = app.add_option("--trials", rc.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    app.add_option("--seed", rc.seed, "Base seed");
    app.add_option("--out", rc.out, "Output path (default stdout)");
    app.add_option("--format", rc.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--suite", rc.suite, "Verification suite name or 'all'");
    app.add_option("--in", rc.in, "Sweep CSV to fit slopes on");

    const std::pair<const char*, const char*> commands[] = {
        {"region", "Exact DoF region and the previous outer bound"},
        {"sweep", "Ergodic rates over an SNR grid"},
        {"achievable", "Achievable operating points and hull per SNR"},
        {"verify", "Run verification suites"},
        {"slope", "DoF slopes of a sweep CSV"},
    };
    for (const auto& [name, help] : commands)
        app.add_subcommand(name, help)->fallthrough();

    try
    {
        // Config values go first so that later command-line flags win.
        std::vector<std::string> full;
        for (std::size_t i = 0; i < args.size(); ++i)
        {
            if (args[i] == "--config" && i + 1 < args.size())
                config_path = args[i + 1];
            else if (args[i].rfind("--config=", 0) == 0)
                config_path = args[i].substr(9);
        }
        if (!config_path.empty())
            full = config_file_args(config_path);
        full.insert(full.end(), args.begin(), args.end());
        std::reverse(full.begin(), full.end());
        app.parse(full);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }
    catch (const UsageError& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
    catch (const IoError& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_code::io;
    }

    rc.trials_given = trials->count() > 0;
    rc.command = app.get_subcommands().front()->get_name();
    try
    {
        if (rc.command == "region")
            return cmd_region(rc, out);
        if (rc.command == "sweep")
            return cmd_sweep(rc, out);
        if (rc.command == "achievable")
            return cmd_achievable(rc, out);
        if (rc.command == "verify")
            return cmd_verify(rc, out);
        return cmd_slope(rc, out);
    }
    catch (const UsageError& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
    catch (const IoError& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_code::io;
    }
    catch (const std::invalid_argument& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
}

} // namespace dofregion
