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


// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dofregion/capacity.hpp"
#include "dofregion/cli.hpp"
#include "dofregion/region.hpp"
#include "dofregion/verify.hpp"

using namespace dofregion;

namespace
{

struct Outcome
{
    bool pass = false;
    std::string detail;
};

struct Criterion
{
    int id;
    std::string title;
    double time_limit_s; // <= 0: none
    std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... xs)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, xs...);
    return buf;
}

bool near(DofPair p, double d1, double d2, double tol)
{
    return std::abs(p.d1 - d1) <= tol && std::abs(p.d2 - d2) <= tol;
}

bool has_vertex(const DofRegion& r, double d1, double d2)
{
    for (const DofPair& v : r.vertices)
        if (near(v, d1, d2, 1e-9))
            return true;
    return false;
}

const std::vector<double> high_snr_db{30.0, 35.0, 40.0};

std::vector<double> linear(const std::vector<double>& db)
{
    std::vector<double> g;
    for (double x : db)
        g.push_back(db_to_linear(x));
    return g;
}

double slope_of(const std::vector<double>& gammas, const std::vector<double>& rates)
{
    std::vector<std::pair<double, double>> pts;
    for (std::size_t k = 0; k < gammas.size(); ++k)
        pts.emplace_back(gammas[k], rates[k]);
    return dof_slope(pts);
}

// Slope pair of every labelled operating point across the grid.
std::vector<std::pair<std::string, DofPair>> point_slopes(const std::vector<AchievableRegion>& regions,
                                                          const std::vector<double>& gammas)
{
    std::vector<std::pair<std::string, DofPair>> out;
    for (const OperatingPoint& p : regions.front().points)
    {
        std::vector<double> r1;
        std::vector<double> r2;
        for (const AchievableRegion& a : regions)
        {
            r1.push_back(a.point(p.label).r1.mean);
            r2.push_back(a.point(p.label).r2.mean);
        }
        out.push_back({p.label, {slope_of(gammas, r1), slope_of(gammas, r2)}});
    }
    return out;
}

bool on_hull(const AchievableRegion& a, const std::string& label)
{
    const RatePair p = a.point(label).rates();
    for (const RatePair& h : a.hull)
        if (std::abs(h.r1 - p.r1) < 1e-9 && std::abs(h.r2 - p.r2) < 1e-9)
            return true;
    return false;
}

Outcome from_reports(const std::vector<SuiteReport>& reports)
{
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;
    for (const SuiteReport& r : reports)
    {
        checks += r.checks.size();
        failures += r.failures();
        for (const Check& c : r.checks)
            if (!c.pass && first_failure.empty())
                first_failure = fmt("; first failure: %s (observed %.6g, target %.6g, margin %.3g)",
                                    c.description.c_str(), c.observed, c.bound_or_target, c.margin);
    }
    return {failures == 0 && checks > 0, fmt("%zu checks, %zu violations", checks, failures) + first_failure};
}

std::vector<Criterion> criteria(std::uint64_t seed)
{
    std::vector<Criterion> list;

    list.push_back({1, "region exactness for (1,2,3,4)", 1e-3, [] {
                        const AntennaConfig cfg{1, 2, 3, 4};
                        const DofRegion r = compute_region(cfg);
                        const DofRegion prev = previous_outer_bound(cfg);
                        const bool ok = r.case_label == RegionCase::C && r.l_value == 1 && r.tradeoff_slope &&
                                        std::abs(*r.tradeoff_slope - 0.5) <= 1e-9 && r.vertices.size() == 4 &&
                                        has_vertex(r, 0, 0) && has_vertex(r, 1, 0) && has_vertex(r, 1, 1) &&
                                        has_vertex(r, 0, 3) && contains(r, {1, 1}) && !contains(r, {1, 1.5}) &&
                                        contains(prev, {1, 1.5});
                        return Outcome{ok, fmt("case %s, L=%d, mu=%.3g, %zu vertices; (1,1.5) in previous bound only",
                                               to_string(r.case_label), r.l_value, r.tradeoff_slope.value_or(-1.0),
                                               r.vertices.size())};
                    }});

    list.push_back({2, "exact region inside previous bound, equal in cases A and B", 1.0, [] {
                        int total = 0;
                        int bad = 0;
                        int case_c = 0;
                        for (int m1 = 1; m1 <= 4; ++m1)
                            for (int n1 = 1; n1 <= 4; ++n1)
                                for (int m2 = 1; m2 <= 4; ++m2)
                                    for (int n2 = 1; n2 <= 4; ++n2)
                                    {
                                        const AntennaConfig cfg{m1, n1, m2, n2};
                                        const DofRegion r = compute_region(cfg);
                                        const DofRegion prev = previous_outer_bound(cfg);
                                        const bool c = r.case_label == RegionCase::C;
                                        case_c += c;
                                        ++total;
                                        if (!is_subset(r, prev) || same_vertices(r, prev) == c)
                                            ++bad;
                                    }
                        return Outcome{bad == 0 && total == 256,
                                       fmt("%d configs (%d in case C), %d violations", total, case_c, bad)};
                    }});

    list.push_back({3, "single-user DoF slope within 0.05", 60.0, [seed] {
                        const std::vector<double> g = linear(high_snr_db);
                        std::string detail;
                        bool ok = true;
                        std::uint64_t stream = 30;
                        for (auto [m, n] : {std::pair{1, 1}, {2, 2}, {2, 3}, {3, 2}})
                        {
                            const RngStream rng(seed, stream++);
                            const auto curve = ergodic_logdet_curve(rng, {m, n, 1, 1}, FadingLaw::rayleigh(),
                                                                    single_link(Link::H11), g, 10000);
                            std::vector<double> r;
                            for (const Estimate& e : curve)
                                r.push_back(e.mean);
                            const double s = slope_of(g, r);
                            const int target = std::min(m, n);
                            ok = ok && std::abs(s - target) <= 0.05;
                            detail += fmt("%s%dx%d %.4f (target %d)", detail.empty() ? "" : ", ", m, n, s, target);
                        }
                        return Outcome{ok, detail};
                    }});

    list.push_back({4, "MAC sum-DoF at receiver 1 of (1,2,3,4)", 30.0, [seed] {
                        const std::vector<double> g = linear(high_snr_db);
                        const RngStream rng(seed, 40);
                        std::vector<double> sums;
                        for (double x : g)
                            sums.push_back(
                                mac_region_at_snr(rng, {1, 2, 3, 4}, FadingLaw::rayleigh(), 1, x, 10000).sum.mean);
                        const double s = slope_of(g, sums);
                        return Outcome{std::abs(s - 2.0) <= 0.05, fmt("sum slope %.4f (target 2)", s)};
                    }});

    list.push_back({5, "achievable corners reach the region vertices", 120.0, [seed] {
                        const std::vector<double> g = linear(high_snr_db);
                        auto regions_for = [&](AntennaConfig cfg, std::uint64_t stream) {
                            const RngStream rng(seed, stream);
                            std::vector<AchievableRegion> out;
                            for (double x : g)
                                out.push_back(achievable_region_at_snr(rng, cfg, FadingLaw::rayleigh(), x, 10000));
                            return out;
                        };
                        const auto c = regions_for({1, 2, 3, 4}, 50);
                        bool hit11 = false;
                        bool hit03 = false;
                        std::string detail = "(1,2,3,4):";
                        for (const auto& [label, p] : point_slopes(c, g))
                        {
                            bool hull = true;
                            for (const AchievableRegion& a : c)
                                hull = hull && on_hull(a, label);
                            if (!hull)
                                continue;
                            hit11 = hit11 || near(p, 1.0, 1.0, 0.1);
                            hit03 = hit03 || near(p, 0.0, 3.0, 0.1);
                            detail += fmt(" %s (%.3f, %.3f)", label.c_str(), p.d1, p.d2);
                        }
                        const auto b = regions_for({2, 2, 3, 4}, 51);
                        DofPair mid{};
                        for (const auto& [label, p] : point_slopes(b, g))
                            if (label == "single1" || label == "single2")
                            {
                                mid.d1 += 0.5 * p.d1;
                                mid.d2 += 0.5 * p.d2;
                            }
                        detail += fmt("; (2,2,3,4) midpoint (%.3f, %.3f)", mid.d1, mid.d2);
                        return Outcome{hit11 && hit03 && near(mid, 1.0, 1.5, 0.1), detail};
                    }});

    list.push_back({6, "BPSK within one bit of Gaussian, quadrature vs Monte Carlo", 30.0, [seed] {
                        const std::vector<double> grid{0.1, 1.0, 10.0, 100.0};
                        return from_reports({check_theorem2(RngStream(seed, 60), grid, 20000)});
                    }});

    list.push_back({7, "amplitude-change bound over 1000 draws", 30.0,
                    [seed] { return from_reports({check_lemma3(RngStream(seed, 70), 1000)}); }});

    list.push_back({8, "per-dimension conditional MI monotone in frame width", 60.0, [seed] {
                        return from_reports({check_lemma4(RngStream(seed, 80), 3, 1, 2, 0, 10000),
                                             check_lemma4(RngStream(seed, 81), 4, 1, 2, 1, 10000)});
                    }});

    list.push_back({9, "QPSK conditional MI below the Gaussian closed form", 120.0, [seed] {
                        const std::vector<double> grid{1.0, 10.0};
                        return from_reports({check_lemma5(RngStream(seed, 90), 1, grid, 5000),
                                             check_lemma5(RngStream(seed, 91), 2, grid, 5000)});
                    }});

    list.push_back({10, "I-MMSE identity, Gaussian and BPSK", 5.0, [] {
                         const SuiteReport r = check_immse();
                         double worst_g = 0.0;
                         double worst_b = 0.0;
                         for (double rho : {0.5, 1.0, 2.0})
                             for (double t : {0.5, 1.0, 3.0})
                             {
                                 const ImmsePair g = immse_check(rho, t);
                                 const ImmsePair b = immse_check_bpsk(rho, t);
                                 worst_g = std::max(worst_g, std::abs(g.mi_direct - g.mi_integrated));
                                 worst_b = std::max(worst_b, std::abs(b.mi_direct - b.mi_integrated));
                             }
                         return Outcome{r.passed() && worst_g < 1e-6 && worst_b < 1e-4,
                                        fmt("max |error| Gaussian %.2e nats, BPSK %.2e nats", worst_g, worst_b)};
                     }});

    list.push_back({11, "isotropy moments and E[VV^H] = (K/M) I", 60.0, [seed] {
                         return from_reports({check_isotropy(RngStream(seed, 110), FadingLaw::rayleigh(), 100000),
                                              check_isotropy(RngStream(seed, 111),
                                                             FadingLaw::fixed_spectrum({2.0, 0.5}), 100000)});
                     }});

    list.push_back({12, "coherence time does not change per-symbol MI", 60.0, [seed] {
                         const std::vector<int> ts{1, 2, 4};
                         const std::vector<double> grid{10.0, 100.0};
                         return from_reports({check_t_invariance(RngStream(seed, 120), {1, 2, 3, 4},
                                                                 FadingLaw::rayleigh(), ts, grid, 10000)});
                     }});

    list.push_back({13, "identical seeds give byte-identical output", 0.0, [seed] {
                         const std::string s = std::to_string(seed);
                         const std::vector<std::vector<std::string>> commands{
                             {"region", "--antennas", "1,2,3,4"},
                             {"region", "--antennas", "2,2,3,4", "--format", "csv"},
                             {"sweep", "--antennas", "1,2,3,4", "--snr-db", "0:10:40", "--trials", "2000", "--seed", s},
                             {"sweep", "--antennas", "2,3,1,3", "--law", "fixed:2,0.5", "--coherence-t", "2",
                              "--trials", "500", "--seed", s, "--format", "json"},
                             {"achievable", "--antennas", "1,2,3,4", "--snr-db", "30:5:40", "--trials", "2000",
                              "--seed", s},
                             {"verify", "--suite", "lemma3", "--trials", "200", "--seed", s},
                             {"verify", "--suite", "immse", "--seed", s, "--format", "csv"},
                         };
                         int identical = 0;
                         for (const auto& args : commands)
                         {
                             std::ostringstream a;
                             std::ostringstream b;
                             std::ostringstream err;
                             const int ca = run_cli(args, a, err);
                             const int cb = run_cli(args, b, err);
                             identical += ca == cb && !a.str().empty() && a.str() == b.str();
                         }
                         return Outcome{identical == static_cast<int>(commands.size()),
                                        fmt("%d of %zu commands reproduced byte for byte", identical,
                                            commands.size())};
                     }});
    return list;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria for the dofregion library", "dofregion_acceptance"};
    std::uint64_t seed = 20261015;
    std::vector<int> only;
    app.add_option("--seed", seed, "Base seed");
    app.add_option("--only", only, "Run only these criterion numbers");
    CLI11_PARSE(app, argc, argv);

    int failed = 0;
    for (const Criterion& c : criteria(seed))
    {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end())
            continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = c.run();
        }
        catch (const std::exception& e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = c.time_limit_s <= 0.0 || secs < c.time_limit_s;
        const bool pass = o.pass && in_time;
        failed += !pass;
        std::string limit = c.time_limit_s > 0.0 ? fmt(", limit %gs", c.time_limit_s) : std::string();
        if (!in_time)
            limit += ", over time";
        std::printf("criterion %2d %s  %s: %s [%.3fs%s]\n", c.id, pass ? "PASS" : "FAIL", c.title.c_str(),
                    o.detail.c_str(), secs, limit.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
