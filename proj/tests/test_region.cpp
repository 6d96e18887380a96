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

#include <algorithm>
#include <cmath>
#include <vector>

#include "dofregion/region.hpp"

using namespace dofregion;

namespace
{

std::vector<AntennaConfig> all_configs()
{
    std::vector<AntennaConfig> out;
    for (int m1 = 1; m1 <= 4; ++m1)
        for (int n1 = 1; n1 <= 4; ++n1)
            for (int m2 = 1; m2 <= 4; ++m2)
                for (int n2 = 1; n2 <= 4; ++n2)
                    out.push_back({m1, n1, m2, n2});
    return out;
}

// Membership written straight from the theorem, in the orientation with
// N1 <= N2, without going through half-plane objects.
bool theorem_member(AntennaConfig c, double d1, double d2)
{
    constexpr double tol = 1e-9;
    if (c.n1 > c.n2)
    {
        std::swap(c.m1, c.m2);
        std::swap(c.n1, c.n2);
        std::swap(d1, d2);
    }
    if (d1 < -tol || d2 < -tol)
        return false;
    const int l = std::min(c.m1 + c.m2, c.n1) - std::min(c.m1, c.n1);
    const double num = std::min(c.m2, c.n1) - l;
    const double den = std::min(c.m2, c.n2) - l;
    const double coef = den == 0.0 ? 1.0 : num / den;
    return d1 <= std::min(c.m1, c.n1) + tol && d2 <= std::min(c.m2, c.n2) + tol &&
           d1 + coef * (d2 - l) <= std::min(c.m1, c.n1) + tol;
}

bool has_vertex(const DofRegion& r, double d1, double d2)
{
    return std::any_of(r.vertices.begin(), r.vertices.end(), [&](const DofPair& v) {
        return std::abs(v.d1 - d1) < 1e-9 && std::abs(v.d2 - d2) < 1e-9;
    });
}

double cross(DofPair o, DofPair a, DofPair b)
{
    return (a.d1 - o.d1) * (b.d2 - o.d2) - (a.d2 - o.d2) * (b.d1 - o.d1);
}

} // namespace

TEST_CASE("one and three transmit antennas: (1,1) achievable, (1,1.5) not")
{
    const AntennaConfig cfg{1, 2, 3, 4};
    const DofRegion r = compute_region(cfg);
    CHECK(r.case_label == RegionCase::C);
    CHECK_FALSE(r.swapped);
    CHECK(r.l_value == 1);
    REQUIRE(r.tradeoff_slope.has_value());
    CHECK(*r.tradeoff_slope == doctest::Approx(0.5).epsilon(1e-12));
    REQUIRE(r.vertices.size() == 4);
    CHECK(has_vertex(r, 0, 0));
    CHECK(has_vertex(r, 1, 0));
    CHECK(has_vertex(r, 1, 1));
    CHECK(has_vertex(r, 0, 3));
    CHECK(contains(r, {1.0, 1.0}));
    CHECK_FALSE(contains(r, {1.0, 1.5}));
    const DofRegion prev = previous_outer_bound(cfg);
    CHECK(contains(prev, {1.0, 1.5}));
    CHECK(has_vertex(prev, 1.0, 1.5));
    CHECK(is_subset(r, prev));
    CHECK_FALSE(is_subset(prev, r));
}

TEST_CASE("hand-evaluated regions in cases A and B")
{
    const DofRegion a = compute_region({2, 3, 1, 3});
    CHECK(a.case_label == RegionCase::A);
    CHECK(a.l_value == 1);
    CHECK_FALSE(a.tradeoff_slope.has_value());
    CHECK(a.vertices.size() == 4);
    CHECK(has_vertex(a, 2, 1));
    CHECK(has_vertex(a, 0, 1));

    const DofRegion b = compute_region({2, 2, 3, 4});
    CHECK(b.case_label == RegionCase::B);
    CHECK(b.vertices.size() == 3);
    CHECK(has_vertex(b, 2, 0));
    CHECK(has_vertex(b, 0, 3));
    CHECK(contains(b, {1.0, 1.5}));
    CHECK_FALSE(contains(b, {1.0, 1.5 + 1e-6}));
}

TEST_CASE("case classification and symmetry normalization")
{
    CHECK(classify_case({1, 2, 3, 4}).label == RegionCase::C);
    CHECK(classify_case({2, 2, 3, 4}).label == RegionCase::B);
    const CaseInfo mirrored = classify_case({3, 4, 1, 2});
    CHECK(mirrored.label == RegionCase::C);
    CHECK(mirrored.swapped);
    CHECK(tradeoff_slope({2, 3, 4, 5}) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(compute_region({2, 3, 4, 5}).l_value == 1);
    CHECK_THROWS_AS(tradeoff_slope({2, 3, 1, 3}), std::domain_error);
    CHECK_THROWS_AS(compute_region({0, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("half-plane region agrees with the theorem on a grid for every small config")
{
    for (const AntennaConfig& cfg : all_configs())
    {
        CAPTURE(cfg.to_string());
        const DofRegion r = compute_region(cfg);
        for (int i = 0; i <= 40; ++i)
            for (int j = 0; j <= 40; ++j)
            {
                const double d1 = 0.125 * i - 0.5;
                const double d2 = 0.125 * j - 0.5;
                if (contains(r, {d1, d2}) != theorem_member(cfg, d1, d2))
                {
                    CAPTURE(d1);
                    CAPTURE(d2);
                    FAIL("membership mismatch");
                }
            }
    }
}

TEST_CASE("region invariants over all configs with up to four antennas")
{
    for (const AntennaConfig& cfg : all_configs())
    {
        CAPTURE(cfg.to_string());
        const DofRegion r = compute_region(cfg);
        const AntennaConfig norm = normalized(cfg);
        CHECK(r.l_value == std::min(norm.m1 + norm.m2, norm.n1) - std::min(norm.m1, norm.n1));

        for (const DofPair& v : r.vertices)
            for (const HalfPlane& h : r.halfplanes)
                CHECK(h.satisfied_by(v, 1e-12));

        // Counterclockwise, strictly convex, no duplicates.
        const std::size_t n = r.vertices.size();
        REQUIRE(n >= 3);
        CHECK(r.vertices.front().d1 == 0.0);
        CHECK(r.vertices.front().d2 == 0.0);
        for (std::size_t k = 0; k < n; ++k)
            CHECK(cross(r.vertices[k], r.vertices[(k + 1) % n], r.vertices[(k + 2) % n]) > 1e-12);

        // Single-user corners lie on the boundary.
        const double s1 = std::min(cfg.m1, cfg.n1);
        const double s2 = std::min(cfg.m2, cfg.n2);
        CHECK(contains(r, {s1, 0.0}));
        CHECK_FALSE(contains(r, {s1 + 1e-6, 0.0}));
        CHECK(contains(r, {0.0, s2}));
        CHECK_FALSE(contains(r, {0.0, s2 + 1e-6}));

        // Mirror symmetry.
        const DofRegion m = compute_region(cfg.mirrored());
        CHECK(m.vertices.size() == n);
        for (const DofPair& v : r.vertices)
            CHECK(has_vertex(m, v.d2, v.d1));
    }
}

TEST_CASE("exact region sits inside the previous bound, with equality off case C")
{
    int case_c = 0;
    for (const AntennaConfig& cfg : all_configs())
    {
        CAPTURE(cfg.to_string());
        const DofRegion r = compute_region(cfg);
        const DofRegion prev = previous_outer_bound(cfg);
        CHECK(is_subset(r, prev));
        if (r.case_label == RegionCase::C)
        {
            ++case_c;
            CHECK_FALSE(same_vertices(r, prev));
        }
        else
            CHECK(same_vertices(r, prev));
    }
    CHECK(case_c > 0);
}

TEST_CASE("extra receive antennas never shrink the region")
{
    for (const AntennaConfig& cfg : all_configs())
    {
        CAPTURE(cfg.to_string());
        const DofRegion r = compute_region(cfg);
        if (cfg.n1 < 4)
            CHECK(is_subset(r, compute_region({cfg.m1, cfg.n1 + 1, cfg.m2, cfg.n2})));
        if (cfg.n2 < 4)
            CHECK(is_subset(r, compute_region({cfg.m1, cfg.n1, cfg.m2, cfg.n2 + 1})));
    }
}

TEST_CASE("distance to region")
{
    const DofRegion r = compute_region({1, 2, 3, 4});
    CHECK(distance_to_region(r, {0.5, 0.5}) == 0.0);
    CHECK(distance_to_region(r, {2.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
    // Nearest boundary point of (1, 1.5) is on d1 + d2/2 = 1.5.
    CHECK(distance_to_region(r, {1.0, 1.5}) == doctest::Approx(0.25 / std::sqrt(1.25)).epsilon(1e-12));
}

TEST_CASE("vertex enumeration deduplicates collinear constraints")
{
    const std::vector<HalfPlane> hp{{1, 0, 1}, {0, 1, 1}, {1, 1, 2}, {2, 2, 4}};
    const auto v = enumerate_vertices(hp);
    CHECK(v.size() == 4);
}

TEST_CASE("boundary sampling stays on the boundary")
{
    const DofRegion r = compute_region({1, 2, 3, 4});
    const auto pts = sample_boundary(r, 0.1);
    CHECK(pts.size() > 10);
    for (const DofPair& p : pts)
    {
        CHECK(contains(r, p));
        const bool on_axis = p.d1 < 1e-12 || p.d2 < 1e-12;
        if (!on_axis)
            CHECK_FALSE(contains(r, {p.d1 + 1e-6, p.d2 + 1e-6}));
        else
            CHECK_FALSE(contains(r, {p.d1 - 1e-6, p.d2 - 1e-6}));
    }
}
