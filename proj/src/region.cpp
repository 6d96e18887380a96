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

#include "dofregion/region.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <stdexcept>

namespace dofregion
{

void AntennaConfig::validate() const
{
    if (m1 < 1 || n1 < 1 || m2 < 1 || n2 < 1)
        throw std::invalid_argument("antenna counts must all be >= 1, got " + to_string());
}

std::string AntennaConfig::to_string() const
{
    return std::to_string(m1) + "," + std::to_string(n1) + "," + std::to_string(m2) + "," + std::to_string(n2);
}

const char* to_string(RegionCase c) noexcept
{
    switch (c)
    {
    case RegionCase::A:
        return "A";
    case RegionCase::B:
        return "B";
    case RegionCase::C:
        return "C";
    }
    return "?";
}

namespace
{

RegionCase case_of_oriented(const AntennaConfig& c)
{
    if (c.m2 <= c.n1)
        return RegionCase::A;
    if (c.m1 >= c.n1)
        return RegionCase::B;
    return RegionCase::C;
}

// DoF vertices are small rationals; snap values that are within rounding of
// a fraction with a small denominator.
double snap(double x)
{
    for (int q = 1; q <= 12; ++q)
    {
        const double r = std::round(x * q);
        if (std::abs(x * q - r) < 1e-9)
            return r / q;
    }
    return x;
}

HalfPlane mirror(const HalfPlane& h)
{
    return {h.a2, h.a1, h.b};
}

// Builds the region object from half-planes written in normalized
// coordinates, mirroring back into the caller's orientation.
DofRegion assemble(const AntennaConfig& cfg, const CaseInfo& info, int l_value, std::optional<double> mu,
                   std::vector<HalfPlane> hp)
{
    DofRegion r;
    r.config = cfg;
    r.swapped = info.swapped;
    r.case_label = info.label;
    r.l_value = l_value;
    r.tradeoff_slope = mu;
    if (info.swapped)
        for (auto& h : hp)
            h = mirror(h);
    r.halfplanes = std::move(hp);
    r.vertices = enumerate_vertices(r.halfplanes);
    return r;
}

double point_segment_distance(DofPair p, DofPair a, DofPair b)
{
    const double dx = b.d1 - a.d1;
    const double dy = b.d2 - a.d2;
    const double len_sq = dx * dx + dy * dy;
    double t = 0.0;
    if (len_sq > 0.0)
        t = std::clamp(((p.d1 - a.d1) * dx + (p.d2 - a.d2) * dy) / len_sq, 0.0, 1.0);
    const double qx = a.d1 + t * dx - p.d1;
    const double qy = a.d2 + t * dy - p.d2;
    return std::hypot(qx, qy);
}

} // namespace

CaseInfo classify_case(const AntennaConfig& cfg)
{
    cfg.validate();
    if (cfg.n1 > cfg.n2)
        return {case_of_oriented(cfg.mirrored()), true};
    const RegionCase direct = case_of_oriented(cfg);
    if (cfg.n1 == cfg.n2 && direct == RegionCase::C)
        return {case_of_oriented(cfg.mirrored()), true};
    return {direct, false};
}

AntennaConfig normalized(const AntennaConfig& cfg)
{
    return classify_case(cfg).swapped ? cfg.mirrored() : cfg;
}

int interference_free_dof(const AntennaConfig& cfg)
{
    const AntennaConfig c = normalized(cfg);
    return std::min(c.m1 + c.m2, c.n1) - std::min(c.m1, c.n1);
}

DofRegion compute_region(const AntennaConfig& cfg)
{
    const CaseInfo info = classify_case(cfg);
    const AntennaConfig c = info.swapped ? cfg.mirrored() : cfg;
    const int l = std::min(c.m1 + c.m2, c.n1) - std::min(c.m1, c.n1);
    const int num = std::min(c.m2, c.n1) - l;
    const int den = std::min(c.m2, c.n2) - l;
    // 0/0 is taken as 1; den == 0 forces num == 0 because L <= min(M2, N1).
    const double coef = den == 0 ? 1.0 : static_cast<double>(num) / den;

    std::vector<HalfPlane> hp{
        {1.0, 0.0, static_cast<double>(std::min(c.m1, c.n1))},
        {0.0, 1.0, static_cast<double>(std::min(c.m2, c.n2))},
        {1.0, coef, std::min(c.m1, c.n1) + coef * l},
    };
    std::optional<double> mu;
    if (info.label == RegionCase::C)
        mu = static_cast<double>(c.m1) / (std::min(c.m2, c.n2) - l);
    return assemble(cfg, info, l, mu, std::move(hp));
}

DofRegion previous_outer_bound(const AntennaConfig& cfg)
{
    const CaseInfo info = classify_case(cfg);
    const AntennaConfig c = info.swapped ? cfg.mirrored() : cfg;
    const int l = std::min(c.m1 + c.m2, c.n1) - std::min(c.m1, c.n1);
    const double coef = static_cast<double>(std::min(c.m2, c.n1)) / std::min(c.m2, c.n2);
    std::vector<HalfPlane> hp{
        {1.0, 0.0, static_cast<double>(std::min(c.m1, c.n1))},
        {0.0, 1.0, static_cast<double>(std::min(c.m2, c.n2))},
        {1.0, coef, static_cast<double>(std::min(c.m1 + c.m2, c.n1))},
    };
    return assemble(cfg, info, l, std::nullopt, std::move(hp));
}

double tradeoff_slope(const AntennaConfig& cfg)
{
    const DofRegion r = compute_region(cfg);
    if (!r.tradeoff_slope)
        throw std::domain_error(std::string("tradeoff_slope: configuration ") + cfg.to_string() + " is case " +
                                to_string(r.case_label) + ", not C");
    return *r.tradeoff_slope;
}

bool contains(const DofRegion& region, DofPair p, double tol)
{
    if (p.d1 < -tol || p.d2 < -tol)
        return false;
    return std::all_of(region.halfplanes.begin(), region.halfplanes.end(),
                       [&](const HalfPlane& h) { return h.satisfied_by(p, tol); });
}

double distance_to_region(const DofRegion& region, DofPair p)
{
    if (contains(region, p, 0.0))
        return 0.0;
    const auto& v = region.vertices;
    if (v.size() == 1)
        return std::hypot(p.d1 - v[0].d1, p.d2 - v[0].d2);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i)
        best = std::min(best, point_segment_distance(p, v[i], v[(i + 1) % v.size()]));
    return best;
}

bool is_subset(const DofRegion& inner, const DofRegion& outer, double tol)
{
    return std::all_of(inner.vertices.begin(), inner.vertices.end(),
                       [&](DofPair p) { return contains(outer, p, tol); });
}

bool same_vertices(const DofRegion& a, const DofRegion& b, double tol)
{
    if (a.vertices.size() != b.vertices.size())
        return false;
    for (std::size_t i = 0; i < a.vertices.size(); ++i)
        if (std::abs(a.vertices[i].d1 - b.vertices[i].d1) > tol || std::abs(a.vertices[i].d2 - b.vertices[i].d2) > tol)
            return false;
    return true;
}

std::vector<DofPair> enumerate_vertices(std::span<const HalfPlane> halfplanes)
{
    std::vector<HalfPlane> all(halfplanes.begin(), halfplanes.end());
    all.push_back({-1.0, 0.0, 0.0});
    all.push_back({0.0, -1.0, 0.0});

    std::vector<DofPair> pts;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
        {
            const HalfPlane& p = all[i];
            const HalfPlane& q = all[j];
            const double det = p.a1 * q.a2 - p.a2 * q.a1;
            if (std::abs(det) < 1e-12)
                continue;
            const DofPair x{snap((p.b * q.a2 - p.a2 * q.b) / det), snap((p.a1 * q.b - p.b * q.a1) / det)};
            const bool feasible = std::all_of(all.begin(), all.end(), [&](const HalfPlane& h) {
                return h.satisfied_by(x, 1e-9 * (1.0 + std::abs(h.b)));
            });
            if (!feasible)
                continue;
            const bool dup = std::any_of(pts.begin(), pts.end(), [&](DofPair y) {
                return std::abs(x.d1 - y.d1) < 1e-9 && std::abs(x.d2 - y.d2) < 1e-9;
            });
            if (!dup)
                pts.push_back(x);
        }

    std::sort(pts.begin(), pts.end(), [](DofPair a, DofPair b) {
        const bool a0 = a.d1 == 0.0 && a.d2 == 0.0;
        const bool b0 = b.d1 == 0.0 && b.d2 == 0.0;
        if (a0 != b0)
            return a0;
        const double ta = std::atan2(a.d2, a.d1);
        const double tb = std::atan2(b.d2, b.d1);
        if (ta != tb)
            return ta < tb;
        return std::hypot(a.d1, a.d2) < std::hypot(b.d1, b.d2);
    });
    return pts;
}

std::vector<DofPair> sample_boundary(const DofRegion& region, double step)
{
    if (!(step > 0.0))
        throw std::invalid_argument("sample_boundary: step must be positive");
    std::vector<DofPair> out;
    const auto& v = region.vertices;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        const DofPair a = v[i];
        const DofPair b = v[(i + 1) % v.size()];
        const double len = std::hypot(b.d1 - a.d1, b.d2 - a.d2);
        const auto pieces = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(len / step - 1e-12)));
        for (std::size_t k = 0; k < pieces; ++k)
        {
            const double t = static_cast<double>(k) / static_cast<double>(pieces);
            out.push_back({a.d1 + t * (b.d1 - a.d1), a.d2 + t * (b.d2 - a.d2)});
        }
    }
    if (!v.empty())
        out.push_back(v.front());
    return out;
}

} // namespace dofregion
