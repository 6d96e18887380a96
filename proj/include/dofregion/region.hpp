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

#ifndef DOFREGION_REGION_HPP
#define DOFREGION_REGION_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dofregion
{

/// Antenna counts (M1, N1, M2, N2): transmitter t has M_t antennas,
/// receiver r has N_r antennas.
struct AntennaConfig
{
    int m1 = 1;
    int n1 = 1;
    int m2 = 1;
    int n2 = 1;

    /// Throws std::invalid_argument unless every count is >= 1.
    void validate() const;
    /// Same channel with the user labels exchanged.
    AntennaConfig mirrored() const noexcept { return {m2, n2, m1, n1}; }
    std::string to_string() const;

    friend bool operator==(const AntennaConfig&, const AntennaConfig&) = default;
};

struct DofPair
{
    double d1 = 0.0;
    double d2 = 0.0;
};

/// a1 * d1 + a2 * d2 <= b
struct HalfPlane
{
    double a1 = 0.0;
    double a2 = 0.0;
    double b = 0.0;

    bool satisfied_by(DofPair p, double tol) const noexcept { return a1 * p.d1 + a2 * p.d2 <= b + tol; }
};

enum class RegionCase
{
    A, // N1 >= M2: intersection of the two multiple-access regions
    B, // M2 > N1, M1 >= N1: triangle
    C, // M2 > N1 > M1: trapezoid
};

const char* to_string(RegionCase c) noexcept;

struct CaseInfo
{
    RegionCase label;
    bool swapped; // user roles exchanged so that N1 <= N2
};

inline constexpr double membership_tol = 1e-9;

/// DoF region in the caller's (unswapped) coordinates. Case label, L and the
/// trade-off slope describe the normalized orientation.
struct DofRegion
{
    AntennaConfig config;
    bool swapped = false;
    RegionCase case_label = RegionCase::A;
    int l_value = 0;
    std::optional<double> tradeoff_slope; // case C only
    std::vector<HalfPlane> halfplanes;    // excluding d1 >= 0, d2 >= 0
    std::vector<DofPair> vertices;        // counterclockwise from the origin
};

/// Orientation with N1 <= N2. When N1 == N2 both orientations describe the
/// same region; the one that is not case C is chosen.
CaseInfo classify_case(const AntennaConfig& cfg);
AntennaConfig normalized(const AntennaConfig& cfg);

/// L = min(M1 + M2, N1) - min(M1, N1) of the normalized configuration.
int interference_free_dof(const AntennaConfig& cfg);

DofRegion compute_region(const AntennaConfig& cfg);
DofRegion previous_outer_bound(const AntennaConfig& cfg);

/// mu = M1 / (min(M2, N2) - L). Throws std::domain_error outside case C.
double tradeoff_slope(const AntennaConfig& cfg);

bool contains(const DofRegion& region, DofPair p, double tol = membership_tol);

/// Euclidean distance from p to the region (0 inside).
double distance_to_region(const DofRegion& region, DofPair p);

/// Every vertex of `inner` lies inside `outer`.
bool is_subset(const DofRegion& inner, const DofRegion& outer, double tol = membership_tol);

bool same_vertices(const DofRegion& a, const DofRegion& b, double tol = membership_tol);

/// Extreme points of {d >= 0} intersected with the half-planes, ordered
/// counterclockwise starting at the origin. Duplicates closer than 1e-9 are
/// merged.
std::vector<DofPair> enumerate_vertices(std::span<const HalfPlane> halfplanes);

/// Points along the closed boundary polyline with spacing at most `step`,
/// starting and ending at the origin.
std::vector<DofPair> sample_boundary(const DofRegion& region, double step);

} // namespace dofregion

#endif // DOFREGION_REGION_HPP
