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

#ifndef DOFREGION_IO_HPP
#define DOFREGION_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dofregion/capacity.hpp"
#include "dofregion/region.hpp"
#include "dofregion/verify.hpp"

namespace dofregion
{

/// Embedded in every output file.
struct Provenance
{
    std::string command;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::string law;
    int coherence_t = 1;
};

/// {config, case, swapped, L, mu, halfplanes, vertices}; mu is null outside
/// case C.
std::string region_json(const DofRegion& exact, const DofRegion& previous, const Provenance& prov);

/// Columns region,d1,d2 sampling both boundaries (exact, previous).
std::string boundary_csv(const DofRegion& exact, const DofRegion& previous, const Provenance& prov,
                         double step = 0.05);

/// Columns gamma_db,quantity,mean_bits,std_err,trials,seed.
std::string sweep_csv(std::span<const SweepRow> rows, const Provenance& prov);
std::string sweep_json(std::span<const SweepRow> rows, const Provenance& prov);

/// Reads rows written by sweep_csv. Lines starting with '#' are skipped.
/// When `seed` is given it receives the seed column of the last row.
/// Throws std::runtime_error on malformed input.
std::vector<SweepRow> parse_sweep_csv(std::istream& in, std::uint64_t* seed = nullptr);

/// Least-squares DoF slope of every quantity in a sweep, in first-seen order.
std::vector<std::pair<std::string, double>> sweep_slopes(std::span<const SweepRow> rows);

std::string slopes_csv(std::span<const std::pair<std::string, double>> slopes, const Provenance& prov);
std::string slopes_json(std::span<const std::pair<std::string, double>> slopes, const Provenance& prov);

std::string achievable_json(std::span<const AchievableRegion> regions, std::span<const double> gammas_db,
                            const Provenance& prov);
/// Columns gamma_db,label,r1,r1_std_err,r2,r2_std_err,on_hull.
std::string achievable_csv(std::span<const AchievableRegion> regions, std::span<const double> gammas_db,
                           const Provenance& prov);

std::string reports_json(std::span<const SuiteReport> reports, const Provenance& prov);
/// Columns suite,description,observed,bound_or_target,margin,pass.
std::string reports_csv(std::span<const SuiteReport> reports, const Provenance& prov);

} // namespace dofregion

#endif // DOFREGION_IO_HPP
