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

#ifndef DOFREGION_VERIFY_HPP
#define DOFREGION_VERIFY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dofregion/capacity.hpp"
#include "dofregion/randmat.hpp"
#include "dofregion/region.hpp"
#include "dofregion/rng.hpp"

namespace dofregion
{

/// One pass/fail assertion. `margin` is the slack already granted, so for an
/// upper-bound check pass means observed <= bound_or_target + margin.
struct Check
{
    std::string description;
    double observed = 0.0;
    double bound_or_target = 0.0;
    double margin = 0.0;
    bool pass = false;
};

struct SuiteReport
{
    std::string suite_name;
    std::vector<Check> checks;
    std::uint64_t seed = 0;
    std::size_t trials = 0;

    bool passed() const noexcept;
    std::size_t failures() const noexcept;

    void expect_le(std::string description, double observed, double bound, double margin);
    void expect_ge(std::string description, double observed, double bound, double margin);
    void expect_near(std::string description, double observed, double target, double margin);
};

/// Discrete inputs never beat Gaussian inputs by more than the C* gap.
/// gamma_grid is linear SNR.
SuiteReport check_theorem2(const RngStream& rng, std::span<const double> gamma_grid, std::size_t trials);

/// Amplitude-change bound with Gaussian inputs over `trials` random
/// diagonal pairs.
SuiteReport check_lemma3(const RngStream& rng, std::size_t trials);

/// Per-dimension conditional MI is non-increasing in the frame width.
SuiteReport check_lemma4(const RngStream& rng, int m, int k1, int k2, int k3, std::size_t trials);

/// QPSK conditional MI is dominated by the Gaussian closed form.
SuiteReport check_lemma5(const RngStream& rng, int m, std::span<const double> gamma_grid, std::size_t trials);

/// Slopes of achievable operating points against the exact region.
/// gamma_grid is linear SNR.
SuiteReport check_region_consistency(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law,
                                     std::span<const double> gamma_grid, std::size_t trials);

/// Per-symbol ergodic MI does not depend on the coherence time.
SuiteReport check_t_invariance(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law,
                               std::span<const int> t_values, std::span<const double> gamma_grid, std::size_t trials);

/// Weighted finite-SNR outer bound at every achievable operating point.
/// Requires a case A or B configuration.
SuiteReport check_finite_snr_weighted_bound(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law,
                                            std::span<const double> gamma_grid, std::size_t trials);

/// Moment-level isotropy of `law` and of the scrambled decomposition.
SuiteReport check_isotropy(const RngStream& rng, const FadingLaw& law, std::size_t trials);

/// I-MMSE identity for Gaussian and BPSK inputs (deterministic).
SuiteReport check_immse();

/// Names accepted by run_suite, excluding "all".
const std::vector<std::string>& suite_names();

/// Runs a named suite (or "all") with default parameters. trials == 0 keeps
/// each suite's default. Throws std::invalid_argument for unknown names.
std::vector<SuiteReport> run_suite(const std::string& name, std::uint64_t seed, std::size_t trials = 0);

} // namespace dofregion

#endif // DOFREGION_VERIFY_HPP
