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

#ifndef DOFREGION_RNG_HPP
#define DOFREGION_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace dofregion
{

/// SplitMix64 finalizer; used to derive independent engine seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// A reproducible random substream identified by (base_seed, stream_id).
/// Two streams with the same identifiers produce identical draws no matter
/// which thread consumes them or in which order.
class RngStream
{
public:
    RngStream(std::uint64_t base_seed, std::uint64_t stream_id)
        : base_seed_(base_seed), stream_id_(stream_id), engine_(mix(base_seed, stream_id))
    {
    }

    std::uint64_t base_seed() const noexcept { return base_seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    /// Child stream, e.g. one per Monte Carlo trial.
    RngStream substream(std::uint64_t child) const
    {
        return {splitmix64(base_seed_ ^ splitmix64(stream_id_ + 0x632BE59BD9B4E019ULL)), child};
    }

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    std::size_t uniform_index(std::size_t n)
    {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
    }
    double normal() { return normal_(engine_); }

    /// Circularly symmetric complex Gaussian with unit variance.
    std::complex<double> cscg()
    {
        constexpr double s = 0.70710678118654752440;
        const double re = normal_(engine_);
        const double im = normal_(engine_);
        return {s * re, s * im};
    }

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    static std::uint64_t mix(std::uint64_t base_seed, std::uint64_t stream_id)
    {
        return splitmix64(splitmix64(base_seed) ^ splitmix64(stream_id ^ 0xD1B54A32D192ED03ULL));
    }

    std::uint64_t base_seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace dofregion

#endif // DOFREGION_RNG_HPP
