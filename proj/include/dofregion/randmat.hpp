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

#ifndef DOFREGION_RANDMAT_HPP
#define DOFREGION_RANDMAT_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "dofregion/cxmat.hpp"
#include "dofregion/region.hpp"
#include "dofregion/rng.hpp"

namespace dofregion
{

ComplexMatrix sample_ginibre(RngStream& rng, std::size_t n, std::size_t m);

/// Haar unitary via QR of a Ginibre matrix with the R diagonal made real and
/// non-negative.
ComplexMatrix sample_haar_unitary(RngStream& rng, std::size_t m);

/// First k columns of a Haar unitary: uniform on {V in C^{m x k}: V^H V = I}.
ComplexMatrix sample_stiefel(RngStream& rng, std::size_t m, std::size_t k);

struct ScrambledSvd
{
    ComplexMatrix w;      // N x K
    ComplexMatrix lambda; // K x K
    ComplexMatrix v;      // M x K, Q * v_unscrambled with Q Haar
    ComplexMatrix v_unscrambled;
};

/// Compact SVD of g followed by rotation of the right factor with a fresh
/// Haar unitary, so that w * lambda * v^H is isotropic and v is independent
/// of (w, lambda).
ScrambledSvd isotropic_scramble(RngStream& rng, const ComplexMatrix& g);

/// Uniform V (m x k) with orthonormal columns that are orthogonal to the
/// columns of v3 (m x k3, orthonormal). k3 == 0 reduces to sample_stiefel.
ComplexMatrix sample_conditioned_stiefel(RngStream& rng, std::size_t m, std::size_t k, const ComplexMatrix& v3);

/// Index of a link in a ChannelDraw: receiver r, transmitter t.
enum class Link
{
    H11 = 0,
    H12 = 1,
    H21 = 2,
    H22 = 3,
};

inline constexpr std::array<Link, 4> all_links{Link::H11, Link::H12, Link::H21, Link::H22};

constexpr int receiver_of(Link l) noexcept { return static_cast<int>(l) / 2 + 1; }
constexpr int transmitter_of(Link l) noexcept { return static_cast<int>(l) % 2 + 1; }
const char* link_name(Link l) noexcept;

/// Receive x transmit dimensions (N_r, M_t) of a link.
std::pair<std::size_t, std::size_t> link_shape(const AntennaConfig& cfg, Link l);

/// Per-link sampler used by ScrambledCustom laws. The result must be
/// rows x cols.
using LinkSampler = std::function<ComplexMatrix(RngStream&, std::size_t rows, std::size_t cols)>;

/// Recipe for one coherence block of all four links.
class FadingLaw
{
public:
    enum class Kind
    {
        Rayleigh,
        FixedSpectrum,
        ScrambledCustom,
    };

    static FadingLaw rayleigh(int coherence_t = 1);

    /// Same singular values for every link. Link with K = min(N, M) uses
    /// values[min(i, size - 1)] for i < K, so a single value broadcasts.
    static FadingLaw fixed_spectrum(std::vector<double> singular_values, int coherence_t = 1);
    /// Singular values per link, indexed by Link.
    static FadingLaw fixed_spectrum(std::array<std::vector<double>, 4> per_link, int coherence_t = 1);

    /// Any full-rank base law made isotropic by isotropic_scramble.
    static FadingLaw scrambled_custom(LinkSampler base, std::string name, int coherence_t = 1);

    /// Parses "rayleigh" or "fixed:<csv of singular values>".
    static FadingLaw parse(const std::string& spec, int coherence_t = 1);

    Kind kind() const noexcept { return kind_; }
    int coherence_t() const noexcept { return coherence_t_; }
    FadingLaw with_coherence_t(int t) const;
    std::string describe() const;

    /// Singular values used for a link of rank k (FixedSpectrum only).
    std::vector<double> spectrum_for(Link l, std::size_t k) const;

    ComplexMatrix sample_link(RngStream& rng, Link l, std::size_t rows, std::size_t cols) const;

private:
    FadingLaw() = default;

    Kind kind_ = Kind::Rayleigh;
    int coherence_t_ = 1;
    std::array<std::vector<double>, 4> spectra_{};
    LinkSampler base_;
    std::string name_ = "rayleigh";
};

/// The four link matrices of one coherence block; h_rt is N_r x M_t.
struct ChannelDraw
{
    ComplexMatrix h11;
    ComplexMatrix h12;
    ComplexMatrix h21;
    ComplexMatrix h22;

    const ComplexMatrix& operator[](Link l) const noexcept;
    ComplexMatrix& operator[](Link l) noexcept;
};

/// Four independent link draws for one coherence block.
ChannelDraw sample_channel(RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law);

/// Replaces every link by block_diag of t copies of itself.
ChannelDraw lift_block(const ChannelDraw& draw, int t);

} // namespace dofregion

#endif // DOFREGION_RANDMAT_HPP
