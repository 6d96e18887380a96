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

#ifndef DOFREGION_CAPACITY_HPP
#define DOFREGION_CAPACITY_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dofregion/cxmat.hpp"
#include "dofregion/randmat.hpp"
#include "dofregion/region.hpp"
#include "dofregion/rng.hpp"

namespace dofregion
{

/// Monte Carlo scalar in bits.
struct Estimate
{
    double mean = 0.0;
    double std_err = 0.0;
    std::size_t trials = 0;
};

/// Sample mean and standard error (sample sigma / sqrt(n)) with a
/// pairwise-summed mean.
Estimate estimate_from(std::span<const double> samples);

inline double combined_std_err(const Estimate& a, const Estimate& b) noexcept
{
    return std::hypot(a.std_err, b.std_err);
}

struct RatePair
{
    double r1 = 0.0;
    double r2 = 0.0;
};

inline double db_to_linear(double db) noexcept
{
    return std::pow(10.0, db / 10.0);
}

/// Additive gap of Gaussian inputs: min(m, n) * log2(1 + m / min(m, n)).
double c_star(int m, int n);

/// Per-link coefficients indexed by Link; a zero weight drops the link.
using LinkWeights = std::array<double, 4>;

/// Weights selecting one link with unit coefficient.
LinkWeights single_link(Link l);

/// Per-symbol E log2 det(I + sum_l w_l (gamma / M_t) H_l H_l^H) over channel
/// draws lifted to the law's coherence time. Trial i uses rng.substream(i).
/// All selected links must share a receiver.
Estimate ergodic_logdet_mi(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law,
                           const LinkWeights& weights, double gamma, std::size_t trials);

/// Same estimator over a grid of SNRs with common random numbers.
std::vector<Estimate> ergodic_logdet_curve(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law,
                                           const LinkWeights& weights, std::span<const double> gammas,
                                           std::size_t trials);

/// Gaussian-input multiple-access pentagon at one receiver.
struct MacPentagon
{
    int receiver = 1;
    double gamma = 0.0;
    Estimate r1;  // E log det(I + g/M1 H_r1 H_r1^H)
    Estimate r2;  // E log det(I + g/M2 H_r2 H_r2^H)
    Estimate sum; // E log det(I + both)

    std::vector<HalfPlane> halfplanes() const;
};

MacPentagon mac_region_at_snr(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law, int receiver,
                              double gamma, std::size_t trials);

/// A labelled operating point; labels are stable across SNRs so that
/// trajectories can be turned into DoF slopes.
struct OperatingPoint
{
    std::string label;
    Estimate r1;
    Estimate r2;

    RatePair rates() const noexcept { return {r1.mean, r2.mean}; }
};

struct AchievableRegion
{
    double gamma = 0.0;
    MacPentagon mac1;
    MacPentagon mac2;
    std::vector<OperatingPoint> points; // origin, single1, single2, mac_user1_first, mac_user2_first
    std::vector<RatePair> hull;         // counterclockwise from the origin

    const OperatingPoint& point(const std::string& label) const;
};

/// Time sharing between single-user operation and the corners of the
/// intersection of the two multiple-access pentagons (common messages only).
AchievableRegion achievable_region_at_snr(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law,
                                          double gamma, std::size_t trials);

/// Convex hull (counterclockwise, starting at the lowest-then-leftmost point).
std::vector<RatePair> convex_hull(std::vector<RatePair> pts);

/// Least-squares slope of rate against log2(1 + gamma).
double dof_slope(std::span<const std::pair<double, double>> gamma_rate);

/// Draws the conditioning pair (A, B); B may have zero rows.
using StackedSampler = std::function<std::pair<ComplexMatrix, ComplexMatrix>(RngStream&)>;

/// One-draw value of the closed form below for fixed (A, B).
double conditional_gaussian_mi_draw(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& sigma1,
                                    const ComplexMatrix& sigma2, double gamma, int m);

/// Closed-form Gaussian-input conditional MI I(Y; X | Z, A, B) averaged over
/// (A, B): E log det(diag(S1, S2) + g/M [A; B][A; B]^H)
///       - E log det(S2 + g/M B B^H) - log det S1.
Estimate conditional_gaussian_mi(const RngStream& rng, const StackedSampler& sampler, const ComplexMatrix& sigma1,
                                 const ComplexMatrix& sigma2, double gamma, int m, std::size_t trials);

/// Sampled log-likelihood-ratio estimate of the same quantity for input
/// X ~ CN(0, g/M I): draws (x, noise) and averages
/// log p(y | x) - log p(y | z) using the Schur-complement posterior of Y given Z.
Estimate conditional_gaussian_mi_sampled(const RngStream& rng, const StackedSampler& sampler,
                                         const ComplexMatrix& sigma1, const ComplexMatrix& sigma2, double gamma, int m,
                                         std::size_t trials);

/// Finite constellation with unit average energy.
class Constellation
{
public:
    explicit Constellation(std::vector<Complex> points, std::string name = "custom");

    static Constellation bpsk();
    static Constellation qpsk();
    static Constellation qam16();

    std::span<const Complex> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::string& name() const noexcept { return name_; }

private:
    std::vector<Complex> points_;
    std::string name_;
};

inline constexpr std::size_t max_constellation_size = 16;
inline constexpr std::size_t max_input_dimension = 2;

using ChannelSampler = std::function<ComplexMatrix(RngStream&)>;

/// I(Y; X | H) for X uniform on the product constellation scaled to total
/// power gamma, Y = H X + u with white unit-variance noise.
Estimate discrete_input_mi(const RngStream& rng, const ChannelSampler& sampler, const Constellation& constellation,
                           double gamma, std::size_t trials);

/// I(Y; X | Z, A, B) = I(Y, Z; X | A, B) - I(Z; X | B) for Y = A X + n1,
/// Z = B X + n2, estimated from paired samples.
Estimate discrete_conditional_mi(const RngStream& rng, const StackedSampler& sampler,
                                 const Constellation& constellation, double gamma, std::size_t trials);

/// I(X; Y) in bits of BPSK on a complex AWGN channel at SNR gamma, by
/// quadrature.
double bpsk_awgn_mi(double gamma);

struct ImmsePair
{
    double mi_direct = 0.0;     // nats
    double mi_integrated = 0.0; // nats
};

/// Scalar Gaussian input of variance rho: ln(1 + t rho) against the integral
/// of rho / (1 + tau rho) over [0, t].
ImmsePair immse_check(double rho, double t);

/// BPSK input of energy rho on a complex AWGN channel: mutual information
/// against the integral of its MMSE curve.
ImmsePair immse_check_bpsk(double rho, double t);

struct GapConstants
{
    double c_star = 0.0;
    Estimate delta1;
    Estimate delta2;
    Estimate delta3;
    Estimate delta_total; // C* + delta1 + min(M2,N1)/min(M2,N2) * delta2
};

/// Monte Carlo estimates of the amplitude-change penalties from the singular
/// values of the cross link H12 and the direct link H22 (normalized
/// orientation).
GapConstants gap_constants(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law, std::size_t trials);

/// One row of an SNR sweep.
struct SweepRow
{
    double gamma_db = 0.0;
    std::string quantity;
    Estimate value;
};

/// Quantities single1, single2, mac1_r1, mac1_r2, mac1_sum, mac2_r1,
/// mac2_r2, mac2_sum for every grid point, from common random numbers.
std::vector<SweepRow> sweep(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law,
                            std::span<const double> gammas_db, std::size_t trials);

} // namespace dofregion

#endif // DOFREGION_CAPACITY_HPP
