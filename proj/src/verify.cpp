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

#include "dofregion/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "dofregion/parallel.hpp"

namespace dofregion
{

bool SuiteReport::passed() const noexcept
{
    return failures() == 0;
}

std::size_t SuiteReport::failures() const noexcept
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

void SuiteReport::expect_le(std::string description, double observed, double bound, double margin)
{
    checks.push_back({std::move(description), observed, bound, margin, observed <= bound + margin});
}

void SuiteReport::expect_ge(std::string description, double observed, double bound, double margin)
{
    checks.push_back({std::move(description), observed, bound, margin, observed >= bound - margin});
}

void SuiteReport::expect_near(std::string description, double observed, double target, double margin)
{
    checks.push_back({std::move(description), observed, target, margin, std::abs(observed - target) <= margin});
}

namespace
{

constexpr double slope_tol = 0.1;

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

SuiteReport new_report(std::string name, const RngStream& rng, std::size_t trials)
{
    SuiteReport r;
    r.suite_name = std::move(name);
    r.seed = rng.base_seed();
    r.trials = trials;
    return r;
}

double three_se(const Estimate& e)
{
    return 3.0 * e.std_err;
}

double three_se(const Estimate& a, const Estimate& b)
{
    return 3.0 * combined_std_err(a, b);
}

ComplexMatrix random_matrix(RngStream& s, std::size_t n, std::size_t m)
{
    return sample_ginibre(s, n, m);
}

// Fixed Hermitian positive definite matrix, well conditioned.
ComplexMatrix random_hpd(RngStream& s, std::size_t n)
{
    const ComplexMatrix g = sample_ginibre(s, n, n);
    ComplexMatrix h = gram_rows(g);
    h += ComplexMatrix::identity(n);
    return h;
}

double log_uniform(RngStream& s, double lo, double hi)
{
    return std::exp(s.uniform(std::log(lo), std::log(hi)));
}

// Gaussian-input MI of y = diag(lam) x + u, x ~ CN(0, rho I), u ~ CN(0, noise).
double diagonal_gaussian_mi(const std::vector<double>& lam, double rho, const ComplexMatrix& noise)
{
    const ComplexMatrix d = ComplexMatrix::diagonal(lam);
    ComplexMatrix signal = gram_rows(d);
    signal *= rho;
    return logdet_hpd(noise + signal) - logdet_hpd(noise);
}

// Hermitian square root U diag(sqrt(rho)) U^H.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& u, const std::vector<double>& rho)
{
    std::vector<double> r(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i)
        r[i] = std::sqrt(rho[i]);
    return u * ComplexMatrix::diagonal(r) * u.adjoint();
}

ComplexMatrix dft_matrix(std::size_t n)
{
    ComplexMatrix f(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            f(j, k) = std::polar(scale, -2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(n));
    return f;
}

// I - 2 w w^H / (w^H w) for a fixed complex w.
ComplexMatrix householder(std::size_t n)
{
    ComplexMatrix w(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        w(i, 0) = Complex(1.0 + static_cast<double>(i), 0.5 - static_cast<double>(i));
    ComplexMatrix p = w * w.adjoint();
    p *= -2.0 / frobenius_norm_sq(w);
    return ComplexMatrix::identity(n) + p;
}

Complex trace(const ComplexMatrix& a)
{
    Complex t{};
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
        t += a(i, i);
    return t;
}

std::vector<std::pair<double, double>> trajectory(std::span<const double> gammas, const std::vector<double>& rates)
{
    std::vector<std::pair<double, double>> out;
    for (std::size_t k = 0; k < gammas.size(); ++k)
        out.emplace_back(gammas[k], rates[k]);
    return out;
}

DofPair slope_pair(std::span<const double> gammas, const std::vector<AchievableRegion>& regions, const std::string& label)
{
    std::vector<double> r1;
    std::vector<double> r2;
    for (const auto& ar : regions)
    {
        r1.push_back(ar.point(label).r1.mean);
        r2.push_back(ar.point(label).r2.mean);
    }
    return {dof_slope(trajectory(gammas, r1)), dof_slope(trajectory(gammas, r2))};
}

std::string pair_str(DofPair p)
{
    return "(" + fmt(p.d1) + ", " + fmt(p.d2) + ")";
}

} // namespace

// ---------------------------------------------------------------------------

SuiteReport check_theorem2(const RngStream& rng, std::span<const double> gamma_grid, std::size_t trials)
{
    SuiteReport rep = new_report("theorem2", rng, trials);
    const Constellation bpsk = Constellation::bpsk();
    const Constellation qpsk = Constellation::qpsk();
    const ChannelSampler unit = [](RngStream&) { return ComplexMatrix{{Complex(1.0)}}; };
    const ComplexMatrix h_fixed{{Complex(1.0), Complex(0.0, 0.5)}, {Complex(0.25), Complex(0.8, -0.1)}};
    const ChannelSampler fixed = [&](RngStream&) { return h_fixed; };
    const ChannelSampler rayleigh = [](RngStream& s) { return sample_ginibre(s, 2, 2); };
    const StackedSampler rayleigh_stacked = [](RngStream& s) {
        return std::pair{sample_ginibre(s, 2, 2), ComplexMatrix(0, 2)};
    };
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const ComplexMatrix none(0, 0);

    for (std::size_t k = 0; k < gamma_grid.size(); ++k)
    {
        const double g = gamma_grid[k];
        const std::string at = " at gamma=" + fmt(g);

        const double quad = bpsk_awgn_mi(g);
        rep.expect_le("scalar BPSK (quadrature) <= log2(1+gamma) + C*(1,1)" + at, quad, std::log2(1.0 + g) + c_star(1, 1),
                      0.0);
        const Estimate mc = discrete_input_mi(rng.substream(10 * k + 1), unit, bpsk, g, trials);
        // Quadrature is accurate to ~1e-9, far below any Monte Carlo error
        // except when BPSK saturates and every sample equals one bit.
        rep.expect_near("scalar BPSK Monte Carlo agrees with quadrature" + at, mc.mean, quad, three_se(mc) + 1e-8);

        const Estimate det = discrete_input_mi(rng.substream(10 * k + 2), fixed, qpsk, g, trials);
        ComplexMatrix snr = gram_rows(h_fixed);
        snr *= g / 2.0;
        const double gauss_det = logdet_hpd(i2 + snr);
        rep.expect_le("2x2 fixed channel, QPSK <= Gaussian + C*(2,2)" + at, det.mean, gauss_det + c_star(2, 2),
                      three_se(det));
        rep.expect_le("2x2 fixed channel, QPSK <= 4 bits" + at, det.mean, 4.0, three_se(det));

        const RngStream rs = rng.substream(10 * k + 3);
        const Estimate ray = discrete_input_mi(rs, rayleigh, qpsk, g, trials);
        const Estimate ray_gauss = conditional_gaussian_mi(rs, rayleigh_stacked, i2, none, g, 2, trials);
        rep.expect_le("2x2 Rayleigh, QPSK <= Gaussian + C*(2,2)" + at, ray.mean, ray_gauss.mean + c_star(2, 2),
                      three_se(ray, ray_gauss));
    }
    return rep;
}

SuiteReport check_lemma3(const RngStream& rng, std::size_t trials)
{
    SuiteReport rep = new_report("lemma3", rng, trials);
    if (trials < 2)
        throw std::invalid_argument("check_lemma3: need at least two draws");

    // Deterministic endpoints.
    {
        const ComplexMatrix i2 = ComplexMatrix::identity(2);
        const double same = diagonal_gaussian_mi({1.5, 0.7}, 3.0, i2) - diagonal_gaussian_mi({1.5, 0.7}, 3.0, i2);
        rep.expect_near("identical amplitudes give zero difference", same, 0.0, 1e-12);
        double worst = 0.0;
        for (double rho : {0.01, 1.0, 100.0, 1e6})
            worst = std::max(worst, diagonal_gaussian_mi({2.0, 2.0}, rho, i2) - diagonal_gaussian_mi({1.0, 1.0}, rho, i2));
        rep.expect_le("Lambda1 = I, Lambda2 = 2I: difference <= 2 log2 det(2I) = 4", worst, 4.0, 1e-12);
    }

    struct Draw
    {
        double diff;
        double bound;
        double looser;
    };
    const auto draws = map_trials(trials, [&](std::size_t i) {
        RngStream s = rng.substream(i);
        const auto m = 1 + s.uniform_index(3);
        std::vector<double> l1(m);
        std::vector<double> l2(m);
        std::vector<double> lmin(m);
        for (std::size_t j = 0; j < m; ++j)
        {
            l1[j] = log_uniform(s, 0.1, 10.0);
            l2[j] = log_uniform(s, 0.1, 10.0);
            lmin[j] = std::min(l1[j], l2[j]);
        }
        const double rho = log_uniform(s, 0.01, 1e4);
        const ComplexMatrix noise = random_hpd(s, m);
        const double diff = diagonal_gaussian_mi(l2, rho, noise) - diagonal_gaussian_mi(l1, rho, noise);
        double log_ratio = 0.0;
        double log_det2 = 0.0;
        double log_det_min = 0.0;
        for (std::size_t j = 0; j < m; ++j)
        {
            log_ratio += std::log2(l2[j] / lmin[j]);
            log_det2 += std::log2(l2[j]);
            log_det_min += std::log2(lmin[j]);
        }
        return Draw{diff, 2.0 * log_ratio, 2.0 * std::max(0.0, log_det2) + 2.0 * std::max(0.0, -log_det_min)};
    });

    std::size_t violations = 0;
    std::size_t looser_violations = 0;
    std::vector<double> diffs;
    std::vector<double> bounds;
    std::vector<double> loosers;
    for (const auto& d : draws)
    {
        violations += d.diff > d.bound + 1e-9 ? 1 : 0;
        looser_violations += d.bound > d.looser + 1e-9 ? 1 : 0;
        diffs.push_back(d.diff);
        bounds.push_back(d.bound);
        loosers.push_back(d.looser);
    }
    rep.expect_le("per-draw violations of diff <= 2 log2(det L2 / det Lmin)", static_cast<double>(violations), 0.0, 0.0);
    rep.expect_le("per-draw violations of the log+ relaxation", static_cast<double>(looser_violations), 0.0, 0.0);

    const Estimate diff = estimate_from(diffs);
    const Estimate bound = estimate_from(bounds);
    const Estimate looser = estimate_from(loosers);
    rep.expect_le("E diff <= 2 E log2(det L2 / det Lmin)", diff.mean, bound.mean, three_se(diff, bound));
    rep.expect_le("E diff <= 2 E log+ det L2 + 2 E log+ 1/det Lmin", diff.mean, looser.mean, three_se(diff, looser));
    return rep;
}

SuiteReport check_lemma4(const RngStream& rng, int m, int k1, int k2, int k3, std::size_t trials)
{
    if (k1 < 1 || k3 < 0 || k1 > k2 || k2 > m - k3)
        throw std::invalid_argument("check_lemma4: need 1 <= k1 <= k2 <= m - k3");
    SuiteReport rep = new_report("lemma4", rng, trials);
    const auto um = static_cast<std::size_t>(m);
    const std::string tag = " (m=" + std::to_string(m) + ", k1=" + std::to_string(k1) + ", k2=" + std::to_string(k2) +
                            ", k3=" + std::to_string(k3) + ")";

    // A non-white input so that the frames actually matter.
    RngStream setup = rng.substream(0);
    const ComplexMatrix u = sample_haar_unitary(setup, um);
    std::vector<double> shape(um);
    for (std::size_t i = 0; i < um; ++i)
        shape[i] = std::pow(4.0, 1.0 - static_cast<double>(i));

    const ComplexMatrix i1 = ComplexMatrix::identity(static_cast<std::size_t>(k1));
    const ComplexMatrix i2 = ComplexMatrix::identity(static_cast<std::size_t>(k2));
    const ComplexMatrix i3 = ComplexMatrix::identity(static_cast<std::size_t>(k3));

    int level_index = 0;
    for (double level : {0.3, 3.0, 30.0})
    {
        std::vector<double> rho(um);
        for (std::size_t i = 0; i < um; ++i)
            rho[i] = level * shape[i];
        const ComplexMatrix root = hermitian_sqrt(u, rho);
        const RngStream trial_rng = rng.substream(static_cast<std::uint64_t>(1 + level_index));

        struct Pair
        {
            double diff;
            double same;
        };
        const auto rows = map_trials(trials, [&](std::size_t i) {
            RngStream s = trial_rng.substream(i);
            const ComplexMatrix v3 = k3 > 0 ? sample_stiefel(s, um, static_cast<std::size_t>(k3)) : ComplexMatrix(um, 0);
            const ComplexMatrix v1 = sample_conditioned_stiefel(s, um, static_cast<std::size_t>(k1), v3);
            const ComplexMatrix v2 = sample_conditioned_stiefel(s, um, static_cast<std::size_t>(k2), v3);
            const ComplexMatrix v1b = sample_conditioned_stiefel(s, um, static_cast<std::size_t>(k1), v3);
            const ComplexMatrix b = v3.adjoint() * root;
            // Unit scaling: gamma / m = 1 so the input covariance is root^2.
            const double mi1 = conditional_gaussian_mi_draw(v1.adjoint() * root, b, i1, i3, m, m);
            const double mi2 = conditional_gaussian_mi_draw(v2.adjoint() * root, b, i2, i3, m, m);
            const double mi1b = conditional_gaussian_mi_draw(v1b.adjoint() * root, b, i1, i3, m, m);
            return Pair{mi1 / k1 - mi2 / k2, (mi1 - mi1b) / k1};
        });
        std::vector<double> diffs;
        std::vector<double> sames;
        for (const auto& r : rows)
        {
            diffs.push_back(r.diff);
            sames.push_back(r.same);
        }
        const Estimate d = estimate_from(diffs);
        rep.expect_ge("I1/k1 - I2/k2 >= 0 at input level " + fmt(level) + tag, d.mean, 0.0, three_se(d));
        if (level_index == 0)
        {
            const Estimate e = estimate_from(sames);
            rep.expect_near("two independent k1-frames give equal per-dimension MI" + tag, e.mean, 0.0, three_se(e));
        }
        ++level_index;
    }
    return rep;
}

SuiteReport check_lemma5(const RngStream& rng, int m, std::span<const double> gamma_grid, std::size_t trials)
{
    if (m < 1 || m > static_cast<int>(max_input_dimension))
        throw std::invalid_argument("check_lemma5: m must be 1 or 2");
    SuiteReport rep = new_report("lemma5", rng, trials);
    const auto um = static_cast<std::size_t>(m);
    const std::size_t rows_a = um;
    const std::size_t rows_b = 1;
    const std::string tag = " (m=" + std::to_string(m) + ")";

    // [A; B] = S diag(a) Q^H with S uniform on the Stiefel manifold, random
    // amplitudes a and Haar Q: isotropic by construction.
    const StackedSampler sampler = [=](RngStream& s) {
        const ComplexMatrix frame = sample_stiefel(s, rows_a + rows_b, um);
        std::vector<double> amp(um);
        for (auto& a : amp)
            a = log_uniform(s, 0.5, 2.0);
        const ComplexMatrix q = sample_haar_unitary(s, um);
        const ComplexMatrix stacked = frame * ComplexMatrix::diagonal(amp) * q.adjoint();
        return std::pair{stacked.rows_range(0, rows_a), stacked.rows_range(rows_a, rows_b)};
    };
    const ComplexMatrix s1 = ComplexMatrix::identity(rows_a);
    const ComplexMatrix s2 = ComplexMatrix::identity(rows_b);
    const Constellation qpsk = Constellation::qpsk();

    for (std::size_t k = 0; k < gamma_grid.size(); ++k)
    {
        const double g = gamma_grid[k];
        const std::string at = " at gamma=" + fmt(g) + tag;
        const RngStream rs = rng.substream(k);
        const Estimate disc = discrete_conditional_mi(rs, sampler, qpsk, g, trials);
        const Estimate gauss = conditional_gaussian_mi(rs, sampler, s1, s2, g, m, trials);
        rep.expect_le("QPSK conditional MI <= Gaussian closed form" + at, disc.mean, gauss.mean, three_se(disc, gauss));
        const Estimate sampled = conditional_gaussian_mi_sampled(rs, sampler, s1, s2, g, m, trials);
        rep.expect_near("sampled Gaussian conditional MI matches closed form" + at, sampled.mean, gauss.mean,
                        three_se(sampled, gauss));
    }

    const double tiny = 1e-9;
    const RngStream rs = rng.substream(gamma_grid.size());
    const std::size_t few = std::min<std::size_t>(trials, 200);
    const Estimate small = discrete_conditional_mi(rs, sampler, qpsk, tiny, few);
    rep.expect_near("QPSK conditional MI vanishes as gamma -> 0" + tag, small.mean, 0.0, three_se(small) + 1e-6);
    rep.expect_near("Gaussian closed form vanishes as gamma -> 0" + tag,
                    conditional_gaussian_mi(rs, sampler, s1, s2, tiny, m, few).mean, 0.0, 1e-6);
    return rep;
}

SuiteReport check_region_consistency(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law,
                                     std::span<const double> gamma_grid, std::size_t trials)
{
    SuiteReport rep = new_report("region:" + cfg.to_string(), rng, trials);
    const DofRegion exact = compute_region(cfg);
    std::vector<AchievableRegion> regions;
    for (double g : gamma_grid)
        regions.push_back(achievable_region_at_snr(rng, cfg, law, g, trials));

    std::vector<DofPair> slopes;
    for (const auto& p : regions.front().points)
    {
        const DofPair s = slope_pair(gamma_grid, regions, p.label);
        slopes.push_back(s);
        rep.expect_le("slope pair of " + p.label + " " + pair_str(s) + " lies in the exact region",
                      distance_to_region(exact, s), 0.0, slope_tol);
    }

    for (const DofPair v : exact.vertices)
    {
        double best = std::numeric_limits<double>::infinity();
        for (const DofPair s : slopes)
            best = std::min(best, std::hypot(s.d1 - v.d1, s.d2 - v.d2));
        rep.expect_le("vertex " + pair_str(v) + " reached by an achievable slope pair", best, 0.0, slope_tol);
    }

    // Time sharing between the two single-user points.
    const DofPair s1 = slope_pair(gamma_grid, regions, "single1");
    const DofPair s2 = slope_pair(gamma_grid, regions, "single2");
    const DofPair mid{0.5 * (s1.d1 + s2.d1), 0.5 * (s1.d2 + s2.d2)};
    const DofPair mid_target{0.5 * std::min(cfg.m1, cfg.n1), 0.5 * std::min(cfg.m2, cfg.n2)};
    rep.expect_le("time-sharing midpoint " + pair_str(mid) + " near " + pair_str(mid_target),
                  std::hypot(mid.d1 - mid_target.d1, mid.d2 - mid_target.d2), 0.0, slope_tol);

    if (exact.case_label == RegionCase::C)
    {
        const DofRegion old = previous_outer_bound(cfg);
        double farthest = 0.0;
        for (const DofPair v : old.vertices)
            farthest = std::max(farthest, distance_to_region(exact, v));
        rep.checks.push_back({"previous outer bound has a vertex outside the exact region", farthest, 0.0,
                              membership_tol, farthest > membership_tol});
    }
    return rep;
}

SuiteReport check_t_invariance(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law,
                               std::span<const int> t_values, std::span<const double> gamma_grid, std::size_t trials)
{
    for (int t : t_values)
        if (t != 1 && t != 2 && t != 4)
            throw std::invalid_argument("check_t_invariance: coherence times must be 1, 2 or 4");
    SuiteReport rep = new_report("t_invariance:" + cfg.to_string(), rng, trials);

    struct Quantity
    {
        const char* name;
        LinkWeights weights;
        bool statistical;
    };
    const Quantity quantities[] = {
        {"single-user h11", single_link(Link::H11), true},
        {"single-user h22", single_link(Link::H22), false},
        {"receiver 1 MAC sum", {1.0, 1.0, 0.0, 0.0}, true},
        {"receiver 2 MAC sum", {0.0, 0.0, 1.0, 1.0}, false},
    };
    const FadingLaw base = law.with_coherence_t(1);
    const RngStream shared = rng.substream(0);

    for (std::size_t q = 0; q < std::size(quantities); ++q)
    {
        const Quantity& qt = quantities[q];
        const auto ref_same = ergodic_logdet_curve(shared, cfg, base, qt.weights, gamma_grid, trials);
        const auto ref_indep = ergodic_logdet_curve(rng.substream(1 + 10 * q), cfg, base, qt.weights, gamma_grid, trials);
        for (int t : t_values)
        {
            const FadingLaw lifted = law.with_coherence_t(t);
            const auto same = ergodic_logdet_curve(shared, cfg, lifted, qt.weights, gamma_grid, trials);
            for (std::size_t k = 0; k < gamma_grid.size(); ++k)
            {
                const std::string at = std::string(qt.name) + ", T=" + std::to_string(t) + ", gamma=" + fmt(gamma_grid[k]);
                rep.expect_near("per-symbol MI on common draws equals T=1: " + at, same[k].mean, ref_same[k].mean,
                                1e-9 * (1.0 + std::abs(ref_same[k].mean)));
            }
            if (!qt.statistical || t == 1)
                continue;
            const auto indep =
                ergodic_logdet_curve(rng.substream(1 + 10 * q + static_cast<std::size_t>(t)), cfg, lifted, qt.weights,
                                     gamma_grid, trials);
            for (std::size_t k = 0; k < gamma_grid.size(); ++k)
            {
                const std::string at = std::string(qt.name) + ", T=" + std::to_string(t) + ", gamma=" + fmt(gamma_grid[k]);
                rep.expect_near("per-symbol MI on fresh draws agrees with T=1: " + at, indep[k].mean, ref_indep[k].mean,
                                three_se(indep[k], ref_indep[k]));
            }
        }
    }
    return rep;
}

SuiteReport check_finite_snr_weighted_bound(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law,
                                            std::span<const double> gamma_grid, std::size_t trials)
{
    const CaseInfo info = classify_case(cfg);
    if (info.label == RegionCase::C)
        throw std::invalid_argument("check_finite_snr_weighted_bound: configuration " + cfg.to_string() +
                                    " is case C; the weighted bound applies to cases A and B");
    const AntennaConfig c = normalized(cfg);
    SuiteReport rep = new_report("weighted_bound:" + cfg.to_string() + ":" + law.describe(), rng, trials);
    const double coef = static_cast<double>(std::min(c.m2, c.n1)) / std::min(c.m2, c.n2);
    const GapConstants gap = gap_constants(rng.substream(0), c, law, trials);
    rep.expect_ge("gap constants are non-negative", std::min({gap.delta1.mean, gap.delta2.mean, gap.delta3.mean}), 0.0,
                  0.0);

    for (std::size_t k = 0; k < gamma_grid.size(); ++k)
    {
        const double g = gamma_grid[k];
        const AchievableRegion ar = achievable_region_at_snr(rng.substream(1 + k), c, law, g, trials);
        for (const auto& p : ar.points)
        {
            const double lhs = p.r1.mean + coef * p.r2.mean - gap.delta_total.mean;
            const double se = std::sqrt(p.r1.std_err * p.r1.std_err + coef * coef * p.r2.std_err * p.r2.std_err +
                                        gap.delta_total.std_err * gap.delta_total.std_err +
                                        ar.mac1.sum.std_err * ar.mac1.sum.std_err);
            rep.expect_le("R1 + " + fmt(coef) + " R2 - Delta <= receiver 1 MAC sum at " + p.label + ", gamma=" + fmt(g),
                          lhs, ar.mac1.sum.mean, 3.0 * se);
        }
    }
    return rep;
}

SuiteReport check_isotropy(const RngStream& rng, const FadingLaw& law, std::size_t trials)
{
    SuiteReport rep = new_report("isotropy:" + law.describe(), rng, trials);
    constexpr std::size_t n = 2;
    constexpr std::size_t m = 2;

    RngStream setup = rng.substream(0);
    const ComplexMatrix f = random_matrix(setup, m, n);
    const ComplexMatrix g = random_hpd(setup, m);
    auto functionals = [&](const ComplexMatrix& h) {
        const Complex tf = trace(f * h);
        return std::array<double, 3>{tf.real(), std::norm(tf), trace(g * (h.adjoint() * h)).real()};
    };
    static constexpr const char* names[] = {"Re tr(F H)", "|tr(F H)|^2", "Re tr(G H^H H)"};

    auto draw = [&](RngStream& s) { return law.sample_link(s, Link::H11, n, m); };

    // Right rotation by fixed unitaries, as paired differences.
    const std::pair<const char*, ComplexMatrix> rotations[] = {
        {"identity", ComplexMatrix::identity(m)}, {"DFT", dft_matrix(m)}, {"Householder", householder(m)}};
    for (std::size_t r = 0; r < std::size(rotations); ++r)
    {
        const auto& [qname, q] = rotations[r];
        const RngStream rs = rng.substream(1 + r);
        const auto rows = map_trials(trials, [&](std::size_t i) {
            RngStream s = rs.substream(i);
            const ComplexMatrix h = draw(s);
            const auto a = functionals(h * q);
            const auto b = functionals(h);
            return std::array<double, 3>{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
        });
        for (std::size_t j = 0; j < 3; ++j)
        {
            std::vector<double> xs(rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                xs[i] = rows[i][j];
            const Estimate e = estimate_from(xs);
            if (r == 0)
            {
                // Q = I: the difference is identically zero.
                if (j == 0)
                    rep.expect_near("H Q equals H for Q = identity", e.mean, 0.0, 0.0);
                continue;
            }
            rep.expect_near(std::string(names[j]) + " of H Q matches H, Q = " + qname, e.mean, 0.0, three_se(e));
        }
    }

    // Scrambled decomposition W Lambda (Q V)^H against fresh draws.
    {
        const RngStream rs = rng.substream(10);
        const auto rows = map_trials(trials, [&](std::size_t i) {
            RngStream s = rs.substream(i);
            const ScrambledSvd sc = isotropic_scramble(s, draw(s));
            RngStream fresh = s.substream(1);
            const auto a = functionals(sc.w * sc.lambda * sc.v.adjoint());
            const auto b = functionals(draw(fresh));
            return std::array<double, 6>{a[0], a[1], a[2], b[0], b[1], b[2]};
        });
        for (std::size_t j = 0; j < 3; ++j)
        {
            std::vector<double> xs(rows.size());
            std::vector<double> ys(rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
            {
                xs[i] = rows[i][j];
                ys[i] = rows[i][j + 3];
            }
            const Estimate a = estimate_from(xs);
            const Estimate b = estimate_from(ys);
            rep.expect_near(std::string(names[j]) + " of the scrambled decomposition matches fresh draws", a.mean, b.mean,
                            three_se(a, b));
        }
    }

    // E[V V^H] = (K / M) I for Stiefel frames.
    const std::pair<std::size_t, std::size_t> frames[] = {{2, 1}, {3, 2}};
    for (std::size_t fi = 0; fi < std::size(frames); ++fi)
    {
        const auto [mm, kk] = frames[fi];
        RngStream gs = rng.substream(20 + fi);
        const ComplexMatrix gm = random_hpd(gs, mm);
        const RngStream rs = rng.substream(30 + fi);
        const auto rows = map_trials(trials, [&](std::size_t i) {
            RngStream s = rs.substream(i);
            const ComplexMatrix v = sample_stiefel(s, mm, kk);
            const ComplexMatrix p = v * v.adjoint();
            return std::array<double, 2>{trace(gm * p).real(), p(0, 0).real()};
        });
        std::vector<double> xs(rows.size());
        std::vector<double> ys(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            xs[i] = rows[i][0];
            ys[i] = rows[i][1];
        }
        const double ratio = static_cast<double>(kk) / static_cast<double>(mm);
        const Estimate a = estimate_from(xs);
        const Estimate b = estimate_from(ys);
        const std::string tag = " (M=" + std::to_string(mm) + ", K=" + std::to_string(kk) + ")";
        rep.expect_near("E Re tr(G V V^H) = (K/M) tr G" + tag, a.mean, ratio * trace(gm).real(), three_se(a));
        rep.expect_near("E (V V^H)_11 = K/M" + tag, b.mean, ratio, three_se(b));
    }
    {
        RngStream s = rng.substream(40);
        const ComplexMatrix v = sample_stiefel(s, 3, 3);
        rep.expect_near("K = M: V V^H = I", max_abs_diff(v * v.adjoint(), ComplexMatrix::identity(3)), 0.0, 1e-10);
    }
    return rep;
}

SuiteReport check_immse()
{
    SuiteReport rep;
    rep.suite_name = "immse";
    for (double rho : {0.5, 1.0, 2.0})
        for (double t : {0.5, 1.0, 3.0})
        {
            const std::string at = " (rho=" + fmt(rho) + ", t=" + fmt(t) + ")";
            const ImmsePair gp = immse_check(rho, t);
            rep.expect_near("Gaussian input: ln(1 + t rho) equals the integrated MMSE" + at, gp.mi_integrated,
                            gp.mi_direct, 1e-6);
            const ImmsePair bp = immse_check_bpsk(rho, t);
            rep.expect_near("BPSK input: MI equals the integrated MMSE" + at, bp.mi_integrated, bp.mi_direct, 1e-4);
        }
    return rep;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"theorem2", "lemma3",         "lemma4",   "lemma5", "region",
                                                "t_invariance", "weighted_bound", "isotropy", "immse"};
    return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, std::uint64_t seed, std::size_t trials)
{
    const auto& names = suite_names();
    if (name == "all")
    {
        std::vector<SuiteReport> all;
        for (const auto& n : names)
        {
            auto part = run_suite(n, seed, trials);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
        throw std::invalid_argument("unknown suite '" + name + "'");
    const RngStream rng(seed, static_cast<std::uint64_t>(it - names.begin()) + 1);
    auto pick = [&](std::size_t fallback) { return trials == 0 ? fallback : trials; };

    const double snr_db[] = {30.0, 35.0, 40.0};
    std::vector<double> high;
    for (double db : snr_db)
        high.push_back(db_to_linear(db));

    if (name == "theorem2")
    {
        const double grid[] = {0.1, 1.0, 10.0, 100.0};
        return {check_theorem2(rng, grid, pick(20000))};
    }
    if (name == "lemma3")
        return {check_lemma3(rng, pick(1000))};
    if (name == "lemma4")
        return {check_lemma4(rng.substream(0), 3, 1, 2, 0, pick(10000)),
                check_lemma4(rng.substream(1), 4, 1, 2, 1, pick(10000))};
    if (name == "lemma5")
    {
        const double grid[] = {1.0, 10.0};
        return {check_lemma5(rng.substream(0), 1, grid, pick(5000)), check_lemma5(rng.substream(1), 2, grid, pick(5000))};
    }
    if (name == "region")
    {
        std::vector<SuiteReport> out;
        std::uint64_t k = 0;
        for (const AntennaConfig cfg : {AntennaConfig{1, 2, 3, 4}, AntennaConfig{2, 3, 1, 3}, AntennaConfig{2, 2, 3, 4}})
            out.push_back(check_region_consistency(rng.substream(k++), cfg, FadingLaw::rayleigh(), high, pick(10000)));
        return out;
    }
    if (name == "t_invariance")
    {
        const int ts[] = {1, 2, 4};
        const double grid[] = {10.0, 100.0};
        return {check_t_invariance(rng, AntennaConfig{1, 2, 3, 4}, FadingLaw::rayleigh(), ts, grid, pick(10000))};
    }
    if (name == "weighted_bound")
    {
        const double grid[] = {1.0, 10.0, 100.0};
        return {check_finite_snr_weighted_bound(rng.substream(0), AntennaConfig{2, 3, 1, 3}, FadingLaw::rayleigh(), grid,
                                                pick(10000)),
                check_finite_snr_weighted_bound(rng.substream(1), AntennaConfig{2, 2, 3, 4}, FadingLaw::rayleigh(), grid,
                                                pick(10000)),
                check_finite_snr_weighted_bound(rng.substream(2), AntennaConfig{2, 3, 1, 3},
                                                FadingLaw::fixed_spectrum({1.0}), grid, pick(10000))};
    }
    if (name == "isotropy")
        return {check_isotropy(rng.substream(0), FadingLaw::rayleigh(), pick(100000)),
                check_isotropy(rng.substream(1), FadingLaw::fixed_spectrum({2.0, 0.5}), pick(100000))};
    // immse
    SuiteReport r = check_immse();
    r.seed = seed;
    return {r};
}

} // namespace dofregion
