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

#include "dofregion/capacity.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "dofregion/parallel.hpp"
#include "dofregion/quadrature.hpp"

namespace dofregion
{

Estimate estimate_from(std::span<const double> samples)
{
    if (samples.empty())
        throw std::invalid_argument("estimate_from: no samples");
    const auto n = static_cast<double>(samples.size());
    const double mean = pairwise_sum(samples) / n;
    if (samples.size() == 1)
        return {mean, 0.0, 1};
    std::vector<double> dev(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        dev[i] = (samples[i] - mean) * (samples[i] - mean);
    const double var = pairwise_sum(dev) / (n - 1.0);
    return {mean, std::sqrt(var / n), samples.size()};
}

double c_star(int m, int n)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("c_star: antenna counts must be >= 1");
    const int k = std::min(m, n);
    return k * std::log2(1.0 + static_cast<double>(m) / k);
}

LinkWeights single_link(Link l)
{
    LinkWeights w{};
    w[static_cast<std::size_t>(l)] = 1.0;
    return w;
}

namespace
{

void require_trials(std::size_t trials)
{
    if (trials < 1)
        throw std::invalid_argument("trials must be >= 1");
}

void require_gamma(double gamma)
{
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("SNR must be finite and non-negative");
}

int transmit_antennas(const AntennaConfig& cfg, Link l)
{
    return transmitter_of(l) == 1 ? cfg.m1 : cfg.m2;
}

// Draw for trial i, lifted to the law's coherence time.
ChannelDraw trial_draw(const RngStream& rng, std::size_t i, const AntennaConfig& cfg, const FadingLaw& law)
{
    RngStream s = rng.substream(i);
    return lift_block(sample_channel(s, cfg, law), law.coherence_t());
}

// log2 det(I + sum_l w_l g/M_t H_l H_l^H) divided by the lift factor.
double weighted_logdet(const ChannelDraw& d, const AntennaConfig& cfg, const LinkWeights& w, double gamma, int lift)
{
    ComplexMatrix acc;
    for (Link l : all_links)
    {
        const double wl = w[static_cast<std::size_t>(l)];
        if (wl == 0.0)
            continue;
        ComplexMatrix term = gram_rows(d[l]);
        term *= wl * gamma / transmit_antennas(cfg, l);
        if (acc.rows() == 0)
            acc = std::move(term);
        else
            acc += term;
    }
    if (acc.rows() == 0)
        return 0.0;
    acc += ComplexMatrix::identity(acc.rows());
    return logdet_hpd(acc) / lift;
}

void require_single_receiver(const LinkWeights& w)
{
    int rx = 0;
    for (Link l : all_links)
    {
        if (w[static_cast<std::size_t>(l)] == 0.0)
            continue;
        if (w[static_cast<std::size_t>(l)] < 0.0)
            throw std::invalid_argument("link weights must be non-negative");
        if (rx != 0 && rx != receiver_of(l))
            throw std::invalid_argument("selected links must share a receiver");
        rx = receiver_of(l);
    }
}

Estimate column_estimate(const std::vector<std::vector<double>>& per_trial, std::size_t col)
{
    std::vector<double> xs(per_trial.size());
    for (std::size_t i = 0; i < per_trial.size(); ++i)
        xs[i] = per_trial[i][col];
    return estimate_from(xs);
}

// Estimate of a linear combination of per-trial columns.
Estimate combination_estimate(const std::vector<std::vector<double>>& per_trial,
                              std::initializer_list<std::pair<std::size_t, double>> terms)
{
    std::vector<double> xs(per_trial.size());
    for (std::size_t i = 0; i < per_trial.size(); ++i)
    {
        double s = 0.0;
        for (const auto& [col, coef] : terms)
            s += coef * per_trial[i][col];
        xs[i] = s;
    }
    return estimate_from(xs);
}

} // namespace

std::vector<Estimate> ergodic_logdet_curve(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law,
                                           const LinkWeights& weights, std::span<const double> gammas,
                                           std::size_t trials)
{
    cfg.validate();
    require_trials(trials);
    require_single_receiver(weights);
    for (double g : gammas)
        require_gamma(g);
    const std::vector<double> grid(gammas.begin(), gammas.end());
    const auto rows = map_trials(trials, [&](std::size_t i) {
        const ChannelDraw d = trial_draw(rng, i, cfg, law);
        std::vector<double> out(grid.size());
        for (std::size_t k = 0; k < grid.size(); ++k)
            out[k] = weighted_logdet(d, cfg, weights, grid[k], law.coherence_t());
        return out;
    });
    std::vector<Estimate> est(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k)
        est[k] = column_estimate(rows, k);
    return est;
}

Estimate ergodic_logdet_mi(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law,
                           const LinkWeights& weights, double gamma, std::size_t trials)
{
    const double g[] = {gamma};
    return ergodic_logdet_curve(rng, cfg, law, weights, g, trials).front();
}

// ---------------------------------------------------------------------------
// Multiple-access and achievable regions

std::vector<HalfPlane> MacPentagon::halfplanes() const
{
    return {{1.0, 0.0, r1.mean}, {0.0, 1.0, r2.mean}, {1.0, 1.0, sum.mean}};
}

namespace
{

constexpr LinkWeights rx1_user1{1.0, 0.0, 0.0, 0.0};
constexpr LinkWeights rx1_user2{0.0, 1.0, 0.0, 0.0};
constexpr LinkWeights rx1_both{1.0, 1.0, 0.0, 0.0};
constexpr LinkWeights rx2_user1{0.0, 0.0, 1.0, 0.0};
constexpr LinkWeights rx2_user2{0.0, 0.0, 0.0, 1.0};
constexpr LinkWeights rx2_both{0.0, 0.0, 1.0, 1.0};

// Columns: mac1 r1, r2, sum, mac2 r1, r2, sum.
std::vector<double> mac_logdets(const ChannelDraw& d, const AntennaConfig& cfg, double gamma, int lift)
{
    return {weighted_logdet(d, cfg, rx1_user1, gamma, lift), weighted_logdet(d, cfg, rx1_user2, gamma, lift),
            weighted_logdet(d, cfg, rx1_both, gamma, lift),  weighted_logdet(d, cfg, rx2_user1, gamma, lift),
            weighted_logdet(d, cfg, rx2_user2, gamma, lift), weighted_logdet(d, cfg, rx2_both, gamma, lift)};
}

std::vector<std::vector<double>> mac_samples(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law,
                                             double gamma, std::size_t trials)
{
    cfg.validate();
    require_trials(trials);
    require_gamma(gamma);
    return map_trials(trials, [&](std::size_t i) {
        return mac_logdets(trial_draw(rng, i, cfg, law), cfg, gamma, law.coherence_t());
    });
}

MacPentagon pentagon_from(const std::vector<std::vector<double>>& s, int receiver, double gamma)
{
    const std::size_t base = receiver == 1 ? 0 : 3;
    return {receiver, gamma, column_estimate(s, base), column_estimate(s, base + 1), column_estimate(s, base + 2)};
}

} // namespace

MacPentagon mac_region_at_snr(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law, int receiver,
                              double gamma, std::size_t trials)
{
    if (receiver != 1 && receiver != 2)
        throw std::invalid_argument("receiver must be 1 or 2");
    return pentagon_from(mac_samples(rng, cfg, law, gamma, trials), receiver, gamma);
}

const OperatingPoint& AchievableRegion::point(const std::string& label) const
{
    for (const auto& p : points)
        if (p.label == label)
            return p;
    throw std::out_of_range("no operating point labelled '" + label + "'");
}

std::vector<RatePair> convex_hull(std::vector<RatePair> pts)
{
    std::sort(pts.begin(), pts.end(), [](RatePair a, RatePair b) { return a.r1 < b.r1 || (a.r1 == b.r1 && a.r2 < b.r2); });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](RatePair a, RatePair b) { return std::abs(a.r1 - b.r1) < 1e-12 && std::abs(a.r2 - b.r2) < 1e-12; }),
              pts.end());
    if (pts.size() < 3)
        return pts;
    auto cross = [](RatePair o, RatePair a, RatePair b) {
        return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
    };
    std::vector<RatePair> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts)
    {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 1e-12)
            --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;)
    {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 1e-12)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

AchievableRegion achievable_region_at_snr(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law,
                                          double gamma, std::size_t trials)
{
    const auto s = mac_samples(rng, cfg, law, gamma, trials);
    AchievableRegion out;
    out.gamma = gamma;
    out.mac1 = pentagon_from(s, 1, gamma);
    out.mac2 = pentagon_from(s, 2, gamma);

    // Column indices: 0 a1, 1 a2, 2 s1, 3 b1, 4 b2, 5 s2.
    const std::size_t r1_col = out.mac1.r1.mean <= out.mac2.r1.mean ? 0 : 3;
    const std::size_t r2_col = out.mac1.r2.mean <= out.mac2.r2.mean ? 1 : 4;
    const std::size_t sum_col = out.mac1.sum.mean <= out.mac2.sum.mean ? 2 : 5;
    const Estimate r1_max = column_estimate(s, r1_col);
    const Estimate r2_max = column_estimate(s, r2_col);
    const Estimate rest_for_2 = combination_estimate(s, {{sum_col, 1.0}, {r1_col, -1.0}});
    const Estimate rest_for_1 = combination_estimate(s, {{sum_col, 1.0}, {r2_col, -1.0}});

    auto clamp0 = [](Estimate e) {
        e.mean = std::max(0.0, e.mean);
        return e;
    };
    const Estimate zero{0.0, 0.0, trials};
    out.points = {
        {"origin", zero, zero},
        {"single1", out.mac1.r1, zero},
        {"single2", zero, out.mac2.r2},
        {"mac_user1_first", r1_max, clamp0(rest_for_2.mean < r2_max.mean ? rest_for_2 : r2_max)},
        {"mac_user2_first", clamp0(rest_for_1.mean < r1_max.mean ? rest_for_1 : r1_max), r2_max},
    };

    std::vector<RatePair> pts;
    for (const auto& p : out.points)
        pts.push_back(p.rates());
    out.hull = convex_hull(std::move(pts));
    return out;
}

double dof_slope(std::span<const std::pair<double, double>> gamma_rate)
{
    if (gamma_rate.size() < 2)
        throw std::invalid_argument("dof_slope: need at least two (gamma, rate) points");
    double sx = 0.0;
    double sy = 0.0;
    for (const auto& [g, r] : gamma_rate)
    {
        if (!(g > 0.0))
            throw std::invalid_argument("dof_slope: gamma must be positive");
        sx += std::log2(1.0 + g);
        sy += r;
    }
    const auto n = static_cast<double>(gamma_rate.size());
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& [g, r] : gamma_rate)
    {
        const double x = std::log2(1.0 + g) - mx;
        sxx += x * x;
        sxy += x * (r - my);
    }
    if (sxx == 0.0)
        throw std::invalid_argument("dof_slope: gammas must be distinct");
    return sxy / sxx;
}

// ---------------------------------------------------------------------------
// Conditional Gaussian mutual information

namespace
{

void require_noise(const ComplexMatrix& sigma, std::size_t rows, const char* which)
{
    if (sigma.rows() != rows || sigma.cols() != rows)
        throw std::invalid_argument(std::string(which) + " must be square and match the block row count");
}

ComplexMatrix hermitian_part(const ComplexMatrix& a)
{
    ComplexMatrix h = a + a.adjoint();
    h *= 0.5;
    return h;
}

} // namespace

double conditional_gaussian_mi_draw(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& sigma1,
                                    const ComplexMatrix& sigma2, double gamma, int m)
{
    if (m < 1 || a.cols() != static_cast<std::size_t>(m) || (b.rows() > 0 && b.cols() != a.cols()))
        throw std::invalid_argument("conditional_gaussian_mi: blocks must have m columns");
    require_noise(sigma1, a.rows(), "sigma1");
    require_noise(sigma2, b.rows(), "sigma2");
    const double scale = gamma / m;
    if (b.rows() == 0)
    {
        ComplexMatrix joint = gram_rows(a);
        joint *= scale;
        return logdet_hpd(joint + sigma1) - logdet_hpd(sigma1);
    }
    ComplexMatrix joint = gram_rows(vstack(a, b));
    joint *= scale;
    const std::vector<ComplexMatrix> noise{sigma1, sigma2};
    ComplexMatrix cond = gram_rows(b);
    cond *= scale;
    return logdet_hpd(joint + block_diag(noise)) - logdet_hpd(cond + sigma2) - logdet_hpd(sigma1);
}

Estimate conditional_gaussian_mi(const RngStream& rng, const StackedSampler& sampler, const ComplexMatrix& sigma1,
                                 const ComplexMatrix& sigma2, double gamma, int m, std::size_t trials)
{
    require_trials(trials);
    require_gamma(gamma);
    const auto xs = map_trials(trials, [&](std::size_t i) {
        RngStream s = rng.substream(i);
        const auto [a, b] = sampler(s);
        return conditional_gaussian_mi_draw(a, b, sigma1, sigma2, gamma, m);
    });
    return estimate_from(xs);
}

Estimate conditional_gaussian_mi_sampled(const RngStream& rng, const StackedSampler& sampler,
                                         const ComplexMatrix& sigma1, const ComplexMatrix& sigma2, double gamma, int m,
                                         std::size_t trials)
{
    require_trials(trials);
    require_gamma(gamma);
    if (m < 1)
        throw std::invalid_argument("input dimension must be >= 1");
    const double rho = gamma / m;
    const ComplexMatrix l1 = cholesky(sigma1);
    const ComplexMatrix l2 = sigma2.rows() > 0 ? cholesky(sigma2) : ComplexMatrix{};
    const double logdet_s1 = logdet_hpd(sigma1);

    auto white = [](RngStream& s, std::size_t n) {
        ComplexMatrix v(n, 1);
        for (auto& z : v.entries())
            z = s.cscg();
        return v;
    };
    auto quad = [](const ComplexMatrix& cov, const ComplexMatrix& r) {
        return (r.adjoint() * solve_hpd(cov, r))(0, 0).real();
    };

    const auto xs = map_trials(trials, [&](std::size_t i) {
        RngStream s = rng.substream(i);
        const auto [a, b] = sampler(s);
        require_noise(sigma1, a.rows(), "sigma1");
        require_noise(sigma2, b.rows(), "sigma2");
        RngStream noise_stream = s.substream(1);
        ComplexMatrix x = white(noise_stream, static_cast<std::size_t>(m));
        x *= std::sqrt(rho);
        const ComplexMatrix n1 = l1 * white(noise_stream, a.rows());
        const ComplexMatrix y = a * x + n1;

        ComplexMatrix mean(a.rows(), 1);
        ComplexMatrix cov = sigma1 + Complex(rho) * gram_rows(a);
        if (b.rows() > 0)
        {
            const ComplexMatrix z = b * x + l2 * white(noise_stream, b.rows());
            const ComplexMatrix cz = sigma2 + Complex(rho) * gram_rows(b);
            const ComplexMatrix ab = Complex(rho) * (a * b.adjoint());
            mean = ab * solve_hpd(cz, z);
            cov -= ab * solve_hpd(cz, ab.adjoint());
        }
        cov = hermitian_part(cov);
        const double nats = quad(cov, y - mean) - quad(sigma1, n1);
        return nats / std::numbers::ln2 + logdet_hpd(cov) - logdet_s1;
    });
    return estimate_from(xs);
}

// ---------------------------------------------------------------------------
// Discrete inputs

Constellation::Constellation(std::vector<Complex> points, std::string name)
    : points_(std::move(points)), name_(std::move(name))
{
    if (points_.empty())
        throw std::invalid_argument("constellation must have at least one point");
    if (points_.size() > max_constellation_size)
        throw std::invalid_argument("constellation has more than 16 points");
    double energy = 0.0;
    for (const auto& p : points_)
        energy += std::norm(p);
    energy /= static_cast<double>(points_.size());
    if (!(energy > 0.0))
        throw std::invalid_argument("constellation has zero energy");
    for (auto& p : points_)
        p /= std::sqrt(energy);
}

Constellation Constellation::bpsk()
{
    return Constellation({{1.0, 0.0}, {-1.0, 0.0}}, "bpsk");
}

Constellation Constellation::qpsk()
{
    return Constellation({{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}}, "qpsk");
}

Constellation Constellation::qam16()
{
    std::vector<Complex> pts;
    for (int re : {-3, -1, 1, 3})
        for (int im : {-3, -1, 1, 3})
            pts.emplace_back(re, im);
    return Constellation(std::move(pts), "qam16");
}

namespace
{

struct ProductInput
{
    std::vector<ComplexMatrix> symbols; // each M x 1, scaled to total power gamma
};

ProductInput product_input(const Constellation& c, std::size_t m, double gamma)
{
    if (m < 1 || m > max_input_dimension)
        throw std::invalid_argument("discrete input dimension must be 1 or 2");
    std::size_t count = 1;
    for (std::size_t i = 0; i < m; ++i)
        count *= c.size();
    const double amp = std::sqrt(gamma / static_cast<double>(m));
    ProductInput in;
    in.symbols.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx)
    {
        ComplexMatrix x(m, 1);
        std::size_t rest = idx;
        for (std::size_t k = 0; k < m; ++k)
        {
            x(k, 0) = amp * c.points()[rest % c.size()];
            rest /= c.size();
        }
        in.symbols.push_back(std::move(x));
    }
    return in;
}

// log2 of sum_{x'} p(y | x') / p(y | x_sent) for white unit noise. The
// per-sample information is log2 |S| minus this non-negative deficit.
double deficit(const ComplexMatrix& h, const ProductInput& in, std::size_t sent, const ComplexMatrix& noise)
{
    if (h.rows() == 0)
        return 0.0;
    const ComplexMatrix y = h * in.symbols[sent] + noise;
    const double own = frobenius_norm_sq(noise);
    std::vector<double> expo(in.symbols.size());
    double peak = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < in.symbols.size(); ++c)
    {
        expo[c] = own - frobenius_norm_sq(y - h * in.symbols[c]);
        peak = std::max(peak, expo[c]);
    }
    double acc = 0.0;
    for (double e : expo)
        acc += std::exp(e - peak);
    return std::max(0.0, (peak + std::log(acc)) / std::numbers::ln2);
}

// Noise for the discrete estimators is drawn from an equal mixture of
// CN(0, I) and CN(0, wide_variance I). The deficit at high SNR is driven by
// rare large-noise events; the wide component samples them while the
// likelihood weight p / q stays below 2, so the variance grows at most 2x.
constexpr double wide_variance = 4.0;

struct WeightedNoise
{
    ComplexMatrix noise;
    double weight = 1.0;
};

WeightedNoise mixture_noise(RngStream& s, std::size_t n)
{
    const bool wide = s.uniform() < 0.5;
    const double scale = wide ? std::sqrt(wide_variance) : 1.0;
    WeightedNoise out{ComplexMatrix(n, 1), 1.0};
    for (auto& z : out.noise.entries())
        z = scale * s.cscg();
    const double r = frobenius_norm_sq(out.noise);
    // log of p_wide(n) / p_unit(n).
    const double log_ratio = -static_cast<double>(n) * std::log(wide_variance) + r * (1.0 - 1.0 / wide_variance);
    out.weight = 2.0 / (1.0 + std::exp(log_ratio));
    return out;
}

} // namespace

Estimate discrete_input_mi(const RngStream& rng, const ChannelSampler& sampler, const Constellation& constellation,
                           double gamma, std::size_t trials)
{
    require_trials(trials);
    require_gamma(gamma);
    // Probe the input dimension from the first draw's stream.
    RngStream probe = rng.substream(0);
    const std::size_t m = sampler(probe).cols();
    const ProductInput in = product_input(constellation, m, gamma);
    const double entropy = std::log2(static_cast<double>(in.symbols.size()));

    const auto xs = map_trials(trials, [&](std::size_t i) {
        RngStream s = rng.substream(i);
        const ComplexMatrix h = sampler(s);
        if (h.cols() != m)
            throw std::invalid_argument("discrete_input_mi: channel sampler changed input dimension");
        RngStream local = s.substream(1);
        const std::size_t sent = local.uniform_index(in.symbols.size());
        const WeightedNoise wn = mixture_noise(local, h.rows());
        return entropy - wn.weight * deficit(h, in, sent, wn.noise);
    });
    return estimate_from(xs);
}

Estimate discrete_conditional_mi(const RngStream& rng, const StackedSampler& sampler,
                                 const Constellation& constellation, double gamma, std::size_t trials)
{
    require_trials(trials);
    require_gamma(gamma);
    RngStream probe = rng.substream(0);
    const std::size_t m = sampler(probe).first.cols();
    const ProductInput in = product_input(constellation, m, gamma);
    const double entropy = std::log2(static_cast<double>(in.symbols.size()));

    const auto xs = map_trials(trials, [&](std::size_t i) {
        RngStream s = rng.substream(i);
        const auto [a, b] = sampler(s);
        if (a.cols() != m || (b.rows() > 0 && b.cols() != m))
            throw std::invalid_argument("discrete_conditional_mi: sampled blocks changed input dimension");
        RngStream local = s.substream(1);
        const std::size_t sent = local.uniform_index(in.symbols.size());
        const WeightedNoise wn = mixture_noise(local, a.rows() + b.rows());
        if (b.rows() == 0)
            return entropy - wn.weight * deficit(a, in, sent, wn.noise);
        const ComplexMatrix n2 = wn.noise.rows_range(a.rows(), b.rows());
        // I(Y, Z; X) - I(Z; X): the entropy terms cancel.
        return wn.weight * (deficit(b, in, sent, n2) - deficit(vstack(a, b), in, sent, wn.noise));
    });
    return estimate_from(xs);
}

// ---------------------------------------------------------------------------
// Scalar BPSK curves and I-MMSE

namespace
{

double log_cosh(double x)
{
    const double ax = std::abs(x);
    return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
}

// Real-valued channel sqrt(s) X + N(0, 1) with X = +-1: MI in nats and MMSE.
double bpsk_real_mi_nats(double s)
{
    if (s <= 0.0)
        return 0.0;
    const double rs = std::sqrt(s);
    return s - gaussian_expectation([&](double z) { return log_cosh(s + rs * z); });
}

double bpsk_real_mmse(double s)
{
    if (s <= 0.0)
        return 1.0;
    const double rs = std::sqrt(s);
    return 1.0 - gaussian_expectation([&](double z) { return std::tanh(s + rs * z); });
}

void require_immse_args(double rho, double t)
{
    if (!(rho >= 0.0) || !(t >= 0.0))
        throw std::invalid_argument("immse_check: rho and t must be non-negative");
}

} // namespace

double bpsk_awgn_mi(double gamma)
{
    require_gamma(gamma);
    // Only the real part carries information; its noise variance is 1/2.
    return bpsk_real_mi_nats(2.0 * gamma) / std::numbers::ln2;
}

ImmsePair immse_check(double rho, double t)
{
    require_immse_args(rho, t);
    const double direct = std::log1p(t * rho);
    const double integrated = integrate([&](double tau) { return rho / (1.0 + tau * rho); }, 0.0, t, 1e-8);
    return {direct, integrated};
}

ImmsePair immse_check_bpsk(double rho, double t)
{
    require_immse_args(rho, t);
    const double direct = bpsk_real_mi_nats(2.0 * rho * t);
    const double integrated =
        integrate([&](double tau) { return rho * bpsk_real_mmse(2.0 * rho * tau); }, 0.0, t, 1e-8);
    return {direct, integrated};
}

// ---------------------------------------------------------------------------
// Gap constants

GapConstants gap_constants(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law, std::size_t trials)
{
    require_trials(trials);
    const AntennaConfig c = normalized(cfg);
    const double ratio = static_cast<double>(std::min(c.m2, c.n1)) / std::min(c.m2, c.n2);
    const double cs = c_star(c.m1, c.n1);

    auto log_plus_det = [](const std::vector<double>& sv) {
        double s = 0.0;
        for (double x : sv)
            s += std::log2(x);
        return std::max(0.0, s);
    };
    auto log_plus_inv_det_min = [](const std::vector<double>& sv) {
        double s = 0.0;
        for (double x : sv)
            s -= std::log2(std::min(1.0, x));
        return s;
    };

    // Columns: delta1, delta2, delta3, total.
    const auto rows = map_trials(trials, [&](std::size_t i) {
        RngStream s = rng.substream(i);
        const ChannelDraw d = sample_channel(s, c, law);
        const std::vector<double> sv12 = singular_values(d.h12);
        const std::vector<double> sv22 = singular_values(d.h22);
        const double d1 = 2.0 * log_plus_inv_det_min(sv12);
        const double d2 = 2.0 * log_plus_det(sv22) + 2.0 * log_plus_inv_det_min(sv22);
        const double d3 = 2.0 * log_plus_det(sv12) + 2.0 * log_plus_inv_det_min(sv12);
        return std::vector<double>{d1, d2, d3, cs + d1 + ratio * d2};
    });

    GapConstants g;
    g.c_star = cs;
    g.delta1 = column_estimate(rows, 0);
    g.delta2 = column_estimate(rows, 1);
    g.delta3 = column_estimate(rows, 2);
    g.delta_total = column_estimate(rows, 3);
    return g;
}

// ---------------------------------------------------------------------------
// Sweeps

std::vector<SweepRow> sweep(const RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law,
                            std::span<const double> gammas_db, std::size_t trials)
{
    cfg.validate();
    require_trials(trials);
    std::vector<double> gammas;
    for (double db : gammas_db)
        gammas.push_back(db_to_linear(db));

    const auto rows = map_trials(trials, [&](std::size_t i) {
        const ChannelDraw d = trial_draw(rng, i, cfg, law);
        std::vector<double> out;
        out.reserve(6 * gammas.size());
        for (double g : gammas)
        {
            const auto v = mac_logdets(d, cfg, g, law.coherence_t());
            out.insert(out.end(), v.begin(), v.end());
        }
        return out;
    });

    static constexpr const char* names[] = {"mac1_r1", "mac1_r2", "mac1_sum", "mac2_r1", "mac2_r2", "mac2_sum"};
    std::vector<SweepRow> out;
    for (std::size_t k = 0; k < gammas.size(); ++k)
    {
        const Estimate single1 = column_estimate(rows, 6 * k + 0);
        const Estimate single2 = column_estimate(rows, 6 * k + 4);
        out.push_back({gammas_db[k], "single1", single1});
        out.push_back({gammas_db[k], "single2", single2});
        for (std::size_t q = 0; q < 6; ++q)
            out.push_back({gammas_db[k], names[q], column_estimate(rows, 6 * k + q)});
    }
    return out;
}

} // namespace dofregion
