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

#include <cmath>
#include <numbers>
#include <vector>

#include "dofregion/capacity.hpp"
#include "dofregion/cxmat.hpp"
#include "dofregion/parallel.hpp"
#include "dofregion/randmat.hpp"

using namespace dofregion;

namespace
{

// BPSK on complex AWGN by a plain trapezoid rule in the real dimension that
// carries the signal: I = 2g - E ln cosh(2g + sqrt(2g) z), in bits.
double bpsk_trapezoid(double gamma)
{
    const double s = 2.0 * gamma;
    const double h = 0.01;
    double acc = 0.0;
    for (int k = -1200; k <= 1200; ++k)
    {
        const double z = k * h;
        const double x = s + std::sqrt(s) * z;
        // ln cosh(x) = |x| + log1p(exp(-2|x|)) - ln 2
        const double lc = std::abs(x) + std::log1p(std::exp(-2.0 * std::abs(x))) - std::numbers::ln2;
        const double w = (k == -1200 || k == 1200) ? 0.5 : 1.0;
        acc += w * lc * std::exp(-0.5 * z * z);
    }
    acc *= h / std::sqrt(2.0 * std::numbers::pi);
    return (s - acc) / std::numbers::ln2;
}

ChannelSampler fixed_channel(ComplexMatrix h)
{
    return [h](RngStream&) { return h; };
}

} // namespace

TEST_CASE("estimate_from")
{
    const std::vector<double> xs{1.0, 2.0, 3.0};
    const Estimate e = estimate_from(xs);
    CHECK(e.mean == doctest::Approx(2.0));
    CHECK(e.std_err == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(e.trials == 3);
    const std::vector<double> one{4.0};
    CHECK(estimate_from(one).std_err == 0.0);
}

TEST_CASE("Gaussian gap constant")
{
    CHECK(c_star(1, 1) == doctest::Approx(1.0));
    CHECK(c_star(2, 2) == doctest::Approx(2.0));
    CHECK(c_star(2, 3) == doctest::Approx(2.0));
    CHECK(c_star(3, 2) == doctest::Approx(2.0 * std::log2(2.5)));
    CHECK_THROWS_AS(c_star(0, 2), std::invalid_argument);
}

TEST_CASE("BPSK quadrature matches an independent trapezoid rule")
{
    for (double g : {0.01, 0.1, 0.5, 1.0, 3.0, 10.0, 100.0})
    {
        CAPTURE(g);
        CHECK(bpsk_awgn_mi(g) == doctest::Approx(bpsk_trapezoid(g)).epsilon(1e-8));
    }
    CHECK(bpsk_awgn_mi(1.0) == doctest::Approx(0.721452).epsilon(1e-5));
    CHECK(bpsk_awgn_mi(0.0) == 0.0);
    CHECK(bpsk_awgn_mi(1000.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("BPSK never beats Gaussian plus one bit")
{
    for (double g = 0.001; g < 1e4; g *= 1.7)
        CHECK(bpsk_awgn_mi(g) <= std::log2(1.0 + g) + 1.0);
}

TEST_CASE("Rayleigh 1x1 ergodic capacity matches the exponential-integral formula")
{
    const AntennaConfig cfg{1, 1, 1, 1};
    const RngStream rng(3, 0);
    for (double g : {1.0, 10.0, 100.0})
    {
        CAPTURE(g);
        const Estimate e = ergodic_logdet_mi(rng, cfg, FadingLaw::rayleigh(), single_link(Link::H11), g, 40000);
        // E ln(1 + g|h|^2) = exp(1/g) E1(1/g), E1(x) = -Ei(-x).
        const double exact = std::exp(1.0 / g) * -std::expint(-1.0 / g) / std::numbers::ln2;
        CHECK(std::abs(e.mean - exact) < 3.0 * e.std_err);
    }
}

TEST_CASE("fixed-spectrum log-det is rotation invariant")
{
    const AntennaConfig cfg{2, 2, 2, 2};
    const RngStream rng(4, 0);
    const double g = 8.0;
    const Estimate e =
        ergodic_logdet_mi(rng, cfg, FadingLaw::fixed_spectrum({2.0, 0.5}), single_link(Link::H22), g, 200);
    const double exact = std::log2(1.0 + g / 2.0 * 4.0) + std::log2(1.0 + g / 2.0 * 0.25);
    CHECK(e.mean == doctest::Approx(exact).epsilon(1e-12));
    CHECK(e.std_err < 1e-12);
}

TEST_CASE("coherence time leaves per-symbol log-det unchanged on common draws")
{
    const AntennaConfig cfg{1, 2, 3, 4};
    const RngStream rng(5, 0);
    const LinkWeights w{0.0, 0.0, 1.0, 1.0};
    const Estimate t1 = ergodic_logdet_mi(rng, cfg, FadingLaw::rayleigh(1), w, 50.0, 300);
    const Estimate t3 = ergodic_logdet_mi(rng, cfg, FadingLaw::rayleigh(3), w, 50.0, 300);
    CHECK(t3.mean == doctest::Approx(t1.mean).epsilon(1e-12));
}

TEST_CASE("Monte Carlo results do not depend on the worker count")
{
    const AntennaConfig cfg{2, 3, 1, 3};
    const RngStream rng(6, 0);
    const std::size_t saved = worker_count();
    set_worker_count(1);
    const MacPentagon a = mac_region_at_snr(rng, cfg, FadingLaw::rayleigh(), 1, 30.0, 500);
    set_worker_count(4);
    const MacPentagon b = mac_region_at_snr(rng, cfg, FadingLaw::rayleigh(), 1, 30.0, 500);
    set_worker_count(saved);
    CHECK(a.r1.mean == b.r1.mean);
    CHECK(a.sum.mean == b.sum.mean);
    CHECK(a.sum.std_err == b.sum.std_err);
}

TEST_CASE("MAC pentagon is consistent")
{
    const AntennaConfig cfg{1, 2, 3, 4};
    const RngStream rng(7, 0);
    const MacPentagon p = mac_region_at_snr(rng, cfg, FadingLaw::rayleigh(), 2, 100.0, 2000);
    CHECK(p.sum.mean <= p.r1.mean + p.r2.mean);
    CHECK(p.sum.mean >= std::max(p.r1.mean, p.r2.mean));
    CHECK(p.halfplanes().size() == 3);
    CHECK_THROWS_AS(mac_region_at_snr(rng, cfg, FadingLaw::rayleigh(), 3, 1.0, 10), std::invalid_argument);
}

TEST_CASE("achievable region points and hull")
{
    const RngStream rng(8, 0);
    const AchievableRegion r = achievable_region_at_snr(rng, {1, 2, 3, 4}, FadingLaw::rayleigh(), 1000.0, 1000);
    CHECK(r.points.size() == 5);
    CHECK(r.point("origin").r1.mean == 0.0);
    CHECK(r.point("single2").r1.mean == 0.0);
    CHECK_THROWS(r.point("nosuch"));
    // Every operating point is inside the rate region bounded by both pentagons.
    for (const OperatingPoint& p : r.points)
    {
        CHECK(p.r1.mean <= r.mac1.r1.mean + 1e-9);
        CHECK(p.r2.mean <= r.mac2.r2.mean + 1e-9);
    }
    CHECK(r.hull.size() >= 3);
}

TEST_CASE("convex hull drops interior points")
{
    const auto hull = convex_hull({{0, 0}, {1, 0}, {0.4, 0.4}, {1, 1}, {0, 1}, {0.5, 0.5}});
    CHECK(hull.size() == 4);
    CHECK(hull.front().r1 == 0.0);
    CHECK(hull.front().r2 == 0.0);
}

TEST_CASE("DoF slope of an exact curve")
{
    std::vector<std::pair<double, double>> pts;
    for (double db : {30.0, 35.0, 40.0})
    {
        const double g = db_to_linear(db);
        pts.emplace_back(g, 2.0 * std::log2(1.0 + g) + 0.7);
    }
    CHECK(dof_slope(pts) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("discrete-input MI on a unit scalar channel matches quadrature")
{
    const RngStream rng(9, 0);
    const ComplexMatrix one{{1.0}};
    for (double g : {0.1, 1.0, 10.0})
    {
        CAPTURE(g);
        const Estimate b = discrete_input_mi(rng, fixed_channel(one), Constellation::bpsk(), g, 20000);
        CHECK(std::abs(b.mean - bpsk_awgn_mi(g)) < 3.0 * b.std_err + 1e-8);
        // QPSK splits into two BPSK streams at half the power.
        const Estimate q = discrete_input_mi(rng, fixed_channel(one), Constellation::qpsk(), g, 20000);
        CHECK(std::abs(q.mean - 2.0 * bpsk_awgn_mi(g / 2.0)) < 3.0 * q.std_err + 1e-8);
    }
}

TEST_CASE("discrete-input MI saturates at the constellation entropy")
{
    const RngStream rng(10, 0);
    const ComplexMatrix h{{1.0, 0.0}, {0.0, 1.0}};
    const Estimate e = discrete_input_mi(rng, fixed_channel(h), Constellation::qpsk(), 1e4, 2000);
    CHECK(e.mean == doctest::Approx(4.0).epsilon(1e-9));
    CHECK_THROWS_AS(discrete_input_mi(rng, fixed_channel(ComplexMatrix::identity(3)), Constellation::bpsk(), 1.0, 10),
                    std::invalid_argument);
}

TEST_CASE("constellations have unit energy")
{
    for (const Constellation& c : {Constellation::bpsk(), Constellation::qpsk(), Constellation::qam16()})
    {
        double e = 0.0;
        for (const Complex& p : c.points())
            e += std::norm(p);
        CHECK(e / static_cast<double>(c.size()) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(Constellation::qam16().size() == 16);
    CHECK_THROWS(Constellation(std::vector<Complex>(17, Complex(1.0, 0.0))));
}

TEST_CASE("conditional Gaussian MI closed form")
{
    const ComplexMatrix a{{1.0, 0.0}, {0.0, 2.0}};
    const ComplexMatrix s1 = ComplexMatrix::identity(2);
    const ComplexMatrix s2 = ComplexMatrix::identity(1);
    const double g = 3.0;
    // Empty B: plain log det(I + g/m A A^H).
    const double plain = conditional_gaussian_mi_draw(a, ComplexMatrix(0, 2), s1, ComplexMatrix(0, 0), g, 2);
    CHECK(plain == doctest::Approx(std::log2(1.0 + 1.5) + std::log2(1.0 + 6.0)).epsilon(1e-13));
    // B aligned with the first input leaves only the second stream plus the
    // residual of the first: log2(1 + 1.5 / (1 + 1.5)) + log2(7).
    const ComplexMatrix b{{1.0, 0.0}};
    const double cond = conditional_gaussian_mi_draw(a, b, s1, s2, g, 2);
    CHECK(cond == doctest::Approx(std::log2(1.0 + 1.5 / 2.5) + std::log2(7.0)).epsilon(1e-13));
}

TEST_CASE("sampled conditional MI agrees with the closed form")
{
    const RngStream rng(11, 0);
    const StackedSampler sampler = [](RngStream& s) {
        return std::pair{sample_ginibre(s, 2, 2), sample_ginibre(s, 1, 2)};
    };
    const ComplexMatrix s1 = ComplexMatrix::identity(2);
    const ComplexMatrix s2 = 2.0 * ComplexMatrix::identity(1);
    const Estimate closed = conditional_gaussian_mi(rng, sampler, s1, s2, 5.0, 2, 20000);
    const Estimate sampled = conditional_gaussian_mi_sampled(rng, sampler, s1, s2, 5.0, 2, 20000);
    CHECK(std::abs(closed.mean - sampled.mean) < 3.0 * combined_std_err(closed, sampled));
}

TEST_CASE("I-MMSE pairs")
{
    for (double rho : {0.5, 1.0, 2.0})
        for (double t : {0.5, 1.0, 3.0})
        {
            const ImmsePair g = immse_check(rho, t);
            CHECK(g.mi_direct == doctest::Approx(std::log1p(t * rho)).epsilon(1e-14));
            CHECK(std::abs(g.mi_direct - g.mi_integrated) < 1e-6);
            const ImmsePair b = immse_check_bpsk(rho, t);
            CHECK(b.mi_direct == doctest::Approx(bpsk_trapezoid(rho * t) * std::numbers::ln2).epsilon(1e-7));
            CHECK(std::abs(b.mi_direct - b.mi_integrated) < 1e-4);
        }
}

TEST_CASE("gap constants for fixed spectra")
{
    const RngStream rng(12, 0);
    const AntennaConfig cfg{2, 3, 1, 3};
    const GapConstants strong = gap_constants(rng, cfg, FadingLaw::fixed_spectrum({2.0}), 20);
    CHECK(strong.c_star == doctest::Approx(2.0));
    CHECK(strong.delta1.mean == doctest::Approx(0.0));
    CHECK(strong.delta2.mean == doctest::Approx(2.0));
    CHECK(strong.delta3.mean == doctest::Approx(2.0));
    CHECK(strong.delta_total.mean == doctest::Approx(4.0));
    const GapConstants weak = gap_constants(rng, cfg, FadingLaw::fixed_spectrum({0.5}), 20);
    CHECK(weak.delta1.mean == doctest::Approx(2.0));
    CHECK(weak.delta2.mean == doctest::Approx(2.0));
    CHECK(weak.delta_total.mean == doctest::Approx(6.0));
}

TEST_CASE("sweep layout")
{
    const RngStream rng(13, 0);
    const std::vector<double> db{0.0, 10.0};
    const auto rows = sweep(rng, {1, 1, 1, 1}, FadingLaw::fixed_spectrum({1.0}), db, 5);
    REQUIRE(rows.size() == 16);
    CHECK(rows[0].quantity == "single1");
    CHECK(rows[8].gamma_db == 10.0);
    CHECK(rows[8].value.mean == doctest::Approx(std::log2(11.0)).epsilon(1e-12));
    CHECK(rows[4].quantity == "mac1_sum");
    CHECK(rows[4].value.mean == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
}
