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
#include <vector>

#include "dofregion/capacity.hpp"
#include "dofregion/randmat.hpp"
#include "dofregion/region.hpp"
#include "dofregion/rng.hpp"

using namespace dofregion;

namespace
{

// Sample mean and standard error of a scalar statistic.
std::pair<double, double> moments(const std::vector<double>& xs)
{
    const Estimate e = estimate_from(xs);
    return {e.mean, e.std_err};
}

} // namespace

TEST_CASE("streams are reproducible and substreams differ")
{
    RngStream a(42, 3);
    RngStream b(42, 3);
    for (int i = 0; i < 10; ++i)
        CHECK(a.normal() == b.normal());
    RngStream root(42, 3);
    RngStream s0 = root.substream(0);
    RngStream s1 = root.substream(1);
    CHECK(s0.normal() != s1.normal());
    CHECK(RngStream(42, 4).uniform() != RngStream(42, 3).uniform());
}

TEST_CASE("Ginibre entries have unit variance and zero pseudo-variance")
{
    RngStream rng(11, 0);
    std::vector<double> power;
    std::vector<double> pseudo;
    for (int t = 0; t < 2000; ++t)
    {
        const ComplexMatrix g = sample_ginibre(rng, 3, 4);
        for (const Complex& z : g.entries())
        {
            power.push_back(std::norm(z));
            pseudo.push_back((z * z).real());
        }
    }
    const auto [p, p_se] = moments(power);
    const auto [q, q_se] = moments(pseudo);
    CHECK(std::abs(p - 1.0) < 3.0 * p_se);
    CHECK(std::abs(q) < 3.0 * q_se);
}

TEST_CASE("Haar unitaries are unitary with uniform entry power")
{
    RngStream rng(12, 0);
    const std::size_t m = 3;
    std::vector<double> corner;
    for (int t = 0; t < 20000; ++t)
    {
        const ComplexMatrix u = sample_haar_unitary(rng, m);
        if (t < 50)
            CHECK(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(m)) < 1e-12);
        corner.push_back(std::norm(u(0, 0)));
    }
    // |U_00|^2 is Beta(1, m - 1): mean 1/m.
    const auto [mean, se] = moments(corner);
    CHECK(std::abs(mean - 1.0 / m) < 3.0 * se);
}

TEST_CASE("conditioned Stiefel draws avoid the conditioning subspace")
{
    RngStream rng(13, 0);
    const ComplexMatrix v3 = sample_stiefel(rng, 4, 1);
    for (int t = 0; t < 20; ++t)
    {
        const ComplexMatrix v = sample_conditioned_stiefel(rng, 4, 2, v3);
        CHECK(v.rows() == 4);
        CHECK(v.cols() == 2);
        CHECK(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(2)) < 1e-12);
        CHECK(frobenius_norm_sq(v3.adjoint() * v) < 1e-24);
    }
    CHECK_THROWS(sample_conditioned_stiefel(rng, 3, 3, v3));
}

TEST_CASE("isotropic scramble keeps the matrix spectrum and factorization")
{
    RngStream rng(14, 0);
    const ComplexMatrix g = sample_ginibre(rng, 2, 3);
    const ScrambledSvd s = isotropic_scramble(rng, g);
    CHECK(max_abs_diff(s.w * s.lambda * s.v_unscrambled.adjoint(), g) < 1e-11);
    const auto sv_g = singular_values(g);
    const auto sv_s = singular_values(s.w * s.lambda * s.v.adjoint());
    for (std::size_t i = 0; i < sv_g.size(); ++i)
        CHECK(sv_s[i] == doctest::Approx(sv_g[i]).epsilon(1e-11));
}

TEST_CASE("fixed-spectrum law reproduces its singular values on every link")
{
    const FadingLaw law = FadingLaw::fixed_spectrum({2.0, 0.5});
    RngStream rng(15, 0);
    const AntennaConfig cfg{1, 2, 3, 4};
    const ChannelDraw d = sample_channel(rng, cfg, law);
    for (Link l : all_links)
    {
        CAPTURE(link_name(l));
        const auto [rows, cols] = link_shape(cfg, l);
        CHECK(d[l].rows() == rows);
        CHECK(d[l].cols() == cols);
        const auto sv = singular_values(d[l]);
        CHECK(sv[0] == doctest::Approx(2.0).epsilon(1e-12));
        for (std::size_t i = 1; i < sv.size(); ++i)
            CHECK(sv[i] == doctest::Approx(0.5).epsilon(1e-12)); // last value broadcasts
    }
}

TEST_CASE("link shapes follow receiver and transmitter antenna counts")
{
    const AntennaConfig cfg{1, 2, 3, 4};
    CHECK(link_shape(cfg, Link::H11) == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(link_shape(cfg, Link::H12) == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(link_shape(cfg, Link::H21) == std::pair<std::size_t, std::size_t>{4, 1});
    CHECK(link_shape(cfg, Link::H22) == std::pair<std::size_t, std::size_t>{4, 3});
    CHECK(receiver_of(Link::H21) == 2);
    CHECK(transmitter_of(Link::H21) == 1);
}

TEST_CASE("lifting a block repeats the channel on the diagonal")
{
    RngStream rng(16, 0);
    const ChannelDraw d = sample_channel(rng, {2, 2, 1, 3}, FadingLaw::rayleigh());
    const ChannelDraw lifted = lift_block(d, 3);
    CHECK(lifted.h12.rows() == 6);
    CHECK(lifted.h12.cols() == 3);
    for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t r = 0; r < 2; ++r)
            CHECK(lifted.h12(2 * b + r, b) == d.h12(r, 0));
    CHECK(lifted.h12(0, 1) == Complex(0.0, 0.0));
}

TEST_CASE("law parsing")
{
    CHECK(FadingLaw::parse("rayleigh").kind() == FadingLaw::Kind::Rayleigh);
    const FadingLaw f = FadingLaw::parse("fixed:1,0.25", 4);
    CHECK(f.kind() == FadingLaw::Kind::FixedSpectrum);
    CHECK(f.coherence_t() == 4);
    CHECK(f.spectrum_for(Link::H11, 3) == std::vector<double>{1.0, 0.25, 0.25});
    CHECK_THROWS_AS(FadingLaw::parse("ricean"), std::invalid_argument);
    CHECK_THROWS_AS(FadingLaw::parse("fixed:"), std::invalid_argument);
    CHECK_THROWS_AS(FadingLaw::parse("fixed:1,0"), std::invalid_argument);
    CHECK_THROWS_AS(FadingLaw::parse("rayleigh", 0), std::invalid_argument);
}

TEST_CASE("scrambled custom law is full rank and isotropic in its right factor")
{
    // Base law with a fixed, strongly non-isotropic right singular basis.
    const LinkSampler base = [](RngStream& rng, std::size_t rows, std::size_t cols) {
        ComplexMatrix g(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            g(r, r % cols) = 1.0 + rng.uniform();
        return g;
    };
    const FadingLaw law = FadingLaw::scrambled_custom(base, "diag");
    RngStream rng(17, 0);
    std::vector<double> first_column_power;
    for (int t = 0; t < 20000; ++t)
    {
        const ComplexMatrix h = law.sample_link(rng, Link::H11, 1, 2);
        first_column_power.push_back(std::norm(h(0, 0)) / frobenius_norm_sq(h));
    }
    const auto [mean, se] = moments(first_column_power);
    CHECK(std::abs(mean - 0.5) < 3.0 * se);
}
