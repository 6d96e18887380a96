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

#include "dofregion/randmat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dofregion
{

ComplexMatrix sample_ginibre(RngStream& rng, std::size_t n, std::size_t m)
{
    ComplexMatrix g(n, m);
    for (auto& z : g.entries())
        z = rng.cscg();
    return g;
}

ComplexMatrix sample_haar_unitary(RngStream& rng, std::size_t m)
{
    return qr(sample_ginibre(rng, m, m)).q;
}

ComplexMatrix sample_stiefel(RngStream& rng, std::size_t m, std::size_t k)
{
    if (k > m)
        throw std::invalid_argument("sample_stiefel: k = " + std::to_string(k) + " exceeds m = " + std::to_string(m));
    // The first k columns of Q depend only on the first k Ginibre columns.
    return qr(sample_ginibre(rng, m, k)).q;
}

ScrambledSvd isotropic_scramble(RngStream& rng, const ComplexMatrix& g)
{
    SvdResult svd = compact_svd(g);
    const ComplexMatrix q = sample_haar_unitary(rng, g.cols());
    ComplexMatrix v = q * svd.v;
    return {std::move(svd.w), std::move(svd.lambda), std::move(v), std::move(svd.v)};
}

ComplexMatrix sample_conditioned_stiefel(RngStream& rng, std::size_t m, std::size_t k, const ComplexMatrix& v3)
{
    const std::size_t k3 = v3.cols();
    if (k3 > 0 && v3.rows() != m)
        throw std::invalid_argument("sample_conditioned_stiefel: v3 must have m rows");
    if (k + k3 > m)
        throw std::invalid_argument("sample_conditioned_stiefel: k + k3 exceeds m");
    if (k3 == 0)
        return sample_stiefel(rng, m, k);
    if (max_abs_diff(v3.adjoint() * v3, ComplexMatrix::identity(k3)) > 1e3 * tol::orth)
        throw std::invalid_argument("sample_conditioned_stiefel: v3 columns are not orthonormal");
    const ComplexMatrix complement = orthonormal_complement(v3);
    return complement * sample_stiefel(rng, m - k3, k);
}

const char* link_name(Link l) noexcept
{
    switch (l)
    {
    case Link::H11:
        return "h11";
    case Link::H12:
        return "h12";
    case Link::H21:
        return "h21";
    case Link::H22:
        return "h22";
    }
    return "?";
}

std::pair<std::size_t, std::size_t> link_shape(const AntennaConfig& cfg, Link l)
{
    const int n = receiver_of(l) == 1 ? cfg.n1 : cfg.n2;
    const int m = transmitter_of(l) == 1 ? cfg.m1 : cfg.m2;
    return {static_cast<std::size_t>(n), static_cast<std::size_t>(m)};
}

// ---------------------------------------------------------------------------
// FadingLaw

namespace
{

void check_coherence(int t)
{
    if (t < 1)
        throw std::invalid_argument("coherence time must be >= 1");
}

void check_spectrum(const std::vector<double>& s)
{
    if (s.empty())
        throw std::invalid_argument("fixed spectrum needs at least one singular value");
    for (double x : s)
        if (!(x > 0.0) || !std::isfinite(x))
            throw std::invalid_argument("fixed spectrum singular values must be finite and strictly positive");
}

} // namespace

FadingLaw FadingLaw::rayleigh(int coherence_t)
{
    check_coherence(coherence_t);
    FadingLaw law;
    law.kind_ = Kind::Rayleigh;
    law.coherence_t_ = coherence_t;
    law.name_ = "rayleigh";
    return law;
}

FadingLaw FadingLaw::fixed_spectrum(std::vector<double> singular_values, int coherence_t)
{
    return fixed_spectrum(std::array<std::vector<double>, 4>{singular_values, singular_values, singular_values,
                                                             singular_values},
                          coherence_t);
}

FadingLaw FadingLaw::fixed_spectrum(std::array<std::vector<double>, 4> per_link, int coherence_t)
{
    check_coherence(coherence_t);
    for (auto& s : per_link)
    {
        check_spectrum(s);
        std::sort(s.begin(), s.end(), std::greater<>());
    }
    FadingLaw law;
    law.kind_ = Kind::FixedSpectrum;
    law.coherence_t_ = coherence_t;
    std::ostringstream os;
    os.precision(17);
    os << "fixed:";
    for (std::size_t i = 0; i < per_link[0].size(); ++i)
        os << (i ? "," : "") << per_link[0][i];
    law.name_ = os.str();
    law.spectra_ = std::move(per_link);
    return law;
}

FadingLaw FadingLaw::scrambled_custom(LinkSampler base, std::string name, int coherence_t)
{
    check_coherence(coherence_t);
    if (!base)
        throw std::invalid_argument("scrambled_custom: empty base sampler");
    FadingLaw law;
    law.kind_ = Kind::ScrambledCustom;
    law.coherence_t_ = coherence_t;
    law.base_ = std::move(base);
    law.name_ = "scrambled:" + name;
    return law;
}

FadingLaw FadingLaw::parse(const std::string& spec, int coherence_t)
{
    if (spec == "rayleigh")
        return rayleigh(coherence_t);
    const std::string prefix = "fixed:";
    if (spec.rfind(prefix, 0) == 0)
    {
        std::vector<double> values;
        std::stringstream ss(spec.substr(prefix.size()));
        std::string item;
        while (std::getline(ss, item, ','))
        {
            std::size_t used = 0;
            double v = 0.0;
            try
            {
                v = std::stod(item, &used);
            }
            catch (const std::exception&)
            {
                throw std::invalid_argument("bad singular value '" + item + "' in law '" + spec + "'");
            }
            if (used != item.size())
                throw std::invalid_argument("bad singular value '" + item + "' in law '" + spec + "'");
            values.push_back(v);
        }
        return fixed_spectrum(std::move(values), coherence_t);
    }
    throw std::invalid_argument("unknown fading law '" + spec + "' (expected rayleigh or fixed:<csv>)");
}

FadingLaw FadingLaw::with_coherence_t(int t) const
{
    check_coherence(t);
    FadingLaw copy = *this;
    copy.coherence_t_ = t;
    return copy;
}

std::string FadingLaw::describe() const
{
    return name_;
}

std::vector<double> FadingLaw::spectrum_for(Link l, std::size_t k) const
{
    const auto& s = spectra_[static_cast<std::size_t>(l)];
    std::vector<double> out(k);
    for (std::size_t i = 0; i < k; ++i)
        out[i] = s[std::min(i, s.size() - 1)];
    return out;
}

ComplexMatrix FadingLaw::sample_link(RngStream& rng, Link l, std::size_t rows, std::size_t cols) const
{
    switch (kind_)
    {
    case Kind::Rayleigh:
        return sample_ginibre(rng, rows, cols);
    case Kind::FixedSpectrum: {
        const std::size_t k = std::min(rows, cols);
        const std::vector<double> s = spectrum_for(l, k);
        const ComplexMatrix w = sample_stiefel(rng, rows, k);
        const ComplexMatrix v = sample_stiefel(rng, cols, k);
        return w * ComplexMatrix::diagonal(s) * v.adjoint();
    }
    case Kind::ScrambledCustom: {
        const ComplexMatrix g = base_(rng, rows, cols);
        if (g.rows() != rows || g.cols() != cols)
            throw std::logic_error("scrambled_custom: base sampler returned the wrong shape");
        const ScrambledSvd s = isotropic_scramble(rng, g);
        return s.w * s.lambda * s.v.adjoint();
    }
    }
    throw std::logic_error("unreachable fading kind");
}

// ---------------------------------------------------------------------------
// Channel draws

const ComplexMatrix& ChannelDraw::operator[](Link l) const noexcept
{
    switch (l)
    {
    case Link::H11:
        return h11;
    case Link::H12:
        return h12;
    case Link::H21:
        return h21;
    case Link::H22:
        break;
    }
    return h22;
}

ComplexMatrix& ChannelDraw::operator[](Link l) noexcept
{
    return const_cast<ComplexMatrix&>(std::as_const(*this)[l]);
}

ChannelDraw sample_channel(RngStream& rng, const AntennaConfig& cfg, const FadingLaw& law)
{
    cfg.validate();
    ChannelDraw d;
    for (Link l : all_links)
    {
        const auto [rows, cols] = link_shape(cfg, l);
        d[l] = law.sample_link(rng, l, rows, cols);
    }
    return d;
}

ChannelDraw lift_block(const ChannelDraw& draw, int t)
{
    if (t < 1)
        throw std::invalid_argument("lift_block: t must be >= 1");
    if (t == 1)
        return draw;
    ChannelDraw out;
    for (Link l : all_links)
    {
        const std::vector<ComplexMatrix> copies(static_cast<std::size_t>(t), draw[l]);
        out[l] = block_diag(copies);
    }
    return out;
}

} // namespace dofregion
