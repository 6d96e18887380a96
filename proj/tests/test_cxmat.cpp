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

#include "dofregion/cxmat.hpp"
#include "dofregion/randmat.hpp"
#include "dofregion/rng.hpp"

using namespace dofregion;

namespace
{

ComplexMatrix random_matrix(std::uint64_t seed, std::size_t r, std::size_t c)
{
    RngStream rng(seed, 7);
    return sample_ginibre(rng, r, c);
}

bool is_orthonormal(const ComplexMatrix& q, double tol)
{
    return max_abs_diff(q.adjoint() * q, ComplexMatrix::identity(q.cols())) < tol;
}

} // namespace

TEST_CASE("logdet of a 2x2 HPD matrix matches the closed form")
{
    // det [[3, 1+i], [1-i, 2]] = 6 - 2 = 4
    const ComplexMatrix a{{{3.0, 0.0}, {1.0, 1.0}}, {{1.0, -1.0}, {2.0, 0.0}}};
    CHECK(logdet_hpd(a) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(logdet_hpd(ComplexMatrix(0, 0)) == 0.0);
}

TEST_CASE("logdet rejects matrices that are not positive definite")
{
    const ComplexMatrix a{{1.0, 2.0}, {2.0, 1.0}};
    CHECK_THROWS_AS(logdet_hpd(a), LinalgError);
}

TEST_CASE("cholesky factor reproduces the matrix")
{
    const ComplexMatrix g = random_matrix(1, 4, 4);
    const ComplexMatrix a = g * g.adjoint() + ComplexMatrix::identity(4);
    const ComplexMatrix l = cholesky(a);
    CHECK(max_abs_diff(l * l.adjoint(), a) < 1e-12);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = r + 1; c < 4; ++c)
            CHECK(std::abs(l(r, c)) == 0.0);
}

TEST_CASE("solve_hpd and inverse_hpd agree with the defining identity")
{
    const ComplexMatrix g = random_matrix(2, 3, 3);
    const ComplexMatrix a = g * g.adjoint() + 0.5 * ComplexMatrix::identity(3);
    const ComplexMatrix b = random_matrix(3, 3, 2);
    CHECK(max_abs_diff(a * solve_hpd(a, b), b) < 1e-11);
    CHECK(max_abs_diff(a * inverse_hpd(a), ComplexMatrix::identity(3)) < 1e-11);
}

TEST_CASE("thin QR has orthonormal Q and upper-triangular R with real diagonal")
{
    const ComplexMatrix a = random_matrix(4, 5, 3);
    const auto [q, r] = qr(a);
    CHECK(q.rows() == 5);
    CHECK(q.cols() == 3);
    CHECK(is_orthonormal(q, 1e-12));
    CHECK(max_abs_diff(q * r, a) < 1e-12);
    for (std::size_t i = 0; i < 3; ++i)
    {
        CHECK(r(i, i).imag() == 0.0);
        CHECK(r(i, i).real() >= 0.0);
        for (std::size_t j = 0; j < i; ++j)
            CHECK(std::abs(r(i, j)) == 0.0);
    }
}

TEST_CASE("singular values of a 2x2 matrix match the eigenvalues of its Gram matrix")
{
    const ComplexMatrix a{{{1.0, 2.0}, {0.5, -1.0}}, {{-0.3, 0.0}, {2.0, 1.5}}};
    const ComplexMatrix g = a.adjoint() * a;
    const double tr = g(0, 0).real() + g(1, 1).real();
    const double det = (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0)).real();
    const double disc = std::sqrt(tr * tr / 4.0 - det);
    const auto sv = singular_values(a);
    REQUIRE(sv.size() == 2);
    CHECK(sv[0] == doctest::Approx(std::sqrt(tr / 2.0 + disc)).epsilon(1e-13));
    CHECK(sv[1] == doctest::Approx(std::sqrt(tr / 2.0 - disc)).epsilon(1e-13));
}

TEST_CASE("compact SVD reconstructs rectangular matrices of both orientations")
{
    for (auto [r, c] : {std::pair<std::size_t, std::size_t>{2, 5}, {5, 2}, {3, 3}, {1, 4}, {4, 1}})
    {
        CAPTURE(r);
        CAPTURE(c);
        const ComplexMatrix a = random_matrix(10 + r * 7 + c, r, c);
        const SvdResult s = compact_svd(a);
        const std::size_t k = std::min(r, c);
        CHECK(s.w.rows() == r);
        CHECK(s.w.cols() == k);
        CHECK(s.v.rows() == c);
        CHECK(s.v.cols() == k);
        CHECK(is_orthonormal(s.w, 1e-11));
        CHECK(is_orthonormal(s.v, 1e-11));
        CHECK(max_abs_diff(s.w * s.lambda * s.v.adjoint(), a) < 1e-11);
        const auto sv = s.singular_values();
        for (std::size_t i = 1; i < sv.size(); ++i)
            CHECK(sv[i - 1] >= sv[i]);
        double energy = 0.0;
        for (double x : sv)
            energy += x * x;
        CHECK(energy == doctest::Approx(frobenius_norm_sq(a)).epsilon(1e-12));
    }
}

TEST_CASE("SVD handles rank-deficient input")
{
    const ComplexMatrix u{{1.0}, {Complex(0.0, 1.0)}, {2.0}};
    const ComplexMatrix v{{1.0, -1.0, Complex(0.0, 2.0)}};
    const ComplexMatrix a = u * v; // rank one
    const auto sv = singular_values(a);
    REQUIRE(sv.size() == 3);
    CHECK(sv[0] == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(sv[1] < 1e-12);
    CHECK(sv[2] < 1e-12);
}

TEST_CASE("orthonormal complement spans the orthogonal subspace")
{
    RngStream rng(5, 1);
    const ComplexMatrix basis = sample_stiefel(rng, 5, 2);
    const ComplexMatrix comp = orthonormal_complement(basis);
    CHECK(comp.rows() == 5);
    CHECK(comp.cols() == 3);
    CHECK(is_orthonormal(comp, 1e-12));
    CHECK(frobenius_norm_sq(basis.adjoint() * comp) < 1e-24);
    CHECK(orthonormal_complement(ComplexMatrix(4, 0)).cols() == 4);
}

TEST_CASE("zero-sized blocks compose")
{
    const ComplexMatrix a = random_matrix(6, 2, 3);
    const ComplexMatrix none(0, 3);
    CHECK(vstack(a, none) == a);
    CHECK(vstack(none, a) == a);
    CHECK(gram_rows(none).rows() == 0);
    CHECK((ComplexMatrix(2, 0) * ComplexMatrix(0, 4)) == ComplexMatrix::zeros(2, 4));
    const ComplexMatrix blocks[] = {ComplexMatrix::identity(2), ComplexMatrix(0, 0), 2.0 * ComplexMatrix::identity(1)};
    const ComplexMatrix d = block_diag(blocks);
    CHECK(d == ComplexMatrix::diagonal({1.0, 1.0, 2.0}));
}

TEST_CASE("shape mismatches throw")
{
    CHECK_THROWS_AS(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), LinalgError);
    CHECK_THROWS_AS(ComplexMatrix(2, 3) + ComplexMatrix(3, 2), LinalgError);
    CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), LinalgError);
}

TEST_CASE("adjoint and gram_rows")
{
    const ComplexMatrix a{{Complex(1, 1), 2.0}, {0.0, Complex(0, -3)}};
    const ComplexMatrix ah = a.adjoint();
    CHECK(ah(0, 0) == Complex(1, -1));
    CHECK(ah(1, 1) == Complex(0, 3));
    CHECK(max_abs_diff(gram_rows(a), a * ah) < 1e-15);
    CHECK(is_hermitian(gram_rows(a)));
}
