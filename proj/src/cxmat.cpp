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

#include "dofregion/cxmat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace dofregion
{

namespace
{

std::string shape(const ComplexMatrix& a)
{
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw LinalgError(std::string(what) + ": shape mismatch " + shape(a) + " vs " + shape(b));
}

void require_square(const ComplexMatrix& a, const char* what)
{
    if (a.rows() != a.cols())
        throw LinalgError(std::string(what) + ": expected a square matrix, got " + shape(a));
}

double column_norm_sq(const ComplexMatrix& a, std::size_t c)
{
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        s += std::norm(a(r, c));
    return s;
}

} // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols)
        throw LinalgError("ComplexMatrix: entry count does not match " + std::to_string(rows) + "x" +
                          std::to_string(cols));
    for (const auto& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw LinalgError("ComplexMatrix: non-finite entry");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows)
    {
        if (row.size() != cols_)
            throw LinalgError("ComplexMatrix: ragged initializer");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n)
{
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values)
{
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values)
{
    return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const
{
    ComplexMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = std::conj((*this)(r, c));
    return t;
}

ComplexMatrix ComplexMatrix::column(std::size_t c) const
{
    return columns(c, 1);
}

ComplexMatrix ComplexMatrix::columns(std::size_t first, std::size_t count) const
{
    if (first + count > cols_)
        throw LinalgError("columns: range out of bounds for " + shape(*this));
    ComplexMatrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c)
            out(r, c) = (*this)(r, first + c);
    return out;
}

ComplexMatrix ComplexMatrix::rows_range(std::size_t first, std::size_t count) const
{
    if (first + count > rows_)
        throw LinalgError("rows_range: range out of bounds for " + shape(*this));
    ComplexMatrix out(count, cols_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_), count * cols_, out.data_.begin());
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other)
{
    require_same_shape(*this, other, "operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other)
{
    require_same_shape(*this, other, "operator-=");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) noexcept
{
    for (auto& z : data_)
        z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b)
{
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b)
{
    a -= b;
    return a;
}

ComplexMatrix operator*(Complex s, ComplexMatrix a)
{
    a *= s;
    return a;
}

// ---------------------------------------------------------------------------
// Products and assembly

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.cols() != b.rows())
        throw LinalgError("matmul: inner dimensions differ, " + shape(a) + " * " + shape(b));
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
        {
            const Complex aik = a(i, k);
            if (aik == Complex{})
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexMatrix gram_rows(const ComplexMatrix& a)
{
    const std::size_t n = a.rows();
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
        {
            Complex s{};
            for (std::size_t k = 0; k < a.cols(); ++k)
                s += a(i, k) * std::conj(a(j, k));
            g(i, j) = s;
            g(j, i) = std::conj(s);
        }
    for (std::size_t i = 0; i < n; ++i)
        g(i, i) = g(i, i).real();
    return g;
}

ComplexMatrix vstack(const ComplexMatrix& top, const ComplexMatrix& bottom)
{
    if (top.cols() != bottom.cols())
        throw LinalgError("vstack: column counts differ, " + shape(top) + " / " + shape(bottom));
    ComplexMatrix out(top.rows() + bottom.rows(), top.cols());
    auto it = std::copy(top.entries().begin(), top.entries().end(), out.entries().begin());
    std::copy(bottom.entries().begin(), bottom.entries().end(), it);
    return out;
}

ComplexMatrix hstack(const ComplexMatrix& left, const ComplexMatrix& right)
{
    if (left.rows() != right.rows())
        throw LinalgError("hstack: row counts differ, " + shape(left) + " | " + shape(right));
    ComplexMatrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r)
    {
        for (std::size_t c = 0; c < left.cols(); ++c)
            out(r, c) = left(r, c);
        for (std::size_t c = 0; c < right.cols(); ++c)
            out(r, left.cols() + c) = right(r, c);
    }
    return out;
}

ComplexMatrix block_diag(std::span<const ComplexMatrix> blocks)
{
    if (blocks.empty())
        throw LinalgError("block_diag: empty block list");
    std::size_t rows = 0;
    std::size_t cols = 0;
    for (const auto& b : blocks)
    {
        rows += b.rows();
        cols += b.cols();
    }
    ComplexMatrix out(rows, cols);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& b : blocks)
    {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                out(r0 + r, c0 + c) = b(r, c);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

double frobenius_norm_sq(const ComplexMatrix& a) noexcept
{
    double s = 0.0;
    for (const auto& z : a.entries())
        s += std::norm(z);
    return s;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    return m;
}

// ---------------------------------------------------------------------------
// Hermitian positive-definite routines

bool is_hermitian(const ComplexMatrix& a, double rel_tol)
{
    if (a.rows() != a.cols())
        return false;
    double scale = 1.0;
    for (const auto& z : a.entries())
        scale = std::max(scale, std::abs(z));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > rel_tol * scale)
                return false;
    return true;
}

ComplexMatrix cholesky(const ComplexMatrix& a)
{
    require_square(a, "cholesky");
    if (!is_hermitian(a))
        throw LinalgError("cholesky: matrix is not Hermitian");
    const std::size_t n = a.rows();
    ComplexMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j)
    {
        double d = a(j, j).real();
        for (std::size_t k = 0; k < j; ++k)
            d -= std::norm(l(j, k));
        if (!(d > 0.0))
            throw LinalgError("cholesky: non-positive pivot at index " + std::to_string(j) +
                              " (matrix is not positive definite)");
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i)
        {
            Complex s = a(i, j);
            for (std::size_t k = 0; k < j; ++k)
                s -= l(i, k) * std::conj(l(j, k));
            l(i, j) = s / ljj;
        }
    }
    return l;
}

double logdet_hpd(const ComplexMatrix& a)
{
    const ComplexMatrix l = cholesky(a);
    double s = 0.0;
    for (std::size_t i = 0; i < l.rows(); ++i)
        s += std::log2(l(i, i).real());
    return 2.0 * s;
}

ComplexMatrix solve_hpd(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (b.rows() != a.rows())
        throw LinalgError("solve_hpd: right-hand side has " + shape(b) + ", system is " + shape(a));
    const ComplexMatrix l = cholesky(a);
    const std::size_t n = l.rows();
    ComplexMatrix x = b;
    for (std::size_t c = 0; c < x.cols(); ++c)
    {
        for (std::size_t i = 0; i < n; ++i)
        {
            Complex s = x(i, c);
            for (std::size_t k = 0; k < i; ++k)
                s -= l(i, k) * x(k, c);
            x(i, c) = s / l(i, i);
        }
        for (std::size_t ii = n; ii-- > 0;)
        {
            Complex s = x(ii, c);
            for (std::size_t k = ii + 1; k < n; ++k)
                s -= std::conj(l(k, ii)) * x(k, c);
            x(ii, c) = s / l(ii, ii);
        }
    }
    return x;
}

ComplexMatrix inverse_hpd(const ComplexMatrix& a)
{
    return solve_hpd(a, ComplexMatrix::identity(a.rows()));
}

// ---------------------------------------------------------------------------
// QR

QrResult qr(const ComplexMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (m < n)
        throw LinalgError("qr: expected rows >= cols, got " + shape(a));

    ComplexMatrix r = a;
    std::vector<std::vector<Complex>> reflectors(n);

    for (std::size_t k = 0; k < n; ++k)
    {
        double norm_x = 0.0;
        for (std::size_t i = k; i < m; ++i)
            norm_x += std::norm(r(i, k));
        norm_x = std::sqrt(norm_x);
        if (norm_x == 0.0)
            continue;

        const Complex x0 = r(k, k);
        const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex{1.0};
        const Complex alpha = -phase * norm_x;

        std::vector<Complex> v(m - k);
        for (std::size_t i = k; i < m; ++i)
            v[i - k] = r(i, k);
        v[0] -= alpha;
        double vnorm_sq = 0.0;
        for (const auto& z : v)
            vnorm_sq += std::norm(z);
        if (vnorm_sq == 0.0)
            continue;

        for (std::size_t j = k; j < n; ++j)
        {
            Complex s{};
            for (std::size_t i = k; i < m; ++i)
                s += std::conj(v[i - k]) * r(i, j);
            s *= 2.0 / vnorm_sq;
            for (std::size_t i = k; i < m; ++i)
                r(i, j) -= s * v[i - k];
        }
        for (auto& z : v)
            z /= std::sqrt(vnorm_sq);
        reflectors[k] = std::move(v);
    }

    ComplexMatrix q(m, n);
    for (std::size_t i = 0; i < n; ++i)
        q(i, i) = 1.0;
    for (std::size_t k = n; k-- > 0;)
    {
        const auto& v = reflectors[k];
        if (v.empty())
            continue;
        for (std::size_t j = 0; j < n; ++j)
        {
            Complex s{};
            for (std::size_t i = k; i < m; ++i)
                s += std::conj(v[i - k]) * q(i, j);
            s *= 2.0;
            for (std::size_t i = k; i < m; ++i)
                q(i, j) -= s * v[i - k];
        }
    }

    ComplexMatrix rr(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            rr(i, j) = r(i, j);

    // Real non-negative diagonal on R; the phase moves into Q's column.
    for (std::size_t i = 0; i < n; ++i)
    {
        const Complex d = rr(i, i);
        const double mag = std::abs(d);
        if (mag == 0.0)
            continue;
        const Complex ph = d / mag;
        for (std::size_t j = i; j < n; ++j)
            rr(i, j) *= std::conj(ph);
        rr(i, i) = mag;
        for (std::size_t row = 0; row < m; ++row)
            q(row, i) *= ph;
    }
    return {std::move(q), std::move(rr)};
}

// ---------------------------------------------------------------------------
// SVD

std::vector<double> SvdResult::singular_values() const
{
    std::vector<double> s(lambda.rows());
    for (std::size_t i = 0; i < s.size(); ++i)
        s[i] = lambda(i, i).real();
    return s;
}

namespace
{

// Appends unit vectors orthogonal to all accepted columns into the slots
// flagged in `missing`.
void complete_orthonormal(ComplexMatrix& u, const std::vector<bool>& missing)
{
    const std::size_t m = u.rows();
    std::vector<bool> accepted(u.cols());
    for (std::size_t c = 0; c < u.cols(); ++c)
        accepted[c] = !missing[c];

    for (std::size_t slot = 0; slot < u.cols(); ++slot)
    {
        if (accepted[slot])
            continue;
        std::vector<Complex> best;
        double best_norm = -1.0;
        for (std::size_t e = 0; e < m; ++e)
        {
            std::vector<Complex> cand(m);
            cand[e] = 1.0;
            for (int pass = 0; pass < 2; ++pass)
                for (std::size_t c = 0; c < u.cols(); ++c)
                {
                    if (!accepted[c])
                        continue;
                    Complex proj{};
                    for (std::size_t i = 0; i < m; ++i)
                        proj += std::conj(u(i, c)) * cand[i];
                    for (std::size_t i = 0; i < m; ++i)
                        cand[i] -= proj * u(i, c);
                }
            double nrm = 0.0;
            for (const auto& z : cand)
                nrm += std::norm(z);
            if (nrm > best_norm)
            {
                best_norm = nrm;
                best = std::move(cand);
            }
        }
        const double scale = 1.0 / std::sqrt(best_norm);
        for (std::size_t i = 0; i < m; ++i)
            u(i, slot) = best[i] * scale;
        accepted[slot] = true;
    }
}

// One-sided Jacobi on a tall matrix (rows >= cols).
SvdResult jacobi_svd_tall(const ComplexMatrix& a)
{
    const std::size_t n = a.rows();
    const std::size_t k = a.cols();
    ComplexMatrix work = a;
    ComplexMatrix v = ComplexMatrix::identity(k);
    constexpr double eps = 1e-15;

    bool converged = k < 2;
    for (int sweep = 0; sweep < tol::max_svd_sweeps && !converged; ++sweep)
    {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < k; ++p)
            for (std::size_t q = p + 1; q < k; ++q)
            {
                double alpha = 0.0;
                double beta = 0.0;
                Complex gamma{};
                for (std::size_t i = 0; i < n; ++i)
                {
                    alpha += std::norm(work(i, p));
                    beta += std::norm(work(i, q));
                    gamma += std::conj(work(i, p)) * work(i, q);
                }
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= eps * std::sqrt(alpha * beta))
                    continue;
                rotated = true;

                const Complex ph = gamma / g;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;

                // Column q is first rotated by conj(ph) so that the pair has a
                // real inner product, then a real Givens rotation is applied.
                auto rotate = [&](ComplexMatrix& m) {
                    for (std::size_t i = 0; i < m.rows(); ++i)
                    {
                        const Complex xp = m(i, p);
                        const Complex xq = m(i, q) * std::conj(ph);
                        m(i, p) = c * xp - s * xq;
                        m(i, q) = s * xp + c * xq;
                    }
                };
                rotate(work);
                rotate(v);
            }
        converged = !rotated;
    }
    if (!converged)
        throw LinalgError("compact_svd: Jacobi sweeps did not converge within " +
                          std::to_string(tol::max_svd_sweeps) + " sweeps");

    std::vector<double> sigma(k);
    for (std::size_t j = 0; j < k; ++j)
        sigma[j] = std::sqrt(column_norm_sq(work, j));

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    const double sigma_max = k == 0 ? 0.0 : sigma[order[0]];
    const double negligible = sigma_max * std::numeric_limits<double>::epsilon() * static_cast<double>(std::max(n, k));

    SvdResult out{ComplexMatrix(n, k), ComplexMatrix(k, k), ComplexMatrix(k, k)};
    std::vector<bool> missing(k, false);
    for (std::size_t j = 0; j < k; ++j)
    {
        const std::size_t src = order[j];
        out.lambda(j, j) = sigma[src];
        for (std::size_t i = 0; i < k; ++i)
            out.v(i, j) = v(i, src);
        if (sigma[src] <= negligible || sigma[src] == 0.0)
        {
            missing[j] = true;
            continue;
        }
        for (std::size_t i = 0; i < n; ++i)
            out.w(i, j) = work(i, src) / sigma[src];
    }
    if (std::find(missing.begin(), missing.end(), true) != missing.end())
        complete_orthonormal(out.w, missing);
    return out;
}

} // namespace

SvdResult compact_svd(const ComplexMatrix& a)
{
    if (a.rows() >= a.cols())
        return jacobi_svd_tall(a);
    SvdResult t = jacobi_svd_tall(a.adjoint());
    return {std::move(t.v), std::move(t.lambda), std::move(t.w)};
}

std::vector<double> singular_values(const ComplexMatrix& a)
{
    return compact_svd(a).singular_values();
}

ComplexMatrix orthonormal_complement(const ComplexMatrix& basis)
{
    const std::size_t m = basis.rows();
    const std::size_t k = basis.cols();
    if (k > m)
        throw LinalgError("orthonormal_complement: basis has more columns than rows");
    ComplexMatrix u = hstack(basis, ComplexMatrix(m, m - k));
    std::vector<bool> missing(m, false);
    for (std::size_t c = k; c < m; ++c)
        missing[c] = true;
    complete_orthonormal(u, missing);
    return u.columns(k, m - k);
}

} // namespace dofregion
