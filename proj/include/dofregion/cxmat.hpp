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

#ifndef DOFREGION_CXMAT_HPP
#define DOFREGION_CXMAT_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace dofregion
{

using Complex = std::complex<double>;

/// Raised for shape mismatches, non-Hermitian or indefinite inputs and
/// non-convergent iterations in the dense kernel.
class LinalgError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

namespace tol
{
inline constexpr double herm = 1e-8;      // relative Hermitian symmetry
inline constexpr double recon = 1e-10;    // times ||A||_F
inline constexpr double orth = 1e-10;
inline constexpr int max_svd_sweeps = 100;
} // namespace tol

/// Dense row-major complex matrix. Zero-sized dimensions are allowed so that
/// empty conditioning blocks (no rows, no columns) compose naturally.
class ComplexMatrix
{
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::initializer_list<double> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return data_; }
    std::span<Complex> entries() noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix column(std::size_t c) const;
    ComplexMatrix columns(std::size_t first, std::size_t count) const;
    ComplexMatrix rows_range(std::size_t first, std::size_t count) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex s) noexcept;

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

/// a * a^H, the Gram matrix of the rows.
ComplexMatrix gram_rows(const ComplexMatrix& a);

/// Vertical concatenation [top; bottom]; column counts must agree.
ComplexMatrix vstack(const ComplexMatrix& top, const ComplexMatrix& bottom);
/// Horizontal concatenation [left, right]; row counts must agree.
ComplexMatrix hstack(const ComplexMatrix& left, const ComplexMatrix& right);

ComplexMatrix block_diag(std::span<const ComplexMatrix> blocks);

double frobenius_norm_sq(const ComplexMatrix& a) noexcept;
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double rel_tol = tol::herm);

/// Lower-triangular Cholesky factor L with a = L L^H. Throws LinalgError on a
/// non-Hermitian input or a non-positive pivot.
ComplexMatrix cholesky(const ComplexMatrix& a);

/// log2 det(a) of a Hermitian positive-definite matrix, via Cholesky.
/// An empty (0x0) matrix has log-determinant 0.
double logdet_hpd(const ComplexMatrix& a);

/// Solves a x = b for HPD a.
ComplexMatrix solve_hpd(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix inverse_hpd(const ComplexMatrix& a);

struct QrResult
{
    ComplexMatrix q; // rows x cols, orthonormal columns
    ComplexMatrix r; // cols x cols, upper triangular, real non-negative diagonal
};

/// Thin Householder QR of a tall matrix (rows >= cols).
QrResult qr(const ComplexMatrix& a);

struct SvdResult
{
    ComplexMatrix w;      // N x K
    ComplexMatrix lambda; // K x K real diagonal, descending, non-negative
    ComplexMatrix v;      // M x K

    std::vector<double> singular_values() const;
};

/// Compact SVD a = w * lambda * v^H with K = min(N, M), computed by
/// one-sided (Hestenes) Jacobi sweeps.
SvdResult compact_svd(const ComplexMatrix& a);

/// Singular values only, descending.
std::vector<double> singular_values(const ComplexMatrix& a);

/// Orthonormal basis of the orthogonal complement of the columns of `basis`
/// (which must be orthonormal). Returns an m x (m - k) matrix.
ComplexMatrix orthonormal_complement(const ComplexMatrix& basis);

} // namespace dofregion

#endif // DOFREGION_CXMAT_HPP
