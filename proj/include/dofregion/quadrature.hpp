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

#ifndef DOFREGION_QUADRATURE_HPP
#define DOFREGION_QUADRATURE_HPP

#include <cmath>
#include <numbers>

namespace dofregion
{

namespace detail
{

template <class F>
double simpson_step(F& f, double a, double fa, double b, double fb, double m, double fm, double whole, double tol,
                    int depth)
{
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
template <class F>
double integrate(F&& f, double a, double b, double tol = 1e-8, int max_depth = 48)
{
    if (a == b)
        return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

/// E[f(Z)] for Z ~ N(0, 1), truncated to |Z| <= 10.
template <class F>
double gaussian_expectation(F&& f, double tol = 1e-11)
{
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    auto weighted = [&](double z) { return f(z) * norm * std::exp(-0.5 * z * z); };
    // Split at 0 so the first Simpson estimate cannot miss the bulk.
    return integrate(weighted, -10.0, 0.0, 0.5 * tol) + integrate(weighted, 0.0, 10.0, 0.5 * tol);
}

} // namespace dofregion

#endif // DOFREGION_QUADRATURE_HPP
