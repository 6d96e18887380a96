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

#include "dofregion/parallel.hpp"

#include <atomic>

namespace dofregion
{

namespace
{
std::atomic<std::size_t> g_workers{0};
}

std::size_t worker_count() noexcept
{
    const std::size_t n = g_workers.load(std::memory_order_relaxed);
    if (n != 0)
        return n;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void set_worker_count(std::size_t n) noexcept
{
    g_workers.store(n, std::memory_order_relaxed);
}

double pairwise_sum(std::span<const double> xs) noexcept
{
    if (xs.size() <= 8)
    {
        double s = 0.0;
        for (double x : xs)
            s += x;
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

} // namespace dofregion
