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

#ifndef DOFREGION_PARALLEL_HPP
#define DOFREGION_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

namespace dofregion
{

/// Worker count used by map_trials. 0 means hardware concurrency.
std::size_t worker_count() noexcept;
void set_worker_count(std::size_t n) noexcept;

/// Evaluates fn(0), ..., fn(n-1) on a pool of threads and returns the results
/// by index, so the output never depends on the worker count.
template <class Fn>
auto map_trials(std::size_t n, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>>
{
    using T = std::invoke_result_t<Fn&, std::size_t>;
    std::vector<T> out(n);
    const std::size_t workers = std::min(worker_count(), n);
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = fn(i);
        return out;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
    {
        pool.emplace_back([&, w] {
            try
            {
                for (std::size_t i = w; i < n; i += workers)
                    out[i] = fn(i);
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

/// Pairwise (cascade) summation; the association order depends only on the
/// input length.
double pairwise_sum(std::span<const double> xs) noexcept;

} // namespace dofregion

#endif // DOFREGION_PARALLEL_HPP
