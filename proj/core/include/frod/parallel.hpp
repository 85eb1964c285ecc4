/*
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <functional>

namespace frod {

/// Worker cap: FROD_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Overrides FROD_THREADS for the current process; 0 restores the default.
void set_thread_count(std::size_t n);

/// Runs body(i) for i in [0, n). Each index runs on exactly one worker, so
/// results written to slot i are deterministic. Calls made from inside a
/// worker run serially to avoid oversubscription. The first exception thrown
/// by any body is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace frod
