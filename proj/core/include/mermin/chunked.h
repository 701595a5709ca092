// Copyright 2026 The Mermin Device Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MERMIN_CHUNKED_H
#define MERMIN_CHUNKED_H

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "mermin/rng.h"

namespace mermin {

/// Parallelism knobs shared by every simulator.
///
/// A run of n items is cut into ceil(n / chunk_size) chunks; chunk i draws from
/// Rng(derive_seed(seed, i)). Results therefore depend on (seed, chunk_size)
/// only, never on the thread count.
struct ExecutionOptions {
    unsigned threads = 1;
    std::uint64_t chunk_size = 1 << 16;
};

/// Runs `body(rng, begin, count, acc)` over every chunk and merges the
/// per-chunk accumulators with `acc += other` in chunk order.
template <typename Acc, typename Body>
Acc run_chunked(std::uint64_t total, std::uint64_t seed, const ExecutionOptions &opts, Body body) {
    const std::uint64_t chunk = std::max<std::uint64_t>(opts.chunk_size, 1);
    const std::uint64_t num_chunks = (total + chunk - 1) / chunk;
    std::vector<Acc> parts(num_chunks);
    auto work = [&](std::uint64_t c) {
        Rng rng(derive_seed(seed, c));
        const std::uint64_t begin = c * chunk;
        body(rng, begin, std::min(chunk, total - begin), parts[c]);
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(num_chunks)));
    if (threads <= 1) {
        for (std::uint64_t c = 0; c < num_chunks; ++c) {
            work(c);
        }
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::uint64_t c = next++; c < num_chunks; c = next++) {
                    work(c);
                }
            });
        }
    }

    Acc result{};
    for (const Acc &part : parts) {
        result += part;
    }
    return result;
}

}  // namespace mermin

#endif
