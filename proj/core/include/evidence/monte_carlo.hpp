#pragma once

#include "evidence/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

namespace evidence {

/// Proportion estimate with its binomial standard error sqrt(p(1-p)/reps).
struct McProbability {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t reps = 0;
};

McProbability make_proportion(std::uint64_t hits, std::uint64_t reps);

/// Mean estimate with the sample standard error.
struct McMean {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t reps = 0;
};

McMean make_mean(const std::vector<double>& values);

/// Replications are split into fixed-size blocks. Block b of stream s draws
/// from make_rng(seed, s, b), and block results are merged in block order,
/// so the outcome does not depend on how many workers ran.
inline constexpr std::uint64_t kMcBlockSize = 4096;

/// Calls fn(i) for i in [0, count) on up to `workers` threads.
template <class Fn>
void parallel_for(std::uint64_t count, unsigned workers, Fn fn) {
    workers = std::max(1u, workers);
    if (workers == 1 || count <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    const auto n = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));
    pool.reserve(n);
    for (unsigned w = 0; w < n; ++w) {
        pool.emplace_back([&] {
            for (std::uint64_t i = next++; i < count; i = next++) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

/// Runs `body(rng, count) -> Acc` over `reps` replications and sums the
/// per-block accumulators in block order. Acc needs `operator+=`.
template <class Acc, class Body>
Acc run_blocks(RngSeed seed, std::uint64_t stream, std::uint64_t reps,
               unsigned workers, Body body) {
    const std::uint64_t blocks = (reps + kMcBlockSize - 1) / kMcBlockSize;
    std::vector<Acc> partial(blocks);
    parallel_for(blocks, workers, [&](std::uint64_t b) {
        const std::uint64_t begin = b * kMcBlockSize;
        const std::uint64_t count = std::min(kMcBlockSize, reps - begin);
        Rng rng = make_rng(seed, stream, b);
        partial[b] = body(rng, count);
    });
    Acc total{};
    for (auto& p : partial) total += p;
    return total;
}

/// Hit counter accumulator.
struct HitCount {
    std::uint64_t hits = 0;
    std::uint64_t reps = 0;
    HitCount& operator+=(const HitCount& o) {
        hits += o.hits;
        reps += o.reps;
        return *this;
    }
};

}  // namespace evidence
