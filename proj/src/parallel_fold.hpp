#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace lhamil::detail {

// Folds indices [0, count) into one Part. The range is cut into a fixed
// number of contiguous chunks independent of `workers`; each chunk is folded
// from a fresh Part and the parts are merged in chunk order, so the result
// does not depend on the worker count as long as `merge` is associative.
template <class Part, class Make, class Visit, class Merge>
Part parallel_fold(std::uint64_t count, int workers, Make make, Visit visit, Merge merge) {
    constexpr std::uint64_t kChunks = 64;
    const std::uint64_t chunks = std::min<std::uint64_t>(kChunks, std::max<std::uint64_t>(count, 1));
    std::vector<Part> parts;
    parts.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) parts.push_back(make());

    auto run_chunk = [&](std::uint64_t c) {
        const std::uint64_t lo = count * c / chunks;
        const std::uint64_t hi = count * (c + 1) / chunks;
        for (std::uint64_t i = lo; i < hi; ++i) visit(parts[c], i);
    };

    const int threads = std::max(1, std::min<int>(workers, static_cast<int>(chunks)));
    if (threads == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::uint64_t c = t; c < chunks; c += threads) run_chunk(c);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    Part total = std::move(parts.front());
    for (std::uint64_t c = 1; c < chunks; ++c) merge(total, parts[c]);
    return total;
}

}  // namespace lhamil::detail
