#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace moprl {

// Ordered parallel map: results land at their input positions, so the output
// is deterministic regardless of scheduling. The first worker exception is
// rethrown after all threads join.
template <typename In, typename F>
auto parallel_map(const std::vector<In>& inputs, F&& fn, unsigned max_threads = 0)
    -> std::vector<decltype(fn(inputs.front()))> {
    using Out = decltype(fn(inputs.front()));
    std::vector<std::optional<Out>> buffer(inputs.size());
    if (!inputs.empty()) {
        unsigned workers = max_threads ? max_threads : std::thread::hardware_concurrency();
        if (workers == 0) workers = 1;
        if (workers > inputs.size()) workers = static_cast<unsigned>(inputs.size());

        std::atomic<size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto body = [&] {
            while (true) {
                const size_t i = next.fetch_add(1);
                if (i >= inputs.size()) return;
                try {
                    buffer[i].emplace(fn(inputs[i]));
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        };
        if (workers <= 1) {
            body();
        } else {
            std::vector<std::thread> threads;
            threads.reserve(workers);
            for (unsigned t = 0; t < workers; ++t) threads.emplace_back(body);
            for (std::thread& t : threads) t.join();
        }
        if (error) std::rethrow_exception(error);
    }
    std::vector<Out> out;
    out.reserve(inputs.size());
    for (auto& slot : buffer) out.push_back(std::move(*slot));
    return out;
}

}  // namespace moprl
