#pragma once

// Order-preserving parallel map over a vector of work items.

#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace fareyplumb {

/// Applies f to every item using up to `jobs` threads. Results are returned
/// in input order. If any call throws, the exception of the lowest-indexed
/// failing item is rethrown after all threads finish.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, unsigned jobs, F f) -> std::vector<std::invoke_result_t<F&, const T&>> {
    using R = std::invoke_result_t<F&, const T&>;
    std::vector<std::optional<R>> slots(items.size());
    std::vector<std::exception_ptr> errors(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                slots[i].emplace(f(items[i]));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (jobs <= 1 || items.size() <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs && t < items.size(); ++t) pool.emplace_back(worker);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<R> out;
    out.reserve(items.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace fareyplumb
