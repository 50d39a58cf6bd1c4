#ifndef DBAR_KERNELS_HPP
#define DBAR_KERNELS_HPP

#include <atomic>
#include <cstdint>
#include <exception>
#include <vector>

#include <omp.h>

#include "dbar/types.hpp"

// Reduction kernels shared by the quadrature and grid sweeps. Every kernel
// has a serial reference path and an OpenMP path; the serial path is the
// ground truth the parallel one is tested against (see
// tests/test_parallel_consistency.cpp and tools/bench_kernels.cpp).

namespace dbar::kernels {

enum class Exec { Serial, Parallel };

/// Process-wide default execution mode for the reduction kernels.
Exec& default_exec();

namespace detail {

// Runs f(i) for i in [0,n) under OpenMP, accumulating per-thread partial
// sums that are combined in thread order, so results are reproducible for
// a fixed thread count. Exceptions thrown by f are captured and rethrown.
template <class T, class F>
T omp_sum(std::int64_t n, F&& f) {
    const int max_threads = omp_get_max_threads();
    std::vector<T> partial(static_cast<std::size_t>(max_threads), T{});
    std::exception_ptr error;
    std::atomic<bool> failed{false};

#pragma omp parallel
    {
        const int tid = omp_get_thread_num();
        T local{};
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                local += f(i);
            } catch (...) {
                bool expected = false;
                if (failed.compare_exchange_strong(expected, true)) {
#pragma omp critical(dbar_kernels_error)
                    error = std::current_exception();
                }
            }
        }
        partial[static_cast<std::size_t>(tid)] = local;
    }

    if (failed.load()) std::rethrow_exception(error);
    T total{};
    for (const T& t : partial) total += t;
    return total;
}

template <class T, class F>
T serial_sum(std::int64_t n, F&& f) {
    T total{};
    for (std::int64_t i = 0; i < n; ++i) total += f(i);
    return total;
}

}  // namespace detail

/// Sum of f(i), i in [0,n), complex-valued.
template <class F>
Complex csum(std::int64_t n, F&& f, Exec mode) {
    if (mode == Exec::Parallel && n > 4096)
        return detail::omp_sum<Complex>(n, std::forward<F>(f));
    return detail::serial_sum<Complex>(n, std::forward<F>(f));
}

template <class F>
Complex csum(std::int64_t n, F&& f) {
    return csum(n, std::forward<F>(f), default_exec());
}

/// Sum of f(i), i in [0,n), real-valued.
template <class F>
double rsum(std::int64_t n, F&& f, Exec mode) {
    if (mode == Exec::Parallel && n > 4096)
        return detail::omp_sum<double>(n, std::forward<F>(f));
    return detail::serial_sum<double>(n, std::forward<F>(f));
}

template <class F>
double rsum(std::int64_t n, F&& f) {
    return rsum(n, std::forward<F>(f), default_exec());
}

/// Fills out[i] = f(i) for i in [0,n), parallel over i.
template <class F>
void map_indices(std::int64_t n, std::vector<Complex>& out, F&& f, Exec mode) {
    out.resize(static_cast<std::size_t>(n));
    if (mode == Exec::Parallel) {
        std::exception_ptr error;
        std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < n; ++i) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                out[static_cast<std::size_t>(i)] = f(i);
            } catch (...) {
                bool expected = false;
                if (failed.compare_exchange_strong(expected, true)) {
#pragma omp critical(dbar_kernels_map_error)
                    error = std::current_exception();
                }
            }
        }
        if (failed.load()) std::rethrow_exception(error);
    } else {
        for (std::int64_t i = 0; i < n; ++i)
            out[static_cast<std::size_t>(i)] = f(i);
    }
}

}  // namespace dbar::kernels

#endif
