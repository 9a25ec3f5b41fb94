#pragma once

// Data-parallel search kernels. Each kernel has a serial reference and an
// OpenMP version; both return identical results (the parallel find returns the
// smallest satisfying index, never "some" index), so callers stay deterministic
// regardless of thread count.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>

#include <omp.h>

namespace maxmin {

enum class Execution { Serial, Parallel };

template <class Pred>
std::optional<std::size_t> find_first_serial(std::size_t n, Pred&& pred) {
  for (std::size_t i = 0; i < n; ++i) {
    if (pred(i)) return i;
  }
  return std::nullopt;
}

namespace detail {

// Captures the first exception thrown inside an OpenMP region so it can be
// rethrown on the calling thread.
class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mu_);
      if (!error_) error_ = std::current_exception();
    }
  }
  bool failed() const noexcept { return static_cast<bool>(error_); }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr error_;
};

}  // namespace detail

/// Smallest i < n with pred(i). Scans in blocks so an early hit stops the
/// search without evaluating the whole range.
template <class Pred>
std::optional<std::size_t> find_first_parallel(std::size_t n, Pred&& pred, std::size_t block = 4096) {
  if (omp_get_max_threads() <= 1) return find_first_serial(n, pred);
  detail::ExceptionSlot slot;
  const std::size_t step = block * static_cast<std::size_t>(omp_get_max_threads());
  for (std::size_t base = 0; base < n; base += step) {
    const auto end = static_cast<std::int64_t>(std::min(n, base + step));
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : best)
    for (std::int64_t i = static_cast<std::int64_t>(base); i < end; ++i) {
      if (i >= best) continue;
      slot.run([&] {
        if (pred(static_cast<std::size_t>(i))) best = std::min(best, i);
      });
    }
    slot.rethrow();
    if (best != std::numeric_limits<std::int64_t>::max()) return static_cast<std::size_t>(best);
  }
  return std::nullopt;
}

template <class Pred>
std::optional<std::size_t> find_first(std::size_t n, Pred&& pred, Execution ex = Execution::Parallel) {
  return ex == Execution::Serial ? find_first_serial(n, pred) : find_first_parallel(n, pred);
}

template <class Pred>
std::size_t count_if_serial(std::size_t n, Pred&& pred) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += pred(i) ? 1 : 0;
  return c;
}

template <class Pred>
std::size_t count_if_parallel(std::size_t n, Pred&& pred) {
  if (omp_get_max_threads() <= 1) return count_if_serial(n, pred);
  detail::ExceptionSlot slot;
  std::int64_t c = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : c)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    slot.run([&] { c += pred(static_cast<std::size_t>(i)) ? 1 : 0; });
  }
  slot.rethrow();
  return static_cast<std::size_t>(c);
}

template <class Pred>
std::size_t count_if(std::size_t n, Pred&& pred, Execution ex = Execution::Parallel) {
  return ex == Execution::Serial ? count_if_serial(n, pred) : count_if_parallel(n, pred);
}

}  // namespace maxmin
