#pragma once

// Per-module verification suites and the composed report.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "klwv/rat.hpp"
#include "klwv/report.hpp"

namespace klwv {

struct SuiteOptions {
  int m = 4;
  HalfInt order = HalfInt::from_int(20);
  int range = 50;
  std::optional<std::int64_t> charge_window;  // symplectic-fermion window; βγ uses 2*order
};

/// Worker count: KLWV_THREADS if set and positive, else hardware concurrency.
std::size_t thread_budget();

/// Evaluates f(0..n-1) on up to thread_budget() threads; results keep index order.
template <class F>
auto parallel_map(std::size_t n, F f) -> std::vector<decltype(f(std::size_t{}))> {
  using T = decltype(f(std::size_t{}));
  std::vector<std::optional<T>> slots(n);
  std::exception_ptr failure;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t k = next++; k < n && !failed; k = next++) {
      try {
        slots[k].emplace(f(k));
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(thread_budget(), n);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

Report suite_ratcore(const SuiteOptions& opts);
Report suite_liecore(const SuiteOptions& opts);
Report suite_qseries(const SuiteOptions& opts);
Report suite_freefield(const SuiteOptions& opts);
Report suite_extension(const SuiteOptions& opts);
Report suite_qhreduce(const SuiteOptions& opts);
Report suite_embedcheck(const SuiteOptions& opts);

/// All suites in dependency order ratcore .. embedcheck. Requires even m >= 4.
std::vector<Report> run_all_suites(const SuiteOptions& opts);

}  // namespace klwv
