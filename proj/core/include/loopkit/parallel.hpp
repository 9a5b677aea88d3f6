#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace loopkit {

/// Process-wide worker count for scans that support splitting (default 1).
void set_worker_count(unsigned workers);
unsigned worker_count();

/// Evaluates `probe(i)` for i = 0, 1, ..., n-1 and returns the smallest i
/// whose probe yields a value, together with that value.
///
/// With several workers indices are handed out in increasing order and an
/// index is skipped only when a smaller hit is already known, so the result
/// is the same as the sequential scan.
template <class Probe>
auto first_hit(std::size_t n, Probe&& probe)
    -> std::optional<std::pair<std::size_t, typename decltype(probe(std::size_t{}))::value_type>> {
  using Value = typename decltype(probe(std::size_t{}))::value_type;
  using Result = std::optional<std::pair<std::size_t, Value>>;

  const unsigned workers = std::min<std::size_t>(worker_count(), n == 0 ? 1 : n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (auto hit = probe(i)) return Result(std::in_place, i, std::move(*hit));
    }
    return std::nullopt;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{n};
  std::mutex guard;
  Result result;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || i > best.load()) return;
      if (auto hit = probe(i)) {
        std::lock_guard lock(guard);
        if (i < best.load()) {
          best.store(i);
          result.emplace(i, std::move(*hit));
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();
  return result;
}

}  // namespace loopkit
