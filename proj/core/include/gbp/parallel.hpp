#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "gbp/solver.hpp"

namespace gbp {

/// Best solution shared by all workers. The value can only decrease; readers
/// of value() see some published value, never one better than published.
class Incumbent {
 public:
  explicit Incumbent(Solution initial);

  Weight value() const noexcept { return value_.load(std::memory_order_acquire); }

  /// Publishes `candidate` iff it is strictly better than the current value.
  /// Linearizable: concurrent updates never lose the best candidate.
  bool update(Solution candidate);

  Solution snapshot() const;
  std::uint64_t accepted() const;
  std::vector<Weight> history() const;
  /// Seconds since construction at the last accepted update.
  double last_improvement() const;

 private:
  std::atomic<Weight> value_;
  mutable std::mutex mutex_;
  Solution best_;
  std::vector<Weight> history_;
  double last_improvement_ = 0.0;
  std::chrono::steady_clock::time_point start_;
};

/// Multi-lane priority pool with relaxed ordering.
///
/// Each worker owns a lane (a mutex-guarded binary heap) and publishes the
/// priority of its lane's top. try_pop() scans the published tops and takes
/// the top task of the lane that looked best, preferring the caller's lane on
/// ties. Relaxation: the returned task is the best of its lane and was at
/// least as good as every published top during the scan; tasks that other
/// workers push while the scan runs may be overlooked for that pop.
/// try_pop() only reports empty after a scan that saw every lane empty.
template <class T>
class TaskPool {
 public:
  explicit TaskPool(std::size_t lanes) : lanes_(std::max<std::size_t>(lanes, 1)) {
    for (auto& lane : lanes_) lane = std::make_unique<Lane>();
  }

  std::size_t lane_count() const noexcept { return lanes_.size(); }

  void push(std::size_t lane, std::int64_t priority, T task) {
    Lane& l = *lanes_[lane % lanes_.size()];
    const std::uint64_t seq = next_seq_.fetch_add(1, std::memory_order_relaxed);
    std::lock_guard lock(l.mutex);
    l.heap.push_back(Entry{priority, seq, std::move(task)});
    std::push_heap(l.heap.begin(), l.heap.end(), EntryBefore{});
    l.top.store(l.heap.front().priority, std::memory_order_release);
    size_.fetch_add(1, std::memory_order_relaxed);
  }

  std::optional<T> try_pop(std::size_t lane) {
    const std::size_t home = lane % lanes_.size();
    while (true) {
      std::size_t best = lanes_.size();
      std::int64_t best_priority = kEmpty;
      for (std::size_t k = 0; k < lanes_.size(); ++k) {
        const std::size_t i = (home + k) % lanes_.size();
        const std::int64_t p = lanes_[i]->top.load(std::memory_order_acquire);
        if (p != kEmpty && (best == lanes_.size() || p > best_priority)) {
          best = i;
          best_priority = p;
        }
      }
      if (best == lanes_.size()) return std::nullopt;
      Lane& l = *lanes_[best];
      std::lock_guard lock(l.mutex);
      if (l.heap.empty()) continue;
      std::pop_heap(l.heap.begin(), l.heap.end(), EntryBefore{});
      T task = std::move(l.heap.back().task);
      l.heap.pop_back();
      l.top.store(l.heap.empty() ? kEmpty : l.heap.front().priority, std::memory_order_release);
      size_.fetch_sub(1, std::memory_order_relaxed);
      return task;
    }
  }

  /// Approximate under concurrency, exact when quiescent.
  std::size_t size() const noexcept { return size_.load(std::memory_order_relaxed); }

 private:
  static constexpr std::int64_t kEmpty = std::numeric_limits<std::int64_t>::min();

  struct Entry {
    std::int64_t priority;
    std::uint64_t seq;
    T task;
  };
  struct EntryBefore {
    bool operator()(const Entry& a, const Entry& b) const noexcept {
      return a.priority != b.priority ? a.priority < b.priority : a.seq < b.seq;
    }
  };
  struct Lane {
    std::mutex mutex;
    std::vector<Entry> heap;
    std::atomic<std::int64_t> top{kEmpty};
  };

  std::vector<std::unique_ptr<Lane>> lanes_;
  std::atomic<std::uint64_t> next_seq_{0};
  std::atomic<std::size_t> size_{0};
};

/// Worker count from the GBP_THREADS environment variable, else `fallback`.
std::size_t default_thread_count(std::size_t fallback = 1);

/// Parallel branch and bound over `threads` workers. Returns the same optimum
/// value as solve_sequential; counts and the witness may differ between runs.
SolveResult solve_parallel(const WeightedGraph& g, std::size_t s0, std::size_t s1, const SolveOptions& options,
                           std::size_t threads);

}  // namespace gbp
