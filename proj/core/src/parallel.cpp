#include "gbp/parallel.hpp"

#include <chrono>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "search_node.hpp"

namespace gbp {

Incumbent::Incumbent(Solution initial)
    : value_(initial.value), best_(std::move(initial)), start_(std::chrono::steady_clock::now()) {
  history_.push_back(best_.value);
}

bool Incumbent::update(Solution candidate) {
  if (candidate.value >= value()) return false;
  std::lock_guard lock(mutex_);
  if (candidate.value >= value_.load(std::memory_order_relaxed)) return false;
  history_.push_back(candidate.value);
  last_improvement_ = detail::seconds_since(start_);
  value_.store(candidate.value, std::memory_order_release);
  best_ = std::move(candidate);
  return true;
}

Solution Incumbent::snapshot() const {
  std::lock_guard lock(mutex_);
  return best_;
}

std::uint64_t Incumbent::accepted() const {
  std::lock_guard lock(mutex_);
  return history_.size();
}

std::vector<Weight> Incumbent::history() const {
  std::lock_guard lock(mutex_);
  return history_;
}

double Incumbent::last_improvement() const {
  std::lock_guard lock(mutex_);
  return last_improvement_;
}

std::size_t default_thread_count(std::size_t fallback) {
  if (const char* env = std::getenv("GBP_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(fallback, 1);
}

SolveResult solve_parallel(const WeightedGraph& g, std::size_t s0, std::size_t s1, const SolveOptions& options,
                           std::size_t threads) {
  if (threads == 0) throw std::invalid_argument("thread count must be at least 1");
  if (s0 == 0 || s1 == 0 || s0 + s1 != g.vertex_count()) throw std::invalid_argument("infeasible target sizes");
  const auto start = detail::Clock::now();

  Incumbent incumbent(options.initial ? Solution::evaluate(g, options.initial->assignment, s0, s1)
                                      : greedy_initial_solution(g, s0, s1));
  TaskPool<detail::SearchNode> pool(threads);
  // Tasks pushed but not yet fully processed; zero means the search is over.
  std::atomic<std::int64_t> outstanding{0};
  std::atomic<bool> abort{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto upper = [&] { return incumbent.value(); };
  auto offer = [&](Solution s) { incumbent.update(std::move(s)); };

  if (auto root = detail::make_node(Subproblem::root(g, s0, s1, options.bounds.high_degree), options, upper, offer)) {
    outstanding.fetch_add(1);
    const std::int64_t prio = root->priority;
    pool.push(0, prio, std::move(*root));
  }

  std::vector<detail::WorkCounters> counters(threads);
  auto worker = [&](std::size_t id) {
    auto push = [&](detail::SearchNode node) {
      outstanding.fetch_add(1, std::memory_order_relaxed);
      const std::int64_t prio = node.priority;
      pool.push(id, prio, std::move(node));
    };
    unsigned idle_rounds = 0;
    try {
      while (!abort.load(std::memory_order_relaxed)) {
        if (auto node = pool.try_pop(id)) {
          idle_rounds = 0;
          detail::process_node(std::move(*node), options, counters[id], upper, offer, push);
          outstanding.fetch_sub(1, std::memory_order_acq_rel);
          continue;
        }
        if (outstanding.load(std::memory_order_acquire) == 0) return;
        if (++idle_rounds < 64) {
          std::this_thread::yield();
        } else {
          std::this_thread::sleep_for(std::chrono::microseconds(50));
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      abort.store(true);
    }
  };

  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (std::size_t id = 0; id < threads; ++id) workers.emplace_back(worker, id);
  }
  if (failure) std::rethrow_exception(failure);

  SolveResult result;
  result.bounds = options.bounds;
  result.strategy = options.strategy;
  result.threads = threads;
  result.best = incumbent.snapshot();
  result.incumbent_history = incumbent.history();
  result.solutions_found = result.incumbent_history.size();
  result.time_to_optimum = incumbent.last_improvement();
  for (const auto& c : counters) {
    result.subproblems_explored += c.explored;
    result.irrelevant_tasks += c.irrelevant;
  }
  result.time_total = detail::seconds_since(start);
  return result;
}

}  // namespace gbp
