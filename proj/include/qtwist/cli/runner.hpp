#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <vector>

#include "qtwist/cli/report.hpp"

namespace qtwist::cli {

inline CheckReport run_task(const Task& t) {
  CheckReport rep;
  rep.check = t.check;
  rep.target = t.target;
  auto t0 = std::chrono::steady_clock::now();
  try {
    t.body(rep);
  } catch (const std::exception& e) {
    rep.status = Status::error;
    rep.message = e.what();
    rep.counterexample.reset();
  }
  rep.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Runs tasks on up to `jobs` threads. Results land in task order and are
/// then sorted by (check, target), so the output does not depend on
/// scheduling.
inline std::vector<CheckReport> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<CheckReport> out(tasks.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (jobs <= 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) out[k] = run_task(tasks[k]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) out[k] = run_task(tasks[k]);
      });
    }
    for (auto& th : pool) th.join();
  }
  sort_reports(out);
  return out;
}

}  // namespace qtwist::cli
