#ifndef SHIFTOP_CHECK_HPP
#define SHIFTOP_CHECK_HPP

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "shiftop/diffop.hpp"

namespace shiftop {

struct SuiteParams {
  int N = 2;
  int l = 1;
  int order = 8;       // series truncation for generating-function checks
  int max_degree = 4;  // polynomial degree bound for action checks
};

struct CheckItem {
  std::string id;        // stable identifier, e.g. "hgr1/s-square"
  std::string anchor;    // human-readable statement of the identity
  bool pass = false;
  std::string residual;  // rendered witness when the identity fails
  long millis = 0;
};

struct CheckReport {
  std::string suite;
  SuiteParams params;
  std::vector<CheckItem> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  size_t failures() const {
    size_t n = 0;
    for (const auto& it : items)
      if (!it.pass) ++n;
    return n;
  }
};

/// A deferred verification: returns nullopt on success or a rendered residual
/// on failure. Exceptions are caught by the runner and reported as failures.
struct CheckTask {
  std::string id;
  std::string anchor;
  std::function<std::optional<std::string>()> run;
};

/// Collects tasks for one suite and executes them (optionally on a small
/// thread pool). Task order is preserved in the report regardless of the
/// execution schedule, so output is deterministic.
class Checker {
 public:
  void add(std::string id, std::string anchor,
           std::function<std::optional<std::string>()> fn) {
    tasks_.push_back(CheckTask{std::move(id), std::move(anchor), std::move(fn)});
  }

  /// Identity A == B between operators (evaluated lazily).
  void add_eq(std::string id, std::string anchor, std::function<DiffOp()> lhs,
              std::function<DiffOp()> rhs) {
    add(std::move(id), std::move(anchor),
        [lhs = std::move(lhs), rhs = std::move(rhs)]() -> std::optional<std::string> {
          DiffOp d = lhs() - rhs();
          if (d.is_zero()) return std::nullopt;
          return d.render();
        });
  }

  /// Identity "expression vanishes".
  void add_zero(std::string id, std::string anchor, std::function<DiffOp()> fn) {
    add(std::move(id), std::move(anchor),
        [fn = std::move(fn)]() -> std::optional<std::string> {
          DiffOp d = fn();
          if (d.is_zero()) return std::nullopt;
          return d.render();
        });
  }

  /// Boolean condition with a fixed failure note.
  void add_cond(std::string id, std::string anchor, std::function<bool()> fn,
                std::string note = "condition failed") {
    add(std::move(id), std::move(anchor),
        [fn = std::move(fn), note = std::move(note)]() -> std::optional<std::string> {
          return fn() ? std::nullopt : std::optional<std::string>(note);
        });
  }

  size_t size() const { return tasks_.size(); }

  CheckReport run(std::string suite, const SuiteParams& params, int jobs = 1,
                  bool deterministic = false) const {
    CheckReport rep;
    rep.suite = std::move(suite);
    rep.params = params;
    rep.items.resize(tasks_.size());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(tasks_.size() ? tasks_.size() : 1));
    std::atomic<size_t> next{0};
    auto worker = [&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= tasks_.size()) break;
        const CheckTask& task = tasks_[i];
        CheckItem item;
        item.id = task.id;
        item.anchor = task.anchor;
        auto t0 = std::chrono::steady_clock::now();
        try {
          auto residual = task.run();
          item.pass = !residual.has_value();
          if (residual) item.residual = clip(*residual);
        } catch (const std::exception& e) {
          item.pass = false;
          item.residual = std::string("exception: ") + e.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        item.millis = deterministic
                          ? 0
                          : std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                                .count();
        rep.items[i] = std::move(item);
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<size_t>(jobs));
      for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    return rep;
  }

 private:
  static std::string clip(std::string s) {
    constexpr size_t limit = 400;
    if (s.size() > limit) {
      s.resize(limit);
      s += " ...";
    }
    return s;
  }

  std::vector<CheckTask> tasks_;
};

}  // namespace shiftop

#endif  // SHIFTOP_CHECK_HPP
