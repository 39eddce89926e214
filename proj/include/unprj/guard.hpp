#pragma once

#include <chrono>
#include <cstdint>

#include "unprj/check.hpp"

namespace unprj {

// Per-thread resource guard.  Long-running kernels tick it; when the
// deadline or step budget is exhausted the computation aborts with a
// resource_limit_error instead of returning anything partial.
struct WorkGuard {
    uint64_t steps = 0;
    uint64_t step_limit = 0;  // 0 = unlimited
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
};

inline WorkGuard& work_guard() {
    thread_local WorkGuard g;
    return g;
}

inline void guard_tick(uint64_t n = 1) {
    WorkGuard& g = work_guard();
    g.steps += n;
    if (g.step_limit && g.steps > g.step_limit)
        throw resource_limit_error("step budget exhausted");
    if (g.has_deadline && (g.steps & 0x3ff) == 0 &&
        std::chrono::steady_clock::now() > g.deadline)
        throw resource_limit_error("deadline exceeded");
}

class ScopedDeadline {
  public:
    explicit ScopedDeadline(double seconds) : saved_(work_guard()) {
        WorkGuard& g = work_guard();
        g.steps = 0;
        if (seconds > 0) {
            g.deadline = std::chrono::steady_clock::now() +
                         std::chrono::milliseconds(static_cast<int64_t>(seconds * 1000));
            g.has_deadline = true;
        }
    }
    ~ScopedDeadline() { work_guard() = saved_; }

  private:
    WorkGuard saved_;
};

}  // namespace unprj
