#pragma once

#include <cstdint>
#include <thread>

namespace asmorph {

/// Run-wide limits. Every enumeration (points, field elements, group
/// elements) is checked against `max_field_log2` before any work is done.
struct Config {
  unsigned max_field_log2 = 26;
  unsigned workers = 0;  // 0 = hardware concurrency

  unsigned worker_count() const {
    if (workers != 0) return workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
};

}  // namespace asmorph
