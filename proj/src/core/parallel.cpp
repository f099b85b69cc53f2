#include "klab/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace klab {

std::size_t thread_budget() {
  if (const char* env = std::getenv("KEISLER_LAB_THREADS"); env != nullptr) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  const auto hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace klab
