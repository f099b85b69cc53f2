#pragma once

#include <cstddef>

namespace klab {

/// Worker threads internal scans may use: KEISLER_LAB_THREADS when set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
std::size_t thread_budget();

}  // namespace klab
