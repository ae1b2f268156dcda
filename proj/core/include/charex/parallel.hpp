#pragma once

#include <cstdint>
#include <functional>

namespace charex {

// Worker count for partitioned loops: hardware concurrency, capped by the
// CHAREX_THREADS environment variable when set. Always >= 1. Read on every
// call so tests can vary the variable within one process.
int worker_count();

// Splits [0, count) into one contiguous chunk per worker and runs
// fn(chunk_index, begin, end) on its own thread. Exceptions from workers are
// rethrown (first one wins). Callers are responsible for making their merge
// step independent of the chunk boundaries.
void for_each_chunk(std::int64_t count,
                    const std::function<void(int, std::int64_t, std::int64_t)>& fn);

}  // namespace charex
