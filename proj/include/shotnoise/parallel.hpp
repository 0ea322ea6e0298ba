#pragma once

#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

#include "shotnoise/accumulator.hpp"

namespace shotnoise {

inline unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Partition [0, count) into contiguous per-worker blocks and run body(worker,
// begin, end) on each. Replication r always lands in block r*workers/count,
// so per-replication results do not depend on scheduling.
template <class Body>
void parallel_blocks(std::uint64_t count, unsigned workers, Body body) {
  if (workers <= 1 || count == 0) {
    body(0u, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = count * w / workers;
    const std::uint64_t end = count * (w + 1) / workers;
    pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

// Pairwise merge in a fixed order determined by worker index, so the result
// is reproducible for a given worker count.
inline MomentAccumulator tree_merge(std::vector<MomentAccumulator> accs) {
  if (accs.empty()) throw std::invalid_argument("nothing to merge");
  for (std::size_t step = 1; step < accs.size(); step *= 2)
    for (std::size_t i = 0; i + step < accs.size(); i += 2 * step)
      accs[i].merge(accs[i + step]);
  return std::move(accs.front());
}

}  // namespace shotnoise
