#pragma once

#include <vector>

#include "orbitspace/exec.hpp"
#include "orbitspace/pao.hpp"

namespace orbitspace {

struct ReduceSweepRow {
  int m = 0;
  int n = 0;
  WeightPair terminal;
  int moves = 0;
  auto operator<=>(const ReduceSweepRow&) const = default;
};

// Runs reduce over every coprime pair 1 <= m, n <= limit, rows ordered by
// (m, n). The OpenMP path fills a precomputed index space, so its output is
// identical to the serial reference.
std::vector<ReduceSweepRow> reduce_sweep(int limit, const ExecPolicy& policy = {});

}  // namespace orbitspace
