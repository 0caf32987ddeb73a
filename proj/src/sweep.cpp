#include "orbitspace/sweep.hpp"

#include <numeric>
#include <utility>

namespace orbitspace {

std::vector<ReduceSweepRow> reduce_sweep(int limit, const ExecPolicy& policy) {
  std::vector<std::pair<int, int>> pairs;
  for (int m = 1; m <= limit; ++m) {
    for (int n = 1; n <= limit; ++n) {
      if (std::gcd(m, n) == 1) pairs.emplace_back(m, n);
    }
  }

  std::vector<ReduceSweepRow> rows(pairs.size());
  if (policy.parallel) {
#pragma omp parallel for schedule(dynamic, 256)
    for (long long i = 0; i < static_cast<long long>(pairs.size()); ++i) {
      const auto [m, n] = pairs[static_cast<std::size_t>(i)];
      const RewriteTrace trace = reduce({m, n});
      rows[static_cast<std::size_t>(i)] = {m, n, trace.terminal,
                                           static_cast<int>(trace.moves.size())};
    }
  } else {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [m, n] = pairs[i];
      const RewriteTrace trace = reduce({m, n});
      rows[i] = {m, n, trace.terminal, static_cast<int>(trace.moves.size())};
    }
  }
  return rows;
}

}  // namespace orbitspace
