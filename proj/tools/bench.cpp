// Compares the OpenMP kernels against their serial reference paths and
// checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "orbitspace/classifier.hpp"
#include "orbitspace/sweep.hpp"
#include "orbitspace/torus.hpp"

using namespace orbitspace;

namespace {

double seconds(void (*fn)(const ExecPolicy&), const ExecPolicy& policy) {
  const auto start = std::chrono::steady_clock::now();
  fn(policy);
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

void bench_reduce(const ExecPolicy& policy) {
  volatile std::size_t sink = reduce_sweep(500, policy).size();
  (void)sink;
}

void bench_census(const ExecPolicy& policy) {
  volatile std::size_t sink = build_census(12, 4, policy).rows.size();
  (void)sink;
}

void bench_extension(const ExecPolicy& policy) {
  std::size_t hits = 0;
  for (int a = 2; a <= 24; ++a) {
    for (int b = a + 1; b <= 25; ++b) {
      if (std::gcd(a, b) != 1) continue;
      OrbitSpaceData o = linear_cp2_orbit_data(a, b);
      if (!o.circles.empty() && extend_to_torus(o, policy).ok()) ++hits;
    }
  }
  volatile std::size_t sink = hits;
  (void)sink;
}

void run(const char* name, void (*fn)(const ExecPolicy&)) {
  const double serial = seconds(fn, serial_policy());
  const double parallel = seconds(fn, ExecPolicy{true});
  std::printf("%-28s serial %8.3fs   openmp %8.3fs   speedup %.2fx\n", name,
              serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n");
#endif

  // Sanity: parallel kernels must agree with the serial reference.
  if (reduce_sweep(200, serial_policy()) != reduce_sweep(200, ExecPolicy{true})) {
    std::printf("MISMATCH: reduce_sweep parallel != serial\n");
    return 1;
  }
  if (build_census(8, 4, serial_policy()).rows.size() !=
      build_census(8, 4, ExecPolicy{true}).rows.size()) {
    std::printf("MISMATCH: census parallel != serial\n");
    return 1;
  }

  run("reduce sweep (limit 500)", bench_reduce);
  run("census (12, 4)", bench_census);
  run("torus extension batch", bench_extension);
  return 0;
}
