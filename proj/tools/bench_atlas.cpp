// Benchmark: parallel atlas enumeration against the serial reference
// implementation, verifying that both produce identical results.
//
// Usage: bench_atlas [max_alpha]   (default 2000)
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "gofknot/atlas.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  std::int64_t max_alpha = 2000;
  if (argc > 1) {
    try {
      max_alpha = std::stoll(argv[1]);
    } catch (...) {
      std::cerr << "usage: bench_atlas [max_alpha]\n";
      return 2;
    }
  }

#if defined(_OPENMP)
  std::cout << "openmp threads: " << omp_get_max_threads() << '\n';
#else
  std::cout << "openmp threads: unavailable (serial build)\n";
#endif
  std::cout << "sweep: alpha <= " << max_alpha << '\n';

  auto t0 = std::chrono::steady_clock::now();
  auto serial = gofknot::enumerate_serial(max_alpha);
  double serial_s = seconds_since(t0);
  std::cout << "serial reference: " << serial_s << " s (" << serial.size()
            << " spaces)\n";

  auto t1 = std::chrono::steady_clock::now();
  auto parallel = gofknot::enumerate(max_alpha);
  double parallel_s = seconds_since(t1);
  std::cout << "parallel:         " << parallel_s << " s (" << parallel.size()
            << " spaces)\n";

  if (parallel_s > 0.0) {
    std::cout << "speedup: " << serial_s / parallel_s << "x\n";
  }

  const bool identical = serial == parallel;
  std::cout << "results identical: " << (identical ? "yes" : "NO") << '\n';
  return identical ? 0 : 1;
}
