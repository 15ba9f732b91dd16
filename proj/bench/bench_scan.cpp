// Benchmark: OpenMP augmentation scan vs the serial word-by-word reference.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "braidch/augmentation.hpp"

using namespace braidch;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"augmentation scan benchmark"};
  std::string braid = "4: 1 -2 3 2 1 2";
  std::uint32_t q = 3;
  int repeat = 3;
  bool quick = false;
  app.add_option("--braid", braid, "braid word to scan");
  app.add_option("--q", q, "target field F_q");
  app.add_option("--repeat", repeat, "timing repetitions");
  app.add_flag("--quick", quick, "small smoke-test configuration");
  CLI11_PARSE(app, argc, argv);

  if (quick) {
    braid = "3: 1 2 1 2";
    q = 3;
    repeat = 1;
  }

  Dga d = braid_dga(parse_braid(braid));
  std::printf("braid %s, %zu degree-0 generators, q = %u\n", to_text(parse_braid(braid)).c_str(),
              d.degree_zero_generators().size(), q);

  AugScanOptions serial_opt;
  serial_opt.parallel = false;

  auto t0 = Clock::now();
  std::uint64_t count_serial = 0;
  for (int r = 0; r < repeat; ++r) count_serial = aug_count_serial(d, q, serial_opt);
  double serial_s = seconds_since(t0) / repeat;

  t0 = Clock::now();
  std::uint64_t count_parallel = 0;
  for (int r = 0; r < repeat; ++r) count_parallel = aug_count(d, q);
  double parallel_s = seconds_since(t0) / repeat;

  std::printf("serial reference: %12llu augmentations in %8.3f s\n",
              static_cast<unsigned long long>(count_serial), serial_s);
  std::printf("parallel kernel:  %12llu augmentations in %8.3f s\n",
              static_cast<unsigned long long>(count_parallel), parallel_s);
  std::printf("speedup: %.2fx\n", parallel_s > 0 ? serial_s / parallel_s : 0.0);

  if (count_serial != count_parallel) {
    std::fprintf(stderr, "MISMATCH between serial and parallel counts\n");
    return 1;
  }
  return 0;
}
