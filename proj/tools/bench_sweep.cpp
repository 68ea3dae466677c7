// Compares the serial reference sweep with the OpenMP-parallel one on the
// same grid and verifies that both produce identical cell results.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "og4/classifier.hpp"
#include "og4/parallel.hpp"

namespace {

double seconds(std::chrono::steady_clock::duration d) {
  return std::chrono::duration<double>(d).count();
}

bool same_cells(const og4::SweepReport& a, const og4::SweepReport& b) {
  if (a.cells.size() != b.cells.size()) return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    const og4::SweepCell &x = a.cells[i], &y = b.cells[i];
    if (x.family != y.family || x.r != y.r || x.s != y.s || x.swapped != y.swapped ||
        x.predicted != y.predicted || x.computed != y.computed || x.agree != y.agree ||
        x.skipped != y.skipped || x.type != y.type)
      return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int max_r = 12, max_s = 12;
  if (argc >= 3) {
    max_r = std::atoi(argv[1]);
    max_s = std::atoi(argv[2]);
  }
  if (max_r < 3 || max_s < 3) {
    std::cerr << "usage: bench_sweep [max_r max_s]  (bounds >= 3)\n";
    return 2;
  }

  using clock = std::chrono::steady_clock;

  auto t0 = clock::now();
  og4::SweepReport serial = og4::sweep_serial(max_r, max_s);
  auto t1 = clock::now();
  og4::SweepReport parallel = og4::sweep_parallel(max_r, max_s);
  auto t2 = clock::now();

  const double ts = seconds(t1 - t0), tp = seconds(t2 - t1);
  std::cout << "grid 3.." << max_r << " x 3.." << max_s << ", " << serial.cells.size()
            << " cells\n";
  std::cout << "serial:   " << ts << " s\n";
  std::cout << "parallel: " << tp << " s\n";
  std::cout << "speedup:  " << (tp > 0 ? ts / tp : 0.0) << "x\n";

  if (!same_cells(serial, parallel)) {
    std::cout << "MISMATCH: serial and parallel sweeps disagree\n";
    return 1;
  }
  std::cout << "serial and parallel sweeps agree on every cell\n";
  return 0;
}
