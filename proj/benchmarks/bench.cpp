// Compares the serial reference kernels against the OpenMP variants.
#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kostka/path.hpp"
#include "kostka/rigged.hpp"
#include "kostka/fermionic.hpp"

using namespace kostka;

namespace {

double seconds(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void row(const std::string& name, double serial, double parallel) {
  std::cout << name << ": serial " << serial << " s, parallel " << parallel
            << " s, speedup " << (parallel > 0 ? serial / parallel : 0.0) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 2;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  if (argc > 1) threads = std::atoi(argv[1]);
  std::cout << "threads: " << threads << "\n";

  {
    Partition lambda({5, 4, 3, 2}, 4);
    RectSeq R(14, Rect{1, 1});
    QPoly a, b;
    double ts = seconds([&] { a = kostka_via_paths_ref(lambda, R, 3); });
    double tp = seconds([&] { b = kostka_via_paths(lambda, R, 3, threads); });
    if (a != b) {
      std::cerr << "path kernel mismatch\n";
      return 1;
    }
    row("kostka_via_paths  n=4 |R|=14 ell=3", ts, tp);
  }
  {
    Partition lambda({5, 5, 4, 2}, 4);
    RectSeq R(16, Rect{1, 1});
    QPoly a, b;
    double ts = seconds([&] { a = kostka_via_rc_ref(lambda, R, 3); });
    double tp = seconds([&] { b = kostka_via_rc(lambda, R, 3, threads); });
    if (a != b) {
      std::cerr << "rigged-configuration kernel mismatch\n";
      return 1;
    }
    row("kostka_via_rc     n=4 |R|=16 ell=3", ts, tp);
  }
  {
    Partition lambda({5, 4, 2}, 3);
    RectSeq R(11, Rect{1, 1});
    QPoly a, b;
    double ts = seconds([&] { a = kostka_level_weyl(lambda, R, 3, 1); });
    double tp = seconds([&] { b = kostka_level_weyl(lambda, R, 3, threads); });
    if (a != b) {
      std::cerr << "weyl kernel mismatch\n";
      return 1;
    }
    row("kostka_level_weyl n=3 |R|=11 ell=3", ts, tp);
  }
  return 0;
}
