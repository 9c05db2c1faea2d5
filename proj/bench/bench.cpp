// Serial reference vs OpenMP kernels: wall time and result equality.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#ifdef KKINETICS_WITH_OPENMP
#include <omp.h>
#endif

#include "kkinetics/figures.hpp"
#include "kkinetics/fracoracle.hpp"

using namespace kkinetics;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best,
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-28s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name, serial,
              parallel, serial / parallel, equal ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef KKINETICS_WITH_OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled\n");
#endif
  constexpr int kReps = 3;

  {
    const KineticProblem p = FigureSpec::builtin(3).problem(1.5);
    const auto grid = uniform_grid(3.0, 2001);
    SolutionTable a, b;
    const double ts = best_of(kReps, [&] { a = solve_grid_serial(p, grid); });
    const double tp = best_of(kReps, [&] { b = solve_grid(p, grid); });
    report("solve_grid (2001 points)", ts, tp, a.values == b.values);
  }

  {
    constexpr int n = 1 << 20;
    std::vector<double> ws, wp;
    const double ts = best_of(kReps, [&] {
      const QuadratureGrid g = QuadratureGrid::build_serial(1.0, n, 0.5);
      ws = {g.weight(n, 0), g.weight(n, 1), g.weight(n, n / 2)};
    });
    const double tp = best_of(kReps, [&] {
      const QuadratureGrid g(1.0, n, 0.5);
      wp = {g.weight(n, 0), g.weight(n, 1), g.weight(n, n / 2)};
    });
    report("weight build (2^20 steps)", ts, tp, ws == wp);
  }

  {
    const QuadratureGrid g(1.0, 8192, 0.5);
    std::vector<double> f(g.size());
    for (int j = 0; j <= g.n_steps(); ++j) f[static_cast<std::size_t>(j)] = std::cos(g.node(j));
    std::vector<double> a, b;
    const double ts = best_of(kReps, [&] { a = rl_integral_all_serial(g, f); });
    const double tp = best_of(kReps, [&] { b = rl_integral_all(g, f); });
    report("rl_integral_all (8192)", ts, tp, a == b);
  }
  return 0;
}
