// Times the serial reference kernels against their OpenMP variants and
// checks that both produce identical results.

#include <omp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <random>

#include "copzero/minimal_zeros.hpp"
#include "copzero/simplex_grid.hpp"
#include "copzero/zeroset.hpp"

namespace {

using namespace copzero;

SymMatrix<double> random_symmetric(int p, std::uint64_t seed, bool nonnegative) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(nonnegative ? 0.05 : -1.0, 1.0);
  SymMatrix<double> m(p);
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j) m.set(i, j, u(rng));
  return m;
}

template <typename F>
double timed(F&& f) {
  const double t0 = omp_get_wtime();
  f();
  return omp_get_wtime() - t0;
}

void row(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-28s %10.3fs %10.3fs %8.2fx   results %s\n", name, serial, parallel,
              serial / parallel, equal ? "equal" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel comparison"};
  int grid_p = 6, grid_n = 36, enum_p = 14, threads = 0;
  std::uint64_t seed = 20240811;
  app.add_option("--grid-p", grid_p, "matrix dimension for the grid kernels");
  app.add_option("--grid-n", grid_n, "grid denominator N");
  app.add_option("--enum-p", enum_p, "matrix dimension for the subset-scan kernel");
  app.add_option("--threads", threads, "OpenMP thread count (0 = default)");
  app.add_option("--seed", seed, "RNG seed");
  CLI11_PARSE(app, argc, argv);

  if (threads > 0) omp_set_num_threads(threads);
  std::printf("threads: %d\n", threads > 0 ? threads : omp_get_max_threads());

  {
    const SymMatrix<double> x = random_symmetric(grid_p, seed, false);
    std::printf("grid: p=%d N=%d (%zu points)\n", grid_p, grid_n,
                simplex_grid_size(grid_p, grid_n));
    GridLimits lim{.max_points = 500'000'000};
    GridMinResult<double> rs, rp;
    const double ts = timed([&] { rs = grid_min_serial(x, grid_n, lim); });
    const double tp = timed([&] { rp = grid_min_parallel(x, grid_n, lim); });
    row("grid_min", ts, tp, rs.min_value == rp.min_value && rs.argmin == rp.argmin);

    const std::vector<SupportSet> pstars{SupportSet::full(grid_p)};
    GridCoverReport cs, cp;
    const double cts = timed([&] { cs = grid_cover_serial(x, pstars, grid_n, lim); });
    const double ctp = timed([&] { cp = grid_cover_parallel(x, pstars, grid_n, lim); });
    row("grid_cover", cts, ctp, cs.zeros == cp.zeros && cs.uncovered == cp.uncovered);
  }

  {
    // nonnegative entries keep the matrix copositive; a positive diagonal
    // keeps every index alive, so all C(p,k) subsets get tested
    const SymMatrix<double> x = random_symmetric(enum_p, seed + 1, true);
    std::printf("subset scan: p=%d (%llu candidate subsets)\n", enum_p,
                (1ULL << enum_p) - 1 - enum_p);
    MinimalZeroSet<double> es, ep;
    const double ts = timed([&] { es = enumerate_minimal_zeros(x, Exec::serial); });
    const double tp = timed([&] { ep = enumerate_minimal_zeros(x, Exec::parallel); });
    bool equal = es.zeros.size() == ep.zeros.size();
    for (std::size_t i = 0; equal && i < es.zeros.size(); ++i)
      equal = es.zeros[i].support == ep.zeros[i].support && es.zeros[i].tau == ep.zeros[i].tau;
    row("enumerate_minimal_zeros", ts, tp, equal);
  }

  return 0;
}
