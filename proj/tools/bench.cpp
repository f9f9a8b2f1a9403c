// Times the serial reference kernels against their OpenMP counterparts on
// the enumerated S_n^2 and checks that both produce identical output.
#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "orbits/kernels.hpp"
#include "orbits/poset.hpp"

using namespace orbits;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const char* kernel, int n, double serial, double omp, bool same) {
  std::printf("%-14s %3d %12.3f %12.3f %8.2fx  %s\n", kernel, n, serial, omp, omp > 0 ? serial / omp : 0.0,
              same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel benchmark"};
  int n_min = 6, n_max = 9, reps = 3;
  int cover_max = 8;
  app.add_option("--n-min", n_min, "smallest n");
  app.add_option("--n-max", n_max, "largest n");
  app.add_option("--cover-max", cover_max, "largest n for the cover kernel");
  app.add_option("--reps", reps, "repetitions (best time is reported)");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", kernels::thread_count());
  std::printf("%-14s %3s %12s %12s %9s\n", "kernel", "n", "serial ms", "omp ms", "speedup");
  bool all_same = true;
  for (int n = n_min; n <= n_max; ++n) {
    const auto& set = enumerated(n);
    const auto& ranks = set.ranks;

    kernels::LeqTable ts, tp;
    const double s1 = best_of(reps, [&] { ts = kernels::leq_table_serial(ranks); });
    const double p1 = best_of(reps, [&] { tp = kernels::leq_table_omp(ranks); });
    row("leq_table", n, s1, p1, ts == tp);
    all_same = all_same && ts == tp;

    // The meet of the two largest-index elements as a representative bound.
    const auto bound = ranks.pack(meet(rank_matrix(set.elems[set.elems.size() - 1]), rank_matrix(set.elems[set.elems.size() - 2])));
    std::vector<std::size_t> fs, fp;
    const double s2 = best_of(reps, [&] { fs = kernels::filter_below_serial(ranks, bound); });
    const double p2 = best_of(reps, [&] { fp = kernels::filter_below_omp(ranks, bound); });
    row("filter_below", n, s2, p2, fs == fp);
    all_same = all_same && fs == fp;

    std::vector<std::size_t> everything(ranks.size());
    for (std::size_t x = 0; x < everything.size(); ++x) everything[x] = x;
    std::vector<std::size_t> ms, mp;
    const double s3 = best_of(reps, [&] { ms = kernels::maximal_serial(ranks, everything); });
    const double p3 = best_of(reps, [&] { mp = kernels::maximal_omp(ranks, everything); });
    row("maximal", n, s3, p3, ms == mp);
    all_same = all_same && ms == mp;

    if (n <= cover_max) {
      std::vector<std::vector<std::size_t>> cs, cp;
      const double s4 = best_of(1, [&] { cs = kernels::covers_serial(tp); });
      const double p4 = best_of(1, [&] { cp = kernels::covers_omp(tp); });
      row("covers", n, s4, p4, cs == cp);
      all_same = all_same && cs == cp;
    }
  }
  return all_same ? 0 : 1;
}
