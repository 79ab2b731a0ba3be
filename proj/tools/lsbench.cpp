// Benchmark of the OpenMP kernels against the serial reference. Every
// scenario runs both paths, checks the results are identical (exact
// arithmetic makes the parallel result reproduce the serial one bit for
// bit), and prints wall times and speedup.
//
//   ./lsbench [order]        (default 12)
//
// Thread count follows OMP_NUM_THREADS.

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "lsv/bch.hpp"
#include "lsv/cylinder.hpp"
#include "lsv/models.hpp"
#include "lsv/series.hpp"

namespace {

using lsv::Series;

double time_ms(const std::function<void()>& fn, int reps = 3) {
  double best = 1e30;
  for (int r = 0; r < reps; ++r) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    best = std::min(
        best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

// Dense random series over the two-letter BCH alphabet: every word of
// length <= fill gets a small random coefficient.
Series dense_series(int order, int fill, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
  auto alphabet = lsv::bch_alphabet();
  std::map<lsv::Word, lsv::Rational> terms;
  std::function<void(lsv::Word, int)> fill_words = [&](lsv::Word w, int depth) {
    if (!w.empty()) {
      int n = num(rng);
      if (n != 0) terms[w] = lsv::rational(n, den(rng));
    }
    if (depth == 0) return;
    for (lsv::Letter g = 0; g < 2; ++g)
      fill_words(w + lsv::Word::single(g), depth - 1);
  };
  fill_words(lsv::Word(), fill);
  return Series::from_terms(alphabet, order, std::move(terms));
}

struct Row {
  std::string name;
  double serial_ms;
  double parallel_ms;
  bool identical;
};

Row bench_pair(const std::string& name, const std::function<Series()>& run) {
  using lsv::detail::ParallelMode;
  using lsv::detail::set_parallel_mode;
  Series serial = (set_parallel_mode(ParallelMode::ForceSerial), run());
  Series parallel = (set_parallel_mode(ParallelMode::ForceParallel), run());
  bool identical = serial == parallel;
  set_parallel_mode(ParallelMode::ForceSerial);
  double s = time_ms([&] { run(); });
  set_parallel_mode(ParallelMode::ForceParallel);
  double p = time_ms([&] { run(); });
  set_parallel_mode(ParallelMode::Auto);
  return {name, s, p, identical};
}

}  // namespace

int main(int argc, char** argv) {
  int order = argc > 1 ? std::atoi(argv[1]) : 12;
  if (order < 4 || order > 16) {
    std::cerr << "order must be in [4, 16]\n";
    return 2;
  }
  std::cout << "threads: " << omp_get_max_threads() << ", order: " << order
            << "\n\n";

  Series dense_a = dense_series(order, std::min(order, 7), 1);
  Series dense_b = dense_series(order, std::min(order, 7), 2);
  lsv::DifferentialModel cyl = lsv::cyl_perturbed(order);
  Series dsu = cyl.differential.image(cyl.alphabet->letter("su"));
  lsv::DifferentialModel ls = lsv::model_ls(order);
  Series dz = ls.differential.image(ls.alphabet->letter("z"));

  Row rows[] = {
      bench_pair("product dense x dense",
                 [&] { return lsv::product(dense_a, dense_b); }),
      bench_pair("bracket dense x dense",
                 [&] { return lsv::bracket(dense_a, dense_b); }),
      bench_pair("derive D(D su), perturbed cylinder",
                 [&] { return lsv::derive(cyl.differential, dsu); }),
      bench_pair("derive d(d z), LS model",
                 [&] { return lsv::derive(ls.differential, dz); }),
      bench_pair("bch_log", [&] { return lsv::bch_log(order); }),
      bench_pair("gamma_residual",
                 [&] { return lsv::gamma_residual(std::min(order, 10)); }),
  };

  std::printf("%-36s %12s %12s %9s %6s\n", "scenario", "serial (ms)",
              "openmp (ms)", "speedup", "equal");
  bool all_identical = true;
  for (const Row& row : rows) {
    std::printf("%-36s %12.2f %12.2f %8.2fx %6s\n", row.name.c_str(),
                row.serial_ms, row.parallel_ms,
                row.parallel_ms > 0 ? row.serial_ms / row.parallel_ms : 0.0,
                row.identical ? "yes" : "NO");
    all_identical = all_identical && row.identical;
  }
  if (!all_identical) {
    std::cout << "\nERROR: a parallel result differed from the serial one\n";
    return 1;
  }
  return 0;
}
