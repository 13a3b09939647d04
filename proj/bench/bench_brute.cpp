// Serial vs OpenMP timings for the brute-force fixed-word kernels.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"

#include "fixsub/constructions.hpp"
#include "fixsub/enumerate.hpp"
#include "fixsub/fixpipe.hpp"

using namespace fixsub;

namespace {

double best_of(int reps, const std::function<std::size_t()>& run, std::size_t& result) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto start = std::chrono::steady_clock::now();
    result = run();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void row(const std::string& label, int reps, const std::function<std::size_t(bool)>& run) {
  std::size_t serial_out = 0, parallel_out = 0;
  double ts = best_of(reps, [&] { return run(false); }, serial_out);
  double tp = best_of(reps, [&] { return run(true); }, parallel_out);
  std::printf("%-58s %10.4f %10.4f %7.2fx %s\n", label.c_str(), ts, tp, ts / tp,
              serial_out == parallel_out ? "same" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"brute-force kernel benchmark"};
  std::size_t free_len = 8, surface_len = 6;
  int reps = 3;
  app.add_option("--free-len", free_len, "word length for free ambients");
  app.add_option("--surface-len", surface_len, "word length for surface ambients");
  app.add_option("--reps", reps, "repetitions, best time kept");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads %d\n", omp_get_max_threads());
  std::printf("%-58s %10s %10s %8s\n", "case", "serial s", "omp s", "speedup");

  std::vector<Recipe> cases{phi_t(3, 4), aleph_aut(2), surface_psi(2),
                            surface_endo(2, 2, 1, 0, AlphaChoice::phi1)};
  for (const auto& r : cases) {
    std::size_t len = r.endo.ambient.is_surface() ? surface_len : free_len;
    std::string label = r.id + "(" + r.params + ") len " + std::to_string(len);

    FixedWordQuery q{r.endo.alpha.images, r.endo.ambient.genus(), len};
    row("fixed_words " + label, reps, [&](bool parallel) {
      return (parallel ? fixed_words_parallel(q) : fixed_words_serial(q)).size();
    });
    row("brute_fixed " + label, reps, [&](bool parallel) {
      BruteOptions o;
      o.parallel = parallel;
      return brute_fixed_elements(r.endo, len, o).families.size();
    });
  }
  return 0;
}
