// Serial vs OpenMP timings for the three parallel kernels.
//   bench_kernels [repeats]
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "diorace/batch.hpp"
#include "diorace/kernels.hpp"
#include "diorace/parser.hpp"
#include "diorace/race.hpp"

using namespace diorace;

namespace {

double best_ms(int repeats, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

void row(const char* what, double serial, double parallel, bool agree) {
  std::printf("%-34s serial %9.2f ms   omp %9.2f ms   x%5.2f   %s\n", what, serial, parallel, serial / parallel,
              agree ? "agree" : "MISMATCH");
}

volatile bool sink;

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), repeats);

  // Residue exhaustion where no zero exists, so the whole box is scanned.
  {
    const Poly p = parse("x1^3 + x2^3 + x3^3 - 4");
    const ModularImage image(p, 9 * 29);
    bool s = false, o = false;
    const double ts = best_ms(repeats, [&] { sink = s = has_residue_zero_serial(image); });
    const double to = best_ms(repeats, [&] { sink = o = has_residue_zero_omp(image); });
    row("residue exhaustion 261^3", ts, to, s == o);
  }

  // Race over an undecided cubic: every step is evaluated.
  {
    const Poly p = parse("x1^3 + x2^3 + x3^3 - 42");
    RaceConfig cfg;
    cfg.budget = 100000;
    cfg.verify.max_residue_tuples = 1000;
    Outcome s, o;
    const double ts = best_ms(repeats, [&] { s = decide(p, cfg); });
    cfg.execution = Execution::Parallel;
    const double to = best_ms(repeats, [&] { o = decide(p, cfg); });
    row("decide, budget 1e5, undecided", ts, to, s == o);
  }

  // Raw race on cheap predicates, isolating scheduling overhead.
  {
    const Index target = 3'000'000;
    const StepPredicate phi0 = [&](Index k) { return k == target; };
    const StepPredicate phi1 = [](Index k) { return k % 7919 == 7918 && k > 5'000'000; };
    std::optional<RaceResult> s, o;
    const double ts = best_ms(repeats, [&] { s = mu_or(phi0, phi1, Index{10'000'000}); });
    const double to = best_ms(repeats, [&] { o = mu_or_omp(phi0, phi1, Index{10'000'000}); });
    row("mu_or, first hit at 3e6", ts, to, s == o);
  }

  // Batch fan-out over a small corpus.
  {
    std::vector<CorpusEntry> corpus;
    const char* texts[] = {"x1 + x2 - 5",         "x1^2 + x2^2 - 3", "2*x1 - 1",     "x1^2 - 2",
                           "x1^2 + x2^2 - 7*x3^2 - 1", "x1*x2 - 91", "x1^2 - 3*x2^2 - 1", "x1^3 - x2^2 - 2",
                           "x1^2 + x2^2 + x3^2 - 7", "x1^4 + x2^4 - 17"};
    std::size_t line = 1;
    for (const char* t : texts) corpus.push_back(CorpusEntry{line++, "", t});
    RaceConfig cfg;
    cfg.budget = 20000;
    cfg.verify.max_residue_tuples = 20000;
    BatchReport s, o;
    const double ts = best_ms(repeats, [&] { s = batch(corpus, cfg); });
    cfg.execution = Execution::Parallel;
    const double to = best_ms(repeats, [&] { o = batch(corpus, cfg); });
    bool agree = s.entries.size() == o.entries.size();
    for (std::size_t i = 0; agree && i < s.entries.size(); ++i) agree = s.entries[i].result == o.entries[i].result;
    row("batch, 10 entries, budget 2e4", ts, to, agree);
  }
  return 0;
}
