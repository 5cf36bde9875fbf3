// Runs one randomized verification cell and prints the worst margin seen,
// plus the exact saturation gap of the extremal function.

#include <cstdio>

#include <revbern/revbern.hpp>

int main() {
  using namespace revbern;

  const int k = 3, m = 2, trials = 200, band = 24;
  const VerificationReport rep = run_reverse_suite(k, m, trials, band, 42, 1e-6);

  std::printf("k=%d m=%d trials=%d band=%d\n", rep.k, rep.m, rep.trials, rep.band);
  std::printf("min margin      : %.12f\n", rep.min_margin);
  std::printf("saturation gap  : %.3e\n", rep.saturation_gap);
  std::printf("all pass        : %s\n", rep.all_pass ? "yes" : "no");
  return rep.all_pass ? 0 : 1;
}
