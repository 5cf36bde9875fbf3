// Prints the sharp constants C_{k,m} and D_{k,m} for a small grid, then
// evaluates the extremal function realizing equality for k = 2, m = 2.

#include <cstdio>

#include <revbern/revbern.hpp>

int main() {
  using namespace revbern;

  std::printf("%3s %3s %22s %22s\n", "k", "m", "C_{k,m}", "D_{k,m}");
  for (int k = 1; k <= 4; ++k)
    for (int m = 1; m <= 3; ++m) {
      const ConstantsRecord r = constants_record(k, m);
      std::printf("%3d %3d %22.15f %22.15f\n", k, m, r.C_value, r.D_value);
    }

  const CirclePiecewisePoly f = make_extremal(2, 2);
  const ExactReal sup = f.sup_norm_info();
  std::printf("\nextremal (k=2, m=2): sup norm = %.15f", sup.value);
  if (sup.exact) std::printf(" = %s", sup.exact->str().c_str());
  std::printf("\nsamples:\n");
  for (int i = 0; i <= 8; ++i) {
    const double x = -pi_double + i * (two_pi / 8);
    std::printf("  f(% .4f) = % .12f\n", x, f.evaluate(x));
  }
  return 0;
}
