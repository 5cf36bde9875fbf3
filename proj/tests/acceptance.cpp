// Release gate: one line per criterion, [PASS]/[FAIL] plus timing.
// Exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <random>
#include <string>

#include <revbern/revbern.hpp>

#include "a000111_fixture.hpp"

using namespace revbern;

namespace {

int failures = 0;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int idx, const char* name, bool ok, double secs, double limit,
            const std::string& detail) {
  if (limit > 0 && secs >= limit) ok = false;
  if (!ok) ++failures;
  std::printf("[%s] %d %s (%s; %.2f s%s)\n", ok ? "PASS" : "FAIL", idx, name, detail.c_str(),
              secs, limit > 0 ? (" < " + std::to_string(static_cast<int>(limit)) + " s required").c_str() : "");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Coefficients n / 2^26 with |n| < 2^20 keep every multiply and divide by ij
// exactly representable, so the round trip witnesses the operator identity
// bit for bit.
TrigSeries dyadic_tail_sample(int band, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TrigSeries f(band);
  for (int j = 1; j <= band; ++j) {
    const double re = static_cast<double>(static_cast<long long>(rng() % (1u << 21)) - (1 << 20)) * 0x1.0p-26;
    const double im = static_cast<double>(static_cast<long long>(rng() % (1u << 21)) - (1 << 20)) * 0x1.0p-26;
    f.set_coeff(j, {re, im});
    f.set_coeff(-j, {re, -im});
  }
  return f;
}

void criterion_1() {
  Timer t;
  const ConstantsRecord a = constants_record(1, 1);
  const ConstantsRecord b = constants_record(1, 2);
  const double pi = 3.14159265358979323846;
  const double r1 = std::abs(a.C_value - 2.0 / pi) / (2.0 / pi);
  const double r2 = std::abs(b.C_value - 8.0 / (pi * pi)) / (8.0 / (pi * pi));
  report(1, "closed-form constants C_{1,1}, C_{1,2}", r1 <= 1e-12 && r2 <= 1e-12, t.seconds(),
         1.0, "rel diffs " + fmt(r1) + ", " + fmt(r2));
}

void criterion_2() {
  Timer t;
  bool ok = true;
  int first_bad = -1;
  for (int m = 0; m <= 27; ++m)
    if (euler_number(m) != BigInt(a000111_values[static_cast<std::size_t>(m)])) {
      ok = false;
      if (first_bad < 0) first_bad = m;
    }
  report(2, "integer factors match the zigzag table m=0..27", ok, t.seconds(), 1.0,
         ok ? "28/28 exact" : "first mismatch at m=" + std::to_string(first_bad));
}

void criterion_3() {
  Timer t;
  double worst = 0.0;
  for (int k = 1; k <= 8; ++k)
    for (int m = 1; m <= 10; ++m) {
      const double sup = make_extremal(k, m).sup_norm_exact();
      const double d = constants_record(k, m).D_value;
      worst = std::max(worst, std::abs(sup - d) / d);
    }
  report(3, "sup norm of extremals vs recursion, k<=8 m<=10", worst <= 1e-10, t.seconds(), 30.0,
         "max rel diff " + fmt(worst));
}

void criterion_4() {
  Timer t;
  double worst = 0.0;
  for (int k = 1; k <= 4; ++k)
    for (int m = 1; m <= 6; ++m) worst = std::max(worst, saturation_test(k, m));
  report(4, "saturation gap k<=4 m<=6", worst <= 1e-12, t.seconds(), 0.0,
         "max gap " + fmt(worst));
}

void criterion_5() {
  Timer t;
  int failed_trials = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 20260816;
  for (int k = 1; k <= 4; ++k)
    for (int m = 1; m <= 3; ++m) {
      const VerificationReport rep = run_reverse_suite(k, m, 1000, 64, seed, 1e-6, false);
      seed += 1000;
      for (const TrialRecord& r : rep.records)
        if (!r.pass) ++failed_trials;
      min_margin = std::min(min_margin, rep.min_margin);
    }
  report(5, "randomized suite 12000 trials band 64", failed_trials == 0, t.seconds(), 120.0,
         std::to_string(failed_trials) + " failures, min margin " + fmt(min_margin));
}

void criterion_6() {
  Timer t;
  double worst = 0.0;
  for (int k = 1; k <= 5; ++k)
    for (int m = 1; m <= 5; ++m)
      worst = std::max(worst,
                       std::abs(residual_l1(k, m) - constants_record(k, m).D_value));
  report(6, "mean absolute residual vs D, k<=5 m<=5", worst <= 1e-9, t.seconds(), 0.0,
         "max abs diff " + fmt(worst));
}

void criterion_7() {
  Timer t;
  bool ok = true;
  std::string bad;
  for (int k = 1; k <= 5; ++k)
    for (int m = 1; m <= 4; ++m) {
      const ZeroStructureReport r = verify_zero_structure(k, m);
      const bool cell = r.zero_count == static_cast<std::size_t>(2 * k) && r.all_simple &&
                        r.alternating;
      if (!cell && bad.empty())
        bad = "first failure at k=" + std::to_string(k) + " m=" + std::to_string(m);
      ok = ok && cell;
    }
  report(7, "residual zero structure k<=5 m<=4", ok, t.seconds(), 0.0,
         ok ? "2k simple alternating zeros everywhere" : bad);
}

void criterion_8() {
  Timer t;
  bool round_trip = true;
  for (int s = 0; s < 25 && round_trip; ++s) {
    const TrigSeries f = dyadic_tail_sample(16, 900 + static_cast<std::uint64_t>(s));
    const TrigSeries back = f.derivative().antiderivative();
    for (int j = -16; j <= 16; ++j)
      if (back.coeff(j) != f.coeff(j)) round_trip = false;
  }

  double worst_adj = 0.0;
  for (int s = 0; s < 100; ++s) {
    const TrigSeries a = random_tail_sample(1, 8, 5000 + static_cast<std::uint64_t>(s));
    const TrigSeries b = random_tail_sample(1, 8, 6000 + static_cast<std::uint64_t>(s));
    const std::complex<double> sum =
        inner_product(a.antiderivative(), b) + inner_product(a, b.antiderivative());
    worst_adj = std::max(worst_adj, std::abs(sum));
  }

  double worst_pair = 0.0;
  for (int s = 0; s < 20; ++s) {
    const TrigSeries phi = random_tail_sample(1, 8, 7000 + static_cast<std::uint64_t>(s));
    for (int m = 1; m <= 5; ++m) {
      const TrigSeries jm = make_J(m).to_trig_series(8);
      const double lhs = std::abs(phi.antiderivative(m).evaluate_real(pi_double));
      const double rhs = std::abs(inner_product(phi, jm));
      worst_pair = std::max(worst_pair, std::abs(lhs - rhs));
    }
  }

  const bool ok = round_trip && worst_adj <= 1e-12 && worst_pair <= 1e-10;
  report(8, "operator identities", ok, t.seconds(), 0.0,
         std::string("round trip ") + (round_trip ? "exact" : "BROKEN") + ", adjoint gap " +
             fmt(worst_adj) + ", pairing gap " + fmt(worst_pair));
}

void criterion_9() {
  Timer t;
  int failed_trials = 0;
  double worst_eq = 0.0;
  for (int k = 1; k <= 6; ++k) {
    const VerificationReport rep =
        run_forward_suite(k, 500, 8000 + static_cast<std::uint64_t>(k), 1e-9);
    for (const TrialRecord& r : rep.records)
      if (!r.pass) ++failed_trials;
    worst_eq = std::max(worst_eq, rep.saturation_gap);
  }
  report(9, "forward inequality 500 trials per k<=6", failed_trials == 0 && worst_eq <= 1e-12,
         t.seconds(), 0.0,
         std::to_string(failed_trials) + " failures, pure-wave equality gap " + fmt(worst_eq));
}

}  // namespace

int main() {
  Timer total;
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::printf("%d/9 criteria passed (%.2f s total)\n", 9 - failures, total.seconds());
  return failures;
}
