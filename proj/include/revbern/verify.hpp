#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "constants.hpp"
#include "trig_series.hpp"
#include "waves.hpp"

namespace revbern {

namespace detail {

// Gaussian pairs via Box-Muller on top of mt19937_64 output.  The standard
// library's normal_distribution is implementation-defined, which would make
// seeded runs differ across toolchains.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = unit();
    const double u2 = unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    have_spare_ = true;
    spare_ = r * std::sin(two_pi * u2);
    return r * std::cos(two_pi * u2);
  }

 private:
  double unit() {  // uniform on (0, 1), never exactly 0
    return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace detail

// Random real series supported on frequencies k <= |j| <= band, with
// independent standard-normal real and imaginary parts on the positive side.
inline TrigSeries random_tail_sample(int k, int band, std::uint64_t seed) {
  if (k < 1 || band < k)
    throw std::invalid_argument("random_tail_sample: need 1 <= k <= band");
  detail::GaussianSource g(seed);
  TrigSeries f(band);
  for (int j = k; j <= band; ++j) {
    const std::complex<double> c(0.5 * g.next(), 0.5 * g.next());
    f.set_coeff(j, c);
    f.set_coeff(-j, std::conj(c));
  }
  f.tag_real();
  return f;
}

// Random real series with full support 0 <= |j| <= k.
inline TrigSeries random_band_sample(int k, std::uint64_t seed) {
  if (k < 0) throw std::invalid_argument("random_band_sample: band must be nonnegative");
  detail::GaussianSource g(seed);
  TrigSeries f(k);
  f.set_coeff(0, g.next());
  for (int j = 1; j <= k; ++j) {
    const std::complex<double> c(0.5 * g.next(), 0.5 * g.next());
    f.set_coeff(j, c);
    f.set_coeff(-j, std::conj(c));
  }
  f.tag_real();
  return f;
}

struct TrialRecord {
  std::uint64_t seed = 0;
  int band = 0;
  double f_norm = 0.0;
  double fm_norm = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  bool pass = false;
};

// Checks ||f^(m)||_inf >= C_{k,m} ||f||_inf for one sample from the k-tail
// space, with sup norms refined an order tighter than the pass tolerance.
inline TrialRecord check_reverse_bernstein(const TrigSeries& f, int k, int m, double tol) {
  if (!f.in_tail(k))
    throw std::domain_error("check_reverse_bernstein: sample has frequencies below k");
  const ConstantsRecord rec = constants_record(k, m);
  const double refine = tol / 10.0;
  TrialRecord t;
  t.band = f.band();
  t.f_norm = f.sup_norm_estimate(refine);
  t.fm_norm = f.derivative(m).sup_norm_estimate(refine);
  t.bound = rec.C_value * t.f_norm;
  t.margin = t.fm_norm - t.bound;
  t.pass = t.fm_norm >= t.bound * (1.0 - tol);
  return t;
}

// Checks ||p'||_inf <= k ||p||_inf for one band-limited sample.
inline TrialRecord check_forward_bernstein(const TrigSeries& p, int k, double tol) {
  int effective = 0;
  for (int j = -p.band(); j <= p.band(); ++j)
    if (p.coeff(j) != std::complex<double>(0.0)) effective = std::max(effective, std::abs(j));
  if (effective > k)
    throw std::domain_error("check_forward_bernstein: sample exceeds band k");
  const double refine = tol / 10.0;
  TrialRecord t;
  t.band = p.band();
  t.f_norm = p.sup_norm_estimate(refine);
  t.fm_norm = p.derivative().sup_norm_estimate(refine);
  t.bound = k * t.f_norm;
  t.margin = t.bound - t.fm_norm;
  t.pass = t.fm_norm <= t.bound * (1.0 + tol);
  return t;
}

// Relative gap between ||f^(m)||/||f|| and C_{k,m} for the extremal function.
// Both norms reduce to single pi powers, so the gap is computed in exact
// rational arithmetic whenever the sup-norm search certifies its candidates.
inline double saturation_test(int k, int m) {
  const CirclePiecewisePoly f = make_extremal(k, m);
  CirclePiecewisePoly d = f;
  for (int i = 0; i < m; ++i) d = d.derivative();
  const ExactReal fn = f.sup_norm_info();
  const ExactReal dn = d.sup_norm_info();
  const ConstantsRecord rec = constants_record(k, m);
  if (fn.exact && dn.exact && dn.exact->is_rational()) {
    const Rational fc = fn.exact->coeff(m);
    if (fc != 0 && *fn.exact == PiPoly::pi_term(fc, m)) {
      const Rational ratio = dn.exact->coeff(0) / fc;  // ratio * pi^{-m}
      const Rational rel = (ratio - rec.C.coeff) / rec.C.coeff;
      return std::abs(to_double(rel));
    }
  }
  return std::abs(dn.value / fn.value - rec.C_value) / rec.C_value;
}

struct VerificationReport {
  int k = 0;
  int m = 0;
  int trials = 0;
  int band = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool forward = false;
  std::vector<TrialRecord> records;
  double min_margin = std::numeric_limits<double>::quiet_NaN();
  double saturation_gap = std::numeric_limits<double>::quiet_NaN();
  bool all_pass = true;
};

inline VerificationReport run_reverse_suite(int k, int m, int trials, int band,
                                            std::uint64_t seed, double tol,
                                            bool with_saturation = true) {
  VerificationReport rep;
  rep.k = k;
  rep.m = m;
  rep.trials = trials;
  rep.band = band;
  rep.seed = seed;
  rep.tol = tol;
  rep.records.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
    TrialRecord rec = check_reverse_bernstein(random_tail_sample(k, band, s), k, m, tol);
    rec.seed = s;
    rep.records.push_back(rec);
    if (std::isnan(rep.min_margin) || rec.margin < rep.min_margin) rep.min_margin = rec.margin;
    rep.all_pass = rep.all_pass && rec.pass;
  }
  if (with_saturation) {
    rep.saturation_gap = saturation_test(k, m);
    rep.all_pass = rep.all_pass && rep.saturation_gap <= 1e-12;
  }
  return rep;
}

// Forward-direction suite; the saturation slot reports the relative equality
// gap for the pure wave e^{ikx}, whose derivative attains the bound.
inline VerificationReport run_forward_suite(int k, int trials, std::uint64_t seed, double tol) {
  VerificationReport rep;
  rep.k = k;
  rep.trials = trials;
  rep.band = k;
  rep.seed = seed;
  rep.tol = tol;
  rep.forward = true;
  rep.records.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
    TrialRecord rec = check_forward_bernstein(random_band_sample(k, s), k, tol);
    rec.seed = s;
    rep.records.push_back(rec);
    if (std::isnan(rep.min_margin) || rec.margin < rep.min_margin) rep.min_margin = rec.margin;
    rep.all_pass = rep.all_pass && rec.pass;
  }
  TrigSeries wave(k);
  wave.set_coeff(k, 1.0);
  const TrialRecord sat = check_forward_bernstein(wave, k, tol);
  rep.saturation_gap = std::abs(sat.bound - sat.fm_norm) / sat.bound;
  rep.all_pass = rep.all_pass && rep.saturation_gap <= 1e-9;
  return rep;
}

}  // namespace revbern
