#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "revbern/quadrature.hpp"

namespace revbern {

inline constexpr double pi_double = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Reduce an angle to (-pi, pi].
inline double normalize_angle(double x) {
  double r = std::remainder(x, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

/// Finite band of Fourier coefficients on the circle with the normalized
/// measure dx/(2 pi): f(x) = sum_{|j| <= band} c_j e^{ijx}.
///
/// Values are treated as immutable once built; every operation below is a
/// pure function returning a new series, so concurrent use needs no locking.
class TrigSeries {
 public:
  using Complex = std::complex<double>;

  explicit TrigSeries(int band = 0) : band_(band), c_(2 * static_cast<size_t>(band) + 1) {
    if (band < 0) throw std::invalid_argument("TrigSeries: negative band");
  }

  TrigSeries(int band, std::vector<std::pair<int, Complex>> coeffs, bool real_tagged = false)
      : TrigSeries(band) {
    for (auto& [j, v] : coeffs) set_coeff(j, v);
    if (real_tagged) tag_real();
  }

  int band() const { return band_; }
  bool is_real() const { return real_; }

  Complex coeff(int j) const {
    if (std::abs(j) > band_) return {};
    return c_[static_cast<size_t>(j + band_)];
  }

  void set_coeff(int j, Complex v) {
    if (std::abs(j) > band_) throw std::invalid_argument("TrigSeries: frequency outside band");
    c_[static_cast<size_t>(j + band_)] = v;
    real_ = false;
  }

  /// Mark the series as real-valued; requires exact conjugate symmetry.
  void tag_real() {
    for (int j = 0; j <= band_; ++j)
      if (coeff(-j) != std::conj(coeff(j)))
        throw std::invalid_argument("TrigSeries: real tag needs conjugate-symmetric coefficients");
    real_ = true;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](Complex v) { return v == Complex{}; });
  }

  /// Smallest k such that the series lies in T_k (all |j| < k coefficients
  /// vanish exactly). Zero series reports band+1.
  int tail_index() const {
    for (int a = 0; a <= band_; ++a)
      if (coeff(a) != Complex{} || coeff(-a) != Complex{}) return a;
    return band_ + 1;
  }

  bool in_tail(int k) const { return tail_index() >= k; }

  Complex evaluate(double x) const {
    x = normalize_angle(x);
    const Complex w = std::polar(1.0, x);
    Complex acc{};
    for (size_t i = c_.size(); i-- > 0;) acc = acc * w + c_[i];
    return acc * std::polar(1.0, -band_ * x);
  }

  double evaluate_real(double x) const { return evaluate(x).real(); }

  /// Spectral differentiation: c_j -> (ij) c_j.
  TrigSeries derivative() const {
    TrigSeries d(band_);
    for (int j = -band_; j <= band_; ++j) d.set_coeff(j, coeff(j) * Complex(0.0, j));
    d.real_ = real_;
    return d;
  }

  TrigSeries derivative(int order) const {
    TrigSeries d = *this;
    for (int i = 0; i < order; ++i) d = d.derivative();
    return d;
  }

  /// The primitive operator I: c_j -> c_j / (ij) on zero-mean series.
  /// Inverse of derivative() on T_1; preserves every T_k.
  TrigSeries antiderivative() const {
    double scale = 0.0;
    for (auto v : c_) scale = std::max(scale, std::abs(v));
    if (std::abs(coeff(0)) > 1e-12 * std::max(scale, 1e-300))
      throw std::domain_error("antiderivative: series has nonzero mean");
    TrigSeries a(band_);
    for (int j = -band_; j <= band_; ++j) {
      if (j == 0) continue;
      a.set_coeff(j, coeff(j) / Complex(0.0, j));
    }
    a.real_ = real_;
    return a;
  }

  TrigSeries antiderivative(int order) const {
    TrigSeries a = *this;
    for (int i = 0; i < order; ++i) a = a.antiderivative();
    return a;
  }

  /// Orthogonal projection onto T_k: zero out all |j| < k.
  TrigSeries project_tail(int k) const {
    TrigSeries p(band_);
    for (int j = -band_; j <= band_; ++j) p.set_coeff(j, std::abs(j) < k ? Complex{} : coeff(j));
    p.real_ = real_;
    return p;
  }

  /// Estimate of max |f| over the circle: dense grid of at least
  /// 16*(band+1) points, then parabolic refinement of each local peak
  /// down to bracket width refine_tol. Only evaluated points enter the
  /// result, so the value is a certified lower bound of the true sup
  /// and converges to it as refine_tol -> 0.
  double sup_norm_estimate(double refine_tol = 1e-9) const {
    const int grid = std::max(16 * (band_ + 1), 64);
    const double h = two_pi / grid;
    std::vector<double> vals(static_cast<size_t>(grid));
    for (int i = 0; i < grid; ++i) vals[static_cast<size_t>(i)] = std::abs(evaluate(-std::numbers::pi + i * h));
    double best = *std::max_element(vals.begin(), vals.end());

    auto mag = [this](double x) { return std::abs(evaluate(x)); };
    for (int i = 0; i < grid; ++i) {
      double vm = vals[static_cast<size_t>(i)];
      if (vm < vals[static_cast<size_t>((i + grid - 1) % grid)] ||
          vm < vals[static_cast<size_t>((i + 1) % grid)])
        continue;
      double xm = -std::numbers::pi + i * h;
      double a = xm - h, b = xm + h;
      double fa = vals[static_cast<size_t>((i + grid - 1) % grid)];
      double fb = vals[static_cast<size_t>((i + 1) % grid)];
      double fm = vm;
      for (int it = 0; it < 200 && b - a > refine_tol; ++it) {
        // vertex of the parabola through (a,fa),(xm,fm),(b,fb)
        double d1 = (xm - a) * (fm - fb), d2 = (xm - b) * (fm - fa);
        double denom = 2.0 * (d1 - d2);
        double v;
        if (denom != 0.0) {
          v = xm - ((xm - a) * d1 - (xm - b) * d2) / denom;
        } else {
          v = 0.5 * (a + b);
        }
        if (!(v > a && v < b) || v == xm) v = (xm - a > b - xm) ? 0.5 * (a + xm) : 0.5 * (xm + b);
        double fv = mag(v);
        if (fv > fm) {
          if (v < xm) b = xm, fb = fm;
          else a = xm, fa = fm;
          xm = v;
          fm = fv;
        } else {
          if (v < xm) a = v, fa = fv;
          else b = v, fb = fv;
        }
      }
      best = std::max(best, fm);
    }
    return best;
  }

  /// (1/2pi) * integral of |f| by adaptive Simpson between the sign
  /// changes of the (real-tagged) series, absolute tolerance tol.
  double l1_norm_estimate(double tol = 1e-10) const {
    if (!real_)
      throw std::domain_error("l1_norm_estimate: series must be real-tagged");
    if (is_zero()) return 0.0;

    const int grid = std::max(32 * (band_ + 1), 128);
    const double h = two_pi / grid;
    std::vector<double> cuts{-std::numbers::pi};
    double prev = evaluate_real(-std::numbers::pi);
    for (int i = 1; i <= grid; ++i) {
      double x = -std::numbers::pi + i * h;
      double cur = evaluate_real(x);
      if ((prev < 0) != (cur < 0) && prev != 0.0) {
        double lo = x - h, hi = x, flo = prev;
        for (int it = 0; it < 120 && hi - lo > 1e-15; ++it) {
          double mid = 0.5 * (lo + hi), fm = evaluate_real(mid);
          if (fm == 0.0) { lo = hi = mid; break; }
          if ((flo < 0) != (fm < 0)) hi = mid;
          else lo = mid, flo = fm;
        }
        cuts.push_back(0.5 * (lo + hi));
      }
      prev = cur;
    }
    cuts.push_back(std::numbers::pi);

    auto af = [this](double x) { return std::abs(evaluate_real(x)); };
    double total = 0.0;
    double seg_tol = tol * two_pi / static_cast<double>(cuts.size());
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
      total += adaptive_simpson(af, cuts[i], cuts[i + 1], seg_tol);
    return total / two_pi;
  }

 private:
  int band_;
  std::vector<Complex> c_;
  bool real_ = false;
};

/// Parseval inner product <a, b> = sum_j a_j conj(b_j).
inline TrigSeries::Complex inner_product(const TrigSeries& a, const TrigSeries& b) {
  TrigSeries::Complex s{};
  int n = std::min(a.band(), b.band());
  for (int j = -n; j <= n; ++j) s += a.coeff(j) * std::conj(b.coeff(j));
  return s;
}

inline TrigSeries project_tail(const TrigSeries& s, int k) { return s.project_tail(k); }

/// Pointwise product (coefficient convolution). A product of real-tagged
/// factors is re-symmetrized from the j >= 0 half before tagging, since
/// round-off in the two accumulation orders can differ by an ulp.
inline TrigSeries multiply(const TrigSeries& a, const TrigSeries& b) {
  TrigSeries r(a.band() + b.band());
  for (int j = -a.band(); j <= a.band(); ++j) {
    if (a.coeff(j) == TrigSeries::Complex{}) continue;
    for (int l = -b.band(); l <= b.band(); ++l)
      r.set_coeff(j + l, r.coeff(j + l) + a.coeff(j) * b.coeff(l));
  }
  if (a.is_real() && b.is_real()) {
    r.set_coeff(0, r.coeff(0).real());
    for (int j = 1; j <= r.band(); ++j) r.set_coeff(-j, std::conj(r.coeff(j)));
    r.tag_real();
  }
  return r;
}

}  // namespace revbern
