#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "constants.hpp"
#include "piecewise.hpp"
#include "quadrature.hpp"
#include "trig_series.hpp"
#include "waves.hpp"

namespace revbern {

// Interpolation nodes for the degree-(k-1) L1-optimal approximation of the
// order-m kernel.  `nodes` holds the strictly positive node angles as exact
// multiples of pi; `full_zero_set` lists every prescribed residual sign
// change on the circle, ascending in (-1, 1].
struct NodeSet {
  int k = 0;
  int parity = 0;  // +1: even-order kernel (cosine basis), -1: odd order
  std::vector<Rational> nodes;
  std::vector<Rational> full_zero_set;
};

inline NodeSet node_set(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("node_set: k and m must be positive");
  NodeSet ns;
  ns.k = k;
  ns.parity = (m % 2 == 0) ? +1 : -1;
  if (m % 2 == 1) {
    for (int j = 1; j < k; ++j) ns.nodes.emplace_back(j, k);
    for (int j = k - 1; j >= 1; --j) ns.full_zero_set.emplace_back(-j, k);
    ns.full_zero_set.emplace_back(0);
    for (int j = 1; j < k; ++j) ns.full_zero_set.emplace_back(j, k);
    ns.full_zero_set.emplace_back(1);
  } else {
    for (int j = 0; j < k; ++j) ns.nodes.emplace_back(2 * j + 1, 2 * k);
    for (int j = k - 1; j >= 0; --j) ns.full_zero_set.emplace_back(-(2 * j + 1), 2 * k);
    for (int j = 0; j < k; ++j) ns.full_zero_set.emplace_back(2 * j + 1, 2 * k);
  }
  return ns;
}

// Even interpolant through (a_i, v_i): a combination of cos(j x) built from
// products of (cos x - cos a_j) factors, so the result is even regardless of
// node placement.  Band equals nodes.size() - 1.
inline TrigSeries lagrange_even(const std::vector<double>& angles,
                                const std::vector<double>& values) {
  if (angles.empty() || angles.size() != values.size())
    throw std::invalid_argument("lagrange_even: need matching nonempty node/value lists");
  const std::size_t n = angles.size();
  std::vector<double> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = std::cos(angles[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(c[i] - c[j]) < 1e-13)
        throw std::domain_error("lagrange_even: nodes collide in cos(x)");

  TrigSeries acc(static_cast<int>(n) - 1);
  for (std::size_t i = 0; i < n; ++i) {
    TrigSeries basis(0);
    basis.set_coeff(0, 1.0);
    basis.tag_real();
    double denom = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      TrigSeries factor(1);
      factor.set_coeff(1, 0.5);
      factor.set_coeff(-1, 0.5);
      factor.set_coeff(0, -c[j]);
      factor.tag_real();
      basis = multiply(basis, factor);
      denom *= c[i] - c[j];
    }
    const double scale = values[i] / denom;
    for (int f = -basis.band(); f <= basis.band(); ++f)
      acc.set_coeff(f, acc.coeff(f) + scale * basis.coeff(f));
  }
  acc.tag_real();
  return acc;
}

// Interpolant through the odd count of angles `zeta` (which must contain pi).
// Basis elements carry an (e^{ix} + 1) factor for every other node, so the
// result vanishes at pi by construction and the value supplied there is
// ignored.  Band equals (zeta.size() - 1) / 2; coefficients are symmetrized
// to exact conjugate symmetry before tagging.
inline TrigSeries lagrange_odd(const std::vector<double>& zeta,
                               const std::vector<double>& values) {
  if (zeta.empty() || zeta.size() % 2 == 0 || zeta.size() != values.size())
    throw std::invalid_argument("lagrange_odd: need an odd count of nodes with values");
  const std::size_t nn = zeta.size();
  const int n = static_cast<int>((nn - 1) / 2);
  using C = std::complex<double>;
  std::vector<C> w(nn);
  for (std::size_t i = 0; i < nn; ++i) w[i] = std::polar(1.0, zeta[i]);
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = i + 1; j < nn; ++j)
      if (std::abs(w[i] - w[j]) < 1e-13)
        throw std::domain_error("lagrange_odd: nodes collide on the circle");

  std::vector<C> total(nn, C(0.0));
  for (std::size_t i = 0; i < nn; ++i) {
    if (std::abs(w[i] - C(-1.0)) < 1e-12) continue;  // value at pi is forced to zero
    std::vector<C> poly{C(1.0)};
    C denom(1.0);
    for (std::size_t j = 0; j < nn; ++j) {
      if (j == i) continue;
      std::vector<C> next(poly.size() + 1, C(0.0));
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d + 1] += poly[d];
        next[d] -= poly[d] * w[j];
      }
      poly = std::move(next);
      denom *= w[i] - w[j];
    }
    denom *= std::polar(1.0, -n * zeta[i]);
    const C scale = values[i] / denom;
    for (std::size_t d = 0; d < poly.size(); ++d) total[d] += scale * poly[d];
  }

  TrigSeries acc(n);
  for (int j = -n; j <= n; ++j) {
    const C a = total[static_cast<std::size_t>(j + n)];
    const C b = std::conj(total[static_cast<std::size_t>(-j + n)]);
    C v = (a + b) * 0.5;
    if (j == 0) v = C(v.real());
    acc.set_coeff(j, v);
  }
  acc.tag_real();
  return acc;
}

// Best L1 trigonometric approximation of the order-m kernel from band k-1,
// realized as interpolation at the canonical nodes.
inline TrigSeries interpolate_J(int k, int m) {
  const NodeSet ns = node_set(k, m);
  const CirclePiecewisePoly J = make_J(m);
  std::vector<double> angles, values;
  if (m % 2 == 1) {
    for (const Rational& q : ns.nodes) {
      angles.push_back(to_double(q) * pi_double);
      values.push_back(J.evaluate_at(q).to_double());
      angles.push_back(-to_double(q) * pi_double);
      values.push_back(J.evaluate_at(-q).to_double());
    }
    angles.push_back(pi_double);
    values.push_back(0.0);
    return lagrange_odd(angles, values);
  }
  for (const Rational& q : ns.nodes) {
    angles.push_back(to_double(q) * pi_double);
    values.push_back(J.evaluate_at(q).to_double());
  }
  return lagrange_even(angles, values);
}

struct ZeroStructureReport {
  int k = 0;
  int m = 0;
  std::vector<double> zeros;  // prescribed sign changes, ascending in (-pi, pi]
  std::size_t zero_count = 0;
  double max_residual_at_zeros = 0.0;
  bool residual_vanishes = false;
  bool all_simple = false;
  bool alternating = false;
  bool no_extra_zeros = false;
  bool sign_matches_wave = false;
  bool pass = false;
};

// Checks that the residual J_m - p has exactly the prescribed 2k sign
// changes, each simple, with alternating interval signs matching the
// corner-wave derivative (up to one global sign).
inline ZeroStructureReport verify_zero_structure(int k, int m) {
  const NodeSet ns = node_set(k, m);
  const CirclePiecewisePoly J = make_J(m);
  const TrigSeries p = interpolate_J(k, m);
  ZeroStructureReport rep;
  rep.k = k;
  rep.m = m;
  rep.zero_count = ns.full_zero_set.size();

  auto residual = [&](double x) { return J.evaluate(x) - p.evaluate_real(x); };

  double scale = 0.0;
  const int grid = 512 * k;
  for (int i = 0; i < grid; ++i) {
    const double x = -pi_double + two_pi * (i + 0.5) / grid;
    scale = std::max(scale, std::abs(residual(x)));
  }
  if (scale == 0.0) scale = 1.0;

  rep.max_residual_at_zeros = 0.0;
  for (const Rational& q : ns.full_zero_set) {
    rep.zeros.push_back(to_double(q) * pi_double);
    const double rv = J.evaluate_at(q).to_double() - p.evaluate_real(rep.zeros.back());
    rep.max_residual_at_zeros = std::max(rep.max_residual_at_zeros, std::abs(rv));
  }
  rep.residual_vanishes = rep.max_residual_at_zeros <= 1e-9 * std::max(1.0, scale);

  const std::size_t nz = rep.zeros.size();
  std::vector<int> interval_sign(nz, 0);
  bool extra = false;
  for (std::size_t i = 0; i < nz; ++i) {
    const double a = rep.zeros[i];
    const double b = (i + 1 < nz) ? rep.zeros[i + 1] : rep.zeros[0] + two_pi;
    const int samples = 256;
    int sgn = 0;
    for (int s = 0; s < samples; ++s) {
      const double x = a + (b - a) * (s + 0.5) / samples;
      const double v = residual(x);
      if (std::abs(v) <= 1e-12 * scale) continue;
      const int sv = v > 0 ? 1 : -1;
      if (sgn == 0)
        sgn = sv;
      else if (sv != sgn)
        extra = true;
    }
    interval_sign[i] = sgn;
  }
  rep.no_extra_zeros = !extra && std::none_of(interval_sign.begin(), interval_sign.end(),
                                              [](int s) { return s == 0; });

  rep.alternating = rep.no_extra_zeros;
  for (std::size_t i = 0; i + 1 < nz && rep.alternating; ++i)
    if (interval_sign[i + 1] != -interval_sign[i]) rep.alternating = false;
  if (nz > 1 && interval_sign.front() != -interval_sign.back()) rep.alternating = false;

  // Simplicity: a sign change flanked by a nonvanishing one-sided slope.  At
  // x = pi with m odd the kernel jumps and the zero counts as simple exactly
  // when the interpolant itself vanishes there.
  const CirclePiecewisePoly Jd = J.derivative();
  const TrigSeries pd = p.derivative();
  double dscale = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double x = -pi_double + two_pi * (i + 0.5) / grid;
    dscale = std::max(dscale, std::abs(Jd.evaluate(x) - pd.evaluate_real(x)));
  }
  if (dscale == 0.0) dscale = 1.0;
  rep.all_simple = rep.alternating;
  for (std::size_t i = 0; i < nz && rep.all_simple; ++i) {
    const Rational q = ns.full_zero_set[i];
    if (m % 2 == 1 && q == Rational(1)) {
      if (std::abs(p.evaluate_real(pi_double)) > 1e-9 * std::max(1.0, scale))
        rep.all_simple = false;
      continue;
    }
    const double slope = Jd.evaluate(rep.zeros[i]) - pd.evaluate_real(rep.zeros[i]);
    if (std::abs(slope) <= 1e-8 * dscale) rep.all_simple = false;
  }

  const CirclePiecewisePoly wave = (m % 2 == 1 ? make_c(k) : make_s(k)).derivative();
  rep.sign_matches_wave = rep.no_extra_zeros;
  int flip = 0;
  for (std::size_t i = 0; i < nz && rep.sign_matches_wave; ++i) {
    const double a = rep.zeros[i];
    const double b = (i + 1 < nz) ? rep.zeros[i + 1] : rep.zeros[0] + two_pi;
    const double mid = 0.5 * (a + b);
    const double wv = wave.evaluate(mid);
    const int ws = wv > 0 ? 1 : (wv < 0 ? -1 : 0);
    if (ws == 0 || interval_sign[i] == 0) {
      rep.sign_matches_wave = false;
      break;
    }
    const int rel = interval_sign[i] * ws;
    if (flip == 0)
      flip = rel;
    else if (rel != flip)
      rep.sign_matches_wave = false;
  }

  rep.pass = rep.residual_vanishes && rep.zero_count == static_cast<std::size_t>(2 * k) &&
             rep.all_simple && rep.alternating && rep.no_extra_zeros && rep.sign_matches_wave;
  return rep;
}

// Mean absolute residual (1/2pi) * int |J_m - p| over the circle, integrated
// separately on each sign-constant segment so the integrand is smooth.
inline double residual_l1(int k, int m) {
  const NodeSet ns = node_set(k, m);
  const CirclePiecewisePoly J = make_J(m);
  const TrigSeries p = interpolate_J(k, m);
  auto residual = [&](double x) { return J.evaluate(x) - p.evaluate_real(x); };

  std::vector<double> pts;
  pts.push_back(-pi_double);
  for (const Rational& q : ns.full_zero_set) pts.push_back(to_double(q) * pi_double);
  pts.push_back(pi_double);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double a, double b) { return std::abs(a - b) < 1e-14; }),
            pts.end());

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    total += std::abs(adaptive_simpson(residual, pts[i], pts[i + 1], 1e-12));
  return total / two_pi;
}

struct ConditionReport {
  int k = 0;
  int parity = 0;
  double min_pivot = 0.0;
  double max_pivot = 0.0;
  bool nonsingular = false;
};

// Solvability of the node-value systems: sin(j a) on the interior odd-case
// nodes, cos(j a) on the even-case nodes.  Reports the pivot range of a
// partial-pivoting elimination.
inline ConditionReport interpolation_condition(int k, int parity) {
  if (k < 1 || (parity != 1 && parity != -1))
    throw std::invalid_argument("interpolation_condition: bad arguments");
  ConditionReport rep;
  rep.k = k;
  rep.parity = parity;

  std::vector<double> angles;
  int n = 0;
  if (parity < 0) {
    n = k - 1;
    for (int j = 1; j < k; ++j) angles.push_back(pi_double * j / k);
  } else {
    n = k;
    for (int j = 0; j < k; ++j) angles.push_back(pi_double * (2 * j + 1) / (2 * k));
  }
  if (n == 0) {
    rep.min_pivot = rep.max_pivot = 1.0;
    rep.nonsingular = true;
    return rep;
  }

  std::vector<std::vector<double>> M(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      M[i][j] = parity < 0 ? std::sin((j + 1) * angles[i]) : std::cos(j * angles[i]);

  rep.min_pivot = std::numeric_limits<double>::infinity();
  rep.max_pivot = 0.0;
  for (int col = 0; col < n; ++col) {
    int best = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(M[r][col]) > std::abs(M[best][col])) best = r;
    std::swap(M[col], M[best]);
    const double pivot = std::abs(M[col][col]);
    rep.min_pivot = std::min(rep.min_pivot, pivot);
    rep.max_pivot = std::max(rep.max_pivot, pivot);
    if (pivot == 0.0) break;
    for (int r = col + 1; r < n; ++r) {
      const double f = M[r][col] / M[col][col];
      for (int c = col; c < n; ++c) M[r][c] -= f * M[col][c];
    }
  }
  rep.nonsingular = rep.min_pivot > 1e-12 * std::max(1.0, rep.max_pivot);
  return rep;
}

}  // namespace revbern
