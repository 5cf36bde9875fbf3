#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "revbern/polynomial.hpp"

namespace revbern {

namespace detail {

inline double bisect(const Polynomial<double>& p, double lo, double hi) {
  double flo = p(lo);
  if (flo == 0.0) return lo;
  double fhi = p(hi);
  if (fhi == 0.0) return hi;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * (1.0 + std::abs(lo)); ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = p(mid);
    if (fm == 0.0) return mid;
    if ((flo < 0) != (fm < 0)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

inline double coeff_scale(const Polynomial<double>& p, double a, double b) {
  double m = std::max({1.0, std::abs(a), std::abs(b)});
  double s = 0.0, powm = 1.0;
  for (int d = 0; d <= p.degree(); ++d) {
    s += std::abs(p.coeff(d)) * powm;
    powm *= m;
  }
  return s;
}

}  // namespace detail

/// All real roots of p in [a, b], ascending. Roots are isolated by
/// recursing on the derivative (p is monotone between consecutive
/// critical points) and certified by sign-change bisection; critical
/// points where |p| dips below a scaled epsilon are kept as tangential
/// roots. p must not be the zero polynomial.
inline std::vector<double> real_roots(const Polynomial<double>& p, double a, double b) {
  if (p.is_zero()) throw std::domain_error("real_roots: zero polynomial");
  std::vector<double> roots;
  if (p.degree() == 0 || a >= b) return roots;
  if (p.degree() == 1) {
    double r = -p.coeff(0) / p.coeff(1);
    if (r >= a && r <= b) roots.push_back(r);
    return roots;
  }

  std::vector<double> pts{a};
  for (double c : real_roots(p.derivative(), a, b))
    if (c > a && c < b) pts.push_back(c);
  pts.push_back(b);

  const double eps = 1e-12 * detail::coeff_scale(p, a, b);
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    double u = pts[i], v = pts[i + 1];
    double fu = p(u), fv = p(v);
    if (std::abs(fu) <= eps) roots.push_back(u);
    if ((fu < 0) != (fv < 0) && std::abs(fu) > eps && std::abs(fv) > eps) {
      roots.push_back(detail::bisect(p, u, v));
    }
  }
  double fb = p(b);
  if (std::abs(fb) <= eps) roots.push_back(b);

  std::sort(roots.begin(), roots.end());
  const double septol = 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
  std::vector<double> out;
  for (double r : roots)
    if (out.empty() || r - out.back() > septol) out.push_back(r);
  return out;
}

}  // namespace revbern
