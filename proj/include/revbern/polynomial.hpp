#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "revbern/rational.hpp"

namespace revbern {

/// Dense univariate polynomial, coefficients ascending in degree.
/// Instantiated with double, Rational and PiPoly coefficients.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(T v) { return Polynomial(std::vector<T>{std::move(v)}); }

  static Polynomial monomial(T v, int degree) {
    std::vector<T> c(static_cast<size_t>(degree) + 1, T{});
    c.back() = std::move(v);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  T coeff(int d) const {
    if (d < 0 || d > degree()) return T{};
    return c_[static_cast<size_t>(d)];
  }

  const std::vector<T>& coeffs() const { return c_; }

  T operator()(const T& x) const {
    T acc{};
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<int>(i));
    return Polynomial(std::move(d));
  }

  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const {
    std::vector<T> a(c_.size() + 1, T{});
    for (size_t i = 0; i < c_.size(); ++i) a[i + 1] = c_[i] / static_cast<int>(i + 1);
    return Polynomial(std::move(a));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T{});
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T{});
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T{});
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Polynomial scaled(const T& s) const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T{}) c_.pop_back();
  }

  std::vector<T> c_;
};

using PiecePoly = Polynomial<PiPoly>;
using RationalPoly = Polynomial<Rational>;

inline Polynomial<double> to_double_poly(const PiecePoly& p) {
  std::vector<double> c(p.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs()[i].to_double();
  return Polynomial<double>(std::move(c));
}

inline Polynomial<double> to_double_poly(const RationalPoly& p) {
  std::vector<double> c(p.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = to_double(p.coeffs()[i]);
  return Polynomial<double>(std::move(c));
}

/// Exact value of p at x = q*pi.
inline PiPoly eval_at_pi_multiple(const PiecePoly& p, const Rational& q) {
  PiPoly acc;
  for (int d = p.degree(); d >= 0; --d) {
    acc = (acc * q).shifted_pi(1) + p.coeff(d);
  }
  return acc;
}

/// Compose p with x -> x + delta*pi, exactly.
inline PiecePoly shift_by_pi_multiple(const PiecePoly& p, const Rational& delta) {
  PiecePoly res;
  const PiecePoly lin(
      std::vector<PiPoly>{PiPoly::pi_term(delta, 1), PiPoly(1)});  // x + delta*pi
  for (int d = p.degree(); d >= 0; --d) {
    res = res * lin + PiecePoly::constant(p.coeff(d));
  }
  return res;
}

}  // namespace revbern
