#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace revbern {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Float50 = boost::multiprecision::cpp_bin_float_50;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline const Float50& pi_f50() {
  static const Float50 pi = boost::math::constants::pi<Float50>();
  return pi;
}

inline Rational rational_pow(Rational base, int exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("rational_pow: zero to negative power");
    base = Rational(denominator(base), numerator(base));
    exp = -exp;
  }
  Rational r = 1;
  while (exp > 0) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

/// Exact value of the form sum_i q_i * pi^i with rational q_i.
///
/// Since pi is transcendental, such a value is zero iff every q_i is
/// zero, which makes the equality test exact. Ordering and conversion to
/// double go through 50-digit floating point.
class PiPoly {
 public:
  PiPoly() = default;
  PiPoly(int v) : c_{Rational(v)} { trim(); }
  PiPoly(const Rational& q) : c_{q} { trim(); }

  /// q * pi^power, power >= 0.
  static PiPoly pi_term(const Rational& q, int power) {
    if (power < 0) throw std::invalid_argument("PiPoly: negative pi power");
    PiPoly p;
    p.c_.assign(static_cast<size_t>(power) + 1, Rational(0));
    p.c_[static_cast<size_t>(power)] = q;
    p.trim();
    return p;
  }

  bool is_zero() const { return c_.empty(); }

  /// True when the value carries no pi factor at all.
  bool is_rational() const { return c_.size() <= 1; }

  int max_power() const { return static_cast<int>(c_.size()) - 1; }

  int min_power() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return 0;
  }

  Rational coeff(int power) const {
    if (power < 0 || power > max_power()) return Rational(0);
    return c_[static_cast<size_t>(power)];
  }

  const std::vector<Rational>& coeffs() const { return c_; }

  PiPoly& operator+=(const PiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  PiPoly& operator-=(const PiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  PiPoly& operator*=(const Rational& q) {
    for (auto& c : c_) c *= q;
    trim();
    return *this;
  }
  PiPoly& operator/=(const Rational& q) {
    if (q == 0) throw std::domain_error("PiPoly: division by zero");
    for (auto& c : c_) c /= q;
    return *this;
  }

  friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
  friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
  friend PiPoly operator*(PiPoly a, const Rational& q) { return a *= q; }
  friend PiPoly operator*(const Rational& q, PiPoly a) { return a *= q; }
  friend PiPoly operator/(PiPoly a, const Rational& q) { return a /= q; }
  PiPoly operator-() const {
    PiPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend PiPoly operator*(const PiPoly& a, const PiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    PiPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }

  /// Multiply by pi^delta. Negative delta requires min_power() >= -delta.
  PiPoly shifted_pi(int delta) const {
    if (is_zero()) return {};
    if (delta >= 0) {
      PiPoly r;
      r.c_.assign(c_.size() + static_cast<size_t>(delta), Rational(0));
      for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(delta)] = c_[i];
      return r;
    }
    if (min_power() < -delta)
      throw std::logic_error("PiPoly: shift would produce negative pi power");
    PiPoly r;
    r.c_.assign(c_.begin() + static_cast<long>(-delta), c_.end());
    r.trim();
    return r;
  }

  bool operator==(const PiPoly& o) const { return c_ == o.c_; }

  Float50 to_f50() const {
    Float50 acc = 0;
    const Float50& pi = pi_f50();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * pi + Float50(c_[i]);
    return acc;
  }

  double to_double() const { return to_f50().convert_to<double>(); }

  int sign() const {
    if (is_zero()) return 0;
    Float50 v = to_f50();
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  }

  PiPoly abs() const { return sign() < 0 ? -*this : *this; }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += " + ";
      out += c_[i].str();
      if (i == 1) out += "*pi";
      if (i > 1) out += "*pi^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;  // c_[i] multiplies pi^i
};

/// Single scaled power q * pi^p; unlike PiPoly the exponent may be negative.
/// This is the exact form of the constants C_{k,m} (p = -m) and D_{k,m} (p = m).
struct PiScaled {
  Rational coeff{0};
  int pi_power{0};

  double to_double() const {
    Float50 v = Float50(coeff);
    const Float50& pi = pi_f50();
    if (pi_power >= 0)
      for (int i = 0; i < pi_power; ++i) v *= pi;
    else
      for (int i = 0; i < -pi_power; ++i) v /= pi;
    return v.convert_to<double>();
  }

  PiPoly to_pi_poly() const {
    if (pi_power < 0) throw std::logic_error("PiScaled: negative power has no PiPoly form");
    return PiPoly::pi_term(coeff, pi_power);
  }

  bool operator==(const PiScaled& o) const {
    if (coeff == 0 && o.coeff == 0) return true;
    return coeff == o.coeff && pi_power == o.pi_power;
  }
};

}  // namespace revbern
