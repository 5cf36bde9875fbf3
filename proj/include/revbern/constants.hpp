#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "revbern/piecewise.hpp"
#include "revbern/polynomial.hpp"
#include "revbern/rational.hpp"
#include "revbern/waves.hpp"

namespace revbern {

/// P_0 = 1; P_{m+1} = integral of P_m from 0 to x for even m, from x to 1
/// for odd m. Exact rational coefficients on [0, 1].
inline RationalPoly poly_P(int m) {
  if (m < 0) throw std::invalid_argument("poly_P: m must be >= 0");
  RationalPoly p = RationalPoly::constant(Rational(1));
  for (int i = 0; i < m; ++i) {
    RationalPoly f = p.antiderivative();
    if (i % 2 == 0) {
      p = f;
    } else {
      p = RationalPoly::constant(f(Rational(1))) - f;
    }
  }
  return p;
}

/// B_m = P_m(0) for even m, P_m(1) for odd m.
inline Rational euler_B(int m) {
  RationalPoly p = poly_P(m);
  return m % 2 == 0 ? p(Rational(0)) : p(Rational(1));
}

inline BigInt factorial(int m) {
  BigInt f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

/// B_m * m!, an up/down count; always a positive integer.
inline BigInt euler_number(int m) {
  Rational e = euler_B(m) * Rational(factorial(m));
  if (denominator(e) != 1) throw std::logic_error("euler_number: B_m * m! not an integer");
  return numerator(e);
}

/// The sharp constants for one (k, m) cell, in exact and floating form.
/// C = (2k/pi)^m / B_m, D = 1/C = (pi/2k)^m * B_m.
struct ConstantsRecord {
  int k = 0;
  int m = 0;
  Rational B;
  BigInt euler;
  PiScaled C;  // pi_power = -m
  PiScaled D;  // pi_power = +m
  double C_value = 0.0;
  double D_value = 0.0;
};

inline ConstantsRecord constants_record(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("constants_record: k, m must be >= 1");
  ConstantsRecord r;
  r.k = k;
  r.m = m;
  r.B = euler_B(m);
  r.euler = euler_number(m);
  Rational two_k_m = rational_pow(Rational(2 * k), m);
  r.C = PiScaled{two_k_m / r.B, -m};
  r.D = PiScaled{r.B / two_k_m, m};
  r.C_value = r.C.to_double();
  r.D_value = r.D.to_double();
  return r;
}

/// Agreement report between the recursion value of D_{k,m} and the two
/// function-side computations: the exact sup-norm of I^{m-1} c_k and the
/// resonance inner product <J_m, c_k'> (odd m) / <J_m, s_k'> (even m).
struct CrossValidation {
  int k = 0;
  int m = 0;
  double recursion_value = 0.0;  // (pi/2k)^m * B_m
  double sup_value = 0.0;        // sup-norm of the extremal
  double resonance_value = 0.0;  // |<J_m, wave'>|
  bool sup_exact_match = false;  // PiPoly-level equality held
  bool resonance_exact_match = false;
  double sup_rel_diff = 0.0;
  double resonance_rel_diff = 0.0;
  bool pass = false;
};

inline CrossValidation cross_validate(int k, int m, double tol) {
  CrossValidation r;
  r.k = k;
  r.m = m;
  ConstantsRecord c = constants_record(k, m);
  r.recursion_value = c.D_value;
  PiPoly d_exact = c.D.to_pi_poly();

  ExactReal sup = make_extremal(k, m).sup_norm_info();
  r.sup_value = sup.value;
  r.sup_exact_match = sup.exact && *sup.exact == d_exact;
  r.sup_rel_diff = std::abs(r.sup_value - r.recursion_value) / r.recursion_value;

  CirclePiecewisePoly wave = m % 2 ? make_c(k) : make_s(k);
  PiPoly res = inner_product_exact(make_J(m), wave.derivative()).abs();
  r.resonance_value = res.to_double();
  r.resonance_exact_match = res == d_exact;
  r.resonance_rel_diff = std::abs(r.resonance_value - r.recursion_value) / r.recursion_value;

  r.pass = r.sup_rel_diff <= tol && r.resonance_rel_diff <= tol;
  return r;
}

}  // namespace revbern
