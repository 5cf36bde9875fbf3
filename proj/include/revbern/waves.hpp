#pragma once

#include <stdexcept>
#include <vector>

#include "revbern/piecewise.hpp"

namespace revbern {

/// Triangle wave c_k: period 2pi/k, peak pi/(2k) at x = 0, slopes +-1,
/// corners at the multiples of pi/k.
inline CirclePiecewisePoly make_c(int k) {
  if (k < 1) throw std::invalid_argument("make_c: k must be >= 1");
  std::vector<Rational> bps;
  std::vector<PiecePoly> pieces;
  bps.reserve(2 * static_cast<size_t>(k));
  pieces.reserve(2 * static_cast<size_t>(k));
  for (int j = -k; j < k; ++j) {
    // on [j pi/k, (j+1) pi/k): -x + (2j+1)pi/(2k) for even j, the negative
    // shift with slope +1 for odd j
    Rational mid(2 * j + 1, 2 * k);
    bool even = ((j % 2) + 2) % 2 == 0;
    PiPoly c0 = PiPoly::pi_term(even ? mid : -mid, 1);
    std::vector<PiPoly> coeffs{c0, PiPoly(even ? -1 : 1)};
    pieces.emplace_back(std::move(coeffs));
    bps.emplace_back(j + 1, k);
  }
  return CirclePiecewisePoly(std::move(bps), std::move(pieces), 0);
}

/// s_k(x) = c_k(x - pi/(2k)); same sign and monotonicity as sin(kx),
/// corners at the odd multiples of pi/(2k).
inline CirclePiecewisePoly make_s(int k) {
  if (k < 1) throw std::invalid_argument("make_s: k must be >= 1");
  std::vector<Rational> bps;
  std::vector<PiecePoly> pieces;
  auto piece_for = [k](int r) {
    // on [(2r-1) pi/(2k), (2r+1) pi/(2k)): x - r pi/k for even r, else
    // r pi/k - x
    Rational c(r, k);
    bool even = ((r % 2) + 2) % 2 == 0;
    std::vector<PiPoly> coeffs{PiPoly::pi_term(even ? -c : c, 1), PiPoly(even ? 1 : -1)};
    return PiecePoly(std::move(coeffs));
  };
  pieces.push_back(piece_for(-k));
  bps.emplace_back(-2 * k + 1, 2 * k);
  for (int r = -k + 1; r <= k - 1; ++r) {
    pieces.push_back(piece_for(r));
    bps.emplace_back(2 * r + 1, 2 * k);
  }
  pieces.push_back(piece_for(k));
  bps.emplace_back(1);
  return CirclePiecewisePoly(std::move(bps), std::move(pieces), 0);
}

/// J_1(x) = x on (-pi, pi) with the point value J_1(pi) = 0; J_m is the
/// (m-1)-fold zero-average primitive of J_1, a single polynomial piece with
/// the parity of m.
inline CirclePiecewisePoly make_J(int m) {
  if (m < 1) throw std::invalid_argument("make_J: m must be >= 1");
  std::vector<PiPoly> x_coeffs{PiPoly(), PiPoly(1)};
  CirclePiecewisePoly j({Rational(1)}, {PiecePoly(std::move(x_coeffs))}, -1);
  if (m == 1) return j.with_override(Rational(1), PiPoly());
  return j.antiderivative_zero_mean(m - 1);
}

/// I^m c_k' = I^{m-1} c_k: the member of the k-tail space whose m-th
/// derivative has sup-norm 1 while its own sup-norm is maximal, attaining
/// equality in the reverse Bernstein inequality.
inline CirclePiecewisePoly make_extremal(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("make_extremal: k, m must be >= 1");
  return make_c(k).antiderivative_zero_mean(m - 1);
}

}  // namespace revbern
