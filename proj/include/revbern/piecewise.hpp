#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "revbern/polynomial.hpp"
#include "revbern/rational.hpp"
#include "revbern/roots.hpp"
#include "revbern/trig_series.hpp"

namespace revbern {

namespace detail {

inline BigInt rational_floor(const Rational& q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt f = n / d;
  if (f * d != n && n < 0) --f;
  return f;
}

/// Reduce q mod 2 into (-1, 1].
inline Rational norm_half_open(const Rational& q) {
  BigInt k = -rational_floor((Rational(1) - q) / 2);
  return q - 2 * Rational(k);
}

/// Reduce q mod 2 into [-1, 1).
inline Rational norm_closed_left(const Rational& q) {
  BigInt k = rational_floor((q + 1) / 2);
  return q - 2 * Rational(k);
}

/// Best rational approximation to t with denominator <= max_den, by
/// continued fractions; accepted only when within tol of t.
inline std::optional<Rational> snap_to_rational(double t, long long max_den, double tol) {
  if (!(std::abs(t) < 1e15)) return std::nullopt;
  double x = t;
  long long pm1 = 1, qm1 = 0, pm2 = 0, qm2 = 1;
  for (int it = 0; it < 64; ++it) {
    double fa = std::floor(x);
    if (std::abs(fa) > 9e17) break;
    long long a = static_cast<long long>(fa);
    if (qm1 > (max_den - qm2) / std::max<long long>(a, 1) && a > 0 && qm1 > 0) {
      // next denominator would exceed the cap
      if (a * qm1 + qm2 > max_den) break;
    }
    long long p = a * pm1 + pm2, q = a * qm1 + qm2;
    if (q > max_den) break;
    pm2 = pm1; qm2 = qm1; pm1 = p; qm1 = q;
    double frac = x - fa;
    if (frac < 1e-12) break;
    x = 1.0 / frac;
  }
  if (qm1 < 1) return std::nullopt;
  if (std::abs(t - static_cast<double>(pm1) / static_cast<double>(qm1)) > tol) return std::nullopt;
  return Rational(pm1, qm1);
}

inline std::vector<long long> divisors(long long n) {
  std::vector<long long> out;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline PiecePoly compose_neg(const PiecePoly& p) {
  std::vector<PiPoly> c = p.coeffs();
  for (size_t d = 1; d < c.size(); d += 2) c[d] = -c[d];
  return PiecePoly(std::move(c));
}

inline PiecePoly nth_derivative(PiecePoly p, int r) {
  for (int i = 0; i < r; ++i) p = p.derivative();
  return p;
}

}  // namespace detail

enum class ZeroKind { Simple, Multiple, JumpCrossing };

struct CircleZero {
  double angle = 0.0;                // representative in (-pi, pi]
  std::optional<Rational> exact_q;   // angle == q*pi when certified
  ZeroKind kind = ZeroKind::Simple;
};

/// A norm (or similar scalar) carried both as a double and, when every
/// contributing quantity was resolved in exact arithmetic, as a PiPoly.
struct ExactReal {
  double value = 0.0;
  std::optional<PiPoly> exact;
};

/// Piecewise polynomial on the circle. Breakpoints are rational multiples
/// of pi, strictly increasing in (-1, 1] with the last equal to 1, so piece
/// i lives on [b_{i-1} pi, b_i pi) (piece 0 starts at -pi). Values at
/// breakpoints follow the right-limit convention; isolated point values can
/// be overridden. Immutable after construction; operations are pure.
class CirclePiecewisePoly {
 public:
  CirclePiecewisePoly(std::vector<Rational> breakpoints, std::vector<PiecePoly> pieces,
                      int continuity)
      : bps_(std::move(breakpoints)), pieces_(std::move(pieces)), continuity_(continuity) {
    if (bps_.empty() || bps_.size() != pieces_.size())
      throw std::invalid_argument("CirclePiecewisePoly: piece/breakpoint count mismatch");
    if (bps_.back() != 1)
      throw std::invalid_argument("CirclePiecewisePoly: last breakpoint must be pi");
    for (size_t i = 0; i < bps_.size(); ++i) {
      if (bps_[i] <= -1 || bps_[i] > 1)
        throw std::invalid_argument("CirclePiecewisePoly: breakpoint outside (-pi, pi]");
      if (i > 0 && bps_[i - 1] >= bps_[i])
        throw std::invalid_argument("CirclePiecewisePoly: breakpoints not increasing");
    }
    if (continuity_ < -1) throw std::invalid_argument("CirclePiecewisePoly: bad continuity class");
    check_continuity();
  }

  static CirclePiecewisePoly constant(const PiPoly& v) {
    return CirclePiecewisePoly({Rational(1)}, {PiecePoly::constant(v)}, 0);
  }

  size_t piece_count() const { return pieces_.size(); }
  const std::vector<Rational>& breakpoints() const { return bps_; }
  const PiecePoly& piece(size_t i) const { return pieces_.at(i); }
  int continuity() const { return continuity_; }
  const std::vector<std::pair<Rational, PiPoly>>& overrides() const { return overrides_; }

  /// Returns a copy with an isolated point value pinned at angle q*pi.
  CirclePiecewisePoly with_override(const Rational& q, const PiPoly& v) const {
    CirclePiecewisePoly r = *this;
    Rational a = detail::norm_half_open(q);
    for (auto& [oq, ov] : r.overrides_)
      if (oq == a) { ov = v; return r; }
    r.overrides_.emplace_back(a, v);
    std::sort(r.overrides_.begin(), r.overrides_.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return r;
  }

  /// Start of piece i as a rational multiple of pi.
  Rational piece_start(size_t i) const { return i == 0 ? Rational(-1) : bps_[i - 1]; }
  Rational piece_end(size_t i) const { return bps_[i]; }

  /// Index of the piece whose half-open interval contains q (q in [-1, 1)).
  size_t piece_index(const Rational& q) const {
    return static_cast<size_t>(std::upper_bound(bps_.begin(), bps_.end(), q) - bps_.begin());
  }

  /// Piece polynomial in effect at angle q*pi (q reduced mod 2 internally).
  const PiecePoly& poly_at(const Rational& q) const {
    return pieces_[piece_index(detail::norm_closed_left(q))];
  }

  /// Exact value at angle q*pi, honoring overrides and the right-limit
  /// convention at breakpoints.
  PiPoly evaluate_at(const Rational& q) const {
    Rational a = detail::norm_half_open(q);
    for (const auto& [oq, ov] : overrides_)
      if (oq == a) return ov;
    Rational r = detail::norm_closed_left(a);
    return eval_at_pi_multiple(pieces_[piece_index(r)], r);
  }

  double evaluate(double x) const {
    double r = std::remainder(x, two_pi);
    if (r >= std::numbers::pi) r -= two_pi;
    for (const auto& [oq, ov] : overrides_) {
      double oa = to_double(oq) * std::numbers::pi;
      if (oa >= std::numbers::pi) oa -= two_pi;
      if (r == oa) return ov.to_double();
    }
    size_t i = 0;
    while (i + 1 < bps_.size() && r >= to_double(bps_[i]) * std::numbers::pi) ++i;
    return to_double_poly(pieces_[i])(r);
  }

  /// Exact mean (1/2pi) * integral over the circle.
  PiPoly mean() const {
    PiPoly total;
    for (size_t i = 0; i < pieces_.size(); ++i) {
      PiecePoly a = pieces_[i].antiderivative();
      total += eval_at_pi_multiple(a, piece_end(i)) - eval_at_pi_multiple(a, piece_start(i));
    }
    return total.shifted_pi(-1) / Rational(2);
  }

  /// Piecewise derivative; continuity drops by one, point overrides vanish.
  CirclePiecewisePoly derivative() const {
    std::vector<PiecePoly> d;
    d.reserve(pieces_.size());
    for (const auto& p : pieces_) d.push_back(p.derivative());
    return CirclePiecewisePoly(bps_, std::move(d), std::max(-1, continuity_ - 1));
  }

  /// The continuous primitive with zero average (operator I on the exact
  /// side). Requires exact zero mean.
  CirclePiecewisePoly antiderivative_zero_mean() const {
    if (!mean().is_zero())
      throw std::domain_error("antiderivative_zero_mean: function has nonzero mean");
    std::vector<PiecePoly> prim;
    prim.reserve(pieces_.size());
    PiPoly carry;  // value of the primitive at the left end of the next piece
    for (size_t i = 0; i < pieces_.size(); ++i) {
      PiecePoly a = pieces_[i].antiderivative();
      PiPoly k = carry - eval_at_pi_multiple(a, piece_start(i));
      a += PiecePoly::constant(k);
      carry = eval_at_pi_multiple(a, piece_end(i));
      prim.push_back(std::move(a));
    }
    PiPoly total;
    for (size_t i = 0; i < prim.size(); ++i) {
      PiecePoly aa = prim[i].antiderivative();
      total += eval_at_pi_multiple(aa, piece_end(i)) - eval_at_pi_multiple(aa, piece_start(i));
    }
    PiPoly m = total.shifted_pi(-1) / Rational(2);
    for (auto& p : prim) p -= PiecePoly::constant(m);
    return CirclePiecewisePoly(bps_, std::move(prim), continuity_ + 1);
  }

  CirclePiecewisePoly antiderivative_zero_mean(int order) const {
    CirclePiecewisePoly r = *this;
    for (int i = 0; i < order; ++i) r = r.antiderivative_zero_mean();
    return r;
  }

  CirclePiecewisePoly negated() const {
    std::vector<PiecePoly> p;
    p.reserve(pieces_.size());
    for (const auto& q : pieces_) p.push_back(q.scaled(PiPoly(-1)));
    CirclePiecewisePoly r(bps_, std::move(p), continuity_);
    for (const auto& [oq, ov] : overrides_) r.overrides_.emplace_back(oq, -ov);
    return r;
  }

  /// x -> f(-x); overrides move with their points.
  CirclePiecewisePoly reflected() const {
    std::vector<Rational> t;
    t.reserve(bps_.size());
    for (const auto& b : bps_) t.push_back(detail::norm_half_open(-b));
    std::sort(t.begin(), t.end());
    std::vector<PiecePoly> p;
    p.reserve(t.size());
    for (size_t j = 0; j < t.size(); ++j) {
      Rational u = j == 0 ? Rational(-1) : t[j - 1];
      Rational m = (u + t[j]) / 2;
      Rational w = detail::norm_closed_left(-m);
      Rational delta = -m - w;  // even integer; f(y) = Q(y - delta*pi) near -m
      p.push_back(shift_by_pi_multiple(detail::compose_neg(poly_at(w)), delta));
    }
    CirclePiecewisePoly r(std::move(t), std::move(p), continuity_);
    for (const auto& [oq, ov] : overrides_)
      r = r.with_override(detail::norm_half_open(-oq), ov);
    return r;
  }

  /// Exact test of the symmetry f(x + dq*pi) == sign * f(x).
  bool shift_identity(const Rational& dq, int sign) const {
    std::vector<Rational> s;
    for (const auto& b : bps_) {
      s.push_back(detail::norm_closed_left(b));
      s.push_back(detail::norm_closed_left(b - dq));
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (size_t j = 0; j < s.size(); ++j) {
      Rational v = j + 1 < s.size() ? s[j + 1] : Rational(1);
      Rational m = (s[j] + v) / 2;
      Rational w = detail::norm_closed_left(m + dq);
      // f(x + dq*pi) equals Q(x + (w - m)*pi) for x near m, where Q is the
      // piece in effect at w and w - m differs from dq by an even integer.
      PiecePoly lhs = shift_by_pi_multiple(poly_at(w), w - m);
      if (!(lhs == poly_at(m).scaled(PiPoly(sign)))) return false;
    }
    return true;
  }

  ExactReal sup_norm_info() const {
    Float50 best = -1;
    std::optional<PiPoly> best_exact;
    auto consider_exact = [&](const PiPoly& v) {
      PiPoly a = v.abs();
      Float50 f = a.to_f50();
      if (f > best) { best = f; best_exact = a; }
    };
    auto consider_numeric = [&](double a) {
      if (best_exact && Float50(a) <= best * Float50(1 + 1e-13)) return;
      if (Float50(a) > best) { best = a; best_exact.reset(); }
    };
    long long max_den = snap_denominator_bound();
    for (size_t i = 0; i < pieces_.size(); ++i) {
      Rational u = piece_start(i), v = piece_end(i);
      consider_exact(eval_at_pi_multiple(pieces_[i], u));
      consider_exact(eval_at_pi_multiple(pieces_[i], v));
      PiecePoly d = pieces_[i].derivative();
      if (d.degree() < 1) continue;  // constant or linear piece: endpoints suffice
      const PiecePoly local = local_piece(i);
      auto dd = to_double_poly(local.derivative());
      if (dd.degree() < 1) continue;
      const double len = to_double(v - u) * std::numbers::pi;
      auto pd = to_double_poly(local);
      for (double r : real_roots(dd, 0.0, len)) {
        auto off = detail::snap_to_rational(r / std::numbers::pi, max_den, 1e-8);
        if (off) {
          const Rational q = u + *off;
          if (q > u && q < v && eval_at_pi_multiple(d, q).is_zero()) {
            consider_exact(eval_at_pi_multiple(pieces_[i], q));
            continue;
          }
        }
        consider_numeric(std::abs(pd(r)));
      }
    }
    ExactReal out;
    out.exact = best_exact;
    out.value = best_exact ? best_exact->to_double() : best.convert_to<double>();
    return out;
  }

  double sup_norm_exact() const { return sup_norm_info().value; }

  ExactReal l1_norm_info() const {
    PiPoly exact_total;
    Float50 num_total = 0;
    bool all_exact = true;
    long long max_den = snap_denominator_bound();
    for (size_t i = 0; i < pieces_.size(); ++i) {
      if (pieces_[i].is_zero()) continue;
      Rational u = piece_start(i), v = piece_end(i);
      const PiecePoly local = local_piece(i);
      const double len = to_double(v - u) * std::numbers::pi;
      struct Pt { double t; std::optional<Rational> q; };  // t: offset from u*pi
      std::vector<Pt> pts{{0.0, u}};
      if (pieces_[i].degree() >= 1) {
        for (double r : real_roots(to_double_poly(local), 0.0, len)) {
          if (r < 1e-12 || len - r < 1e-12) continue;
          auto off = detail::snap_to_rational(r / std::numbers::pi, max_den, 1e-8);
          std::optional<Rational> q;
          if (off) {
            const Rational cand = u + *off;
            if (cand > u && cand < v && eval_at_pi_multiple(pieces_[i], cand).is_zero())
              q = cand;
          }
          pts.push_back({r, q});
        }
      }
      pts.push_back({len, v});
      std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.t < b.t; });
      PiecePoly a = pieces_[i].antiderivative();
      auto ad = to_double_poly(local.antiderivative());
      for (size_t j = 0; j + 1 < pts.size(); ++j) {
        if (pts[j].q && pts[j + 1].q) {
          PiPoly seg = eval_at_pi_multiple(a, *pts[j + 1].q) - eval_at_pi_multiple(a, *pts[j].q);
          seg = seg.abs();
          exact_total += seg;
          num_total += seg.to_f50();
        } else {
          num_total += std::abs(ad(pts[j + 1].t) - ad(pts[j].t));
          all_exact = false;
        }
      }
    }
    ExactReal out;
    if (all_exact) {
      out.exact = exact_total.shifted_pi(-1) / Rational(2);
      out.value = out.exact->to_double();
    } else {
      out.value = (num_total / (2 * pi_f50())).convert_to<double>();
    }
    return out;
  }

  double l1_norm_exact() const { return l1_norm_info().value; }

  /// All zeros of f on the circle with simplicity information. Jump
  /// discontinuities whose one-sided limits have opposite signs are
  /// reported as JumpCrossing.
  std::vector<CircleZero> signed_zero_set() const {
    for (const auto& p : pieces_)
      if (p.is_zero())
        throw std::domain_error("signed_zero_set: a piece is identically zero");
    std::vector<CircleZero> zs;
    long long max_den = snap_denominator_bound();
    for (size_t i = 0; i < pieces_.size(); ++i) {
      Rational u = piece_start(i), v = piece_end(i);
      if (pieces_[i].degree() < 1) continue;  // nonzero constant: no zeros
      const PiecePoly local = local_piece(i);
      const double len = to_double(v - u) * std::numbers::pi;
      auto pd = to_double_poly(local);
      PiecePoly dp = pieces_[i].derivative();
      auto dpd = to_double_poly(local.derivative());
      for (double r : real_roots(pd, 0.0, len)) {
        if (r < 1e-10 || len - r < 1e-10) continue;  // breakpoints handled below
        CircleZero z;
        auto off = detail::snap_to_rational(r / std::numbers::pi, max_den, 1e-8);
        std::optional<Rational> q;
        if (off) {
          const Rational cand = u + *off;
          if (cand > u && cand < v && eval_at_pi_multiple(pieces_[i], cand).is_zero()) q = cand;
        }
        if (q) {
          z.exact_q = *q;
          z.angle = to_double(*q) * std::numbers::pi;
          z.kind = eval_at_pi_multiple(dp, *q).is_zero() ? ZeroKind::Multiple : ZeroKind::Simple;
        } else {
          z.angle = to_double(u) * std::numbers::pi + r;
          double scale = std::abs(pd(0.0)) + std::abs(pd(len)) + 1.0;
          z.kind = std::abs(dpd(r)) > 1e-12 * scale ? ZeroKind::Simple : ZeroKind::Multiple;
        }
        zs.push_back(z);
      }
    }
    for (size_t i = 0; i < bps_.size(); ++i) {
      const Rational& b = bps_[i];
      size_t next = (i + 1) % pieces_.size();
      Rational right_pt = i + 1 == pieces_.size() ? Rational(-1) : b;
      PiPoly left = eval_at_pi_multiple(pieces_[i], b);
      PiPoly right = eval_at_pi_multiple(pieces_[next], right_pt);
      CircleZero z;
      z.exact_q = b;
      z.angle = to_double(b) * std::numbers::pi;
      if (left == right) {
        if (!right.is_zero()) continue;
        auto side = [](const PiecePoly& p, const Rational& at, int dir) {
          PiecePoly d = p;
          for (int r = 1; r <= p.degree(); ++r) {
            d = d.derivative();
            PiPoly val = eval_at_pi_multiple(d, at);
            if (!val.is_zero()) return std::pair<int, int>{r, dir < 0 && (r % 2) ? -val.sign() : val.sign()};
          }
          return std::pair<int, int>{0, 0};
        };
        auto [ol, sl] = side(pieces_[i], b, -1);
        auto [orr, sr] = side(pieces_[next], right_pt, +1);
        z.kind = (ol == 1 && orr == 1 && sl != sr && sl != 0) ? ZeroKind::Simple
                                                              : ZeroKind::Multiple;
        zs.push_back(z);
      } else if (left.sign() * right.sign() < 0) {
        z.kind = ZeroKind::JumpCrossing;
        zs.push_back(z);
      }
    }
    std::sort(zs.begin(), zs.end(), [](const CircleZero& a, const CircleZero& b) {
      return a.angle < b.angle;
    });
    return zs;
  }

  /// Fourier coefficients for |j| <= band by exact integration by parts per
  /// piece. Frequencies excluded by an exactly verified shift symmetry or
  /// parity are set to exact zero, so tail membership of c_k-like functions
  /// is decidable from the result.
  TrigSeries to_trig_series(int band) const {
    if (band < 1) throw std::invalid_argument("to_trig_series: band must be >= 1");
    TrigSeries out(band);
    std::vector<char> allowed(static_cast<size_t>(band) + 1, 1);
    long long L = lattice_order();
    if (L > 0) {
      for (long long t : detail::divisors(2 * L)) {
        if (t == 2 * L) continue;
        for (int sgn : {1, -1}) {
          if (!shift_identity(Rational(t, L), sgn)) continue;
          for (long long j = 0; j <= band; ++j) {
            long long rem = (j * t) % (2 * L);
            bool ok = sgn == 1 ? rem == 0 : rem == L;
            if (!ok) allowed[static_cast<size_t>(j)] = 0;
          }
        }
      }
    }
    int parity = 0;
    CirclePiecewisePoly refl = reflected();
    if (exact_equal(refl, *this)) parity = 1;
    else if (exact_equal(refl, negated())) parity = -1;

    if (allowed[0]) out.set_coeff(0, mean().to_double());
    for (int j = 1; j <= band; ++j) {
      if (!allowed[static_cast<size_t>(j)]) continue;
      std::complex<double> total{};
      std::complex<double> s(0.0, -static_cast<double>(j));
      std::complex<double> inv = 1.0 / s;
      for (size_t i = 0; i < pieces_.size(); ++i) {
        std::vector<double> du, dv;
        PiecePoly d = pieces_[i];
        Rational u = piece_start(i), v = piece_end(i);
        for (int r = 0; r <= pieces_[i].degree(); ++r) {
          du.push_back(eval_at_pi_multiple(d, u).to_double());
          dv.push_back(eval_at_pi_multiple(d, v).to_double());
          d = d.derivative();
        }
        auto boundary = [&](const Rational& q, const std::vector<double>& vals) {
          Rational rho = detail::norm_half_open(Rational(-j) * q);
          std::complex<double> e = std::polar(1.0, to_double(rho) * std::numbers::pi);
          std::complex<double> acc{};
          std::complex<double> pw = inv;
          double sign = 1.0;
          for (double val : vals) {
            acc += sign * val * pw;
            pw *= inv;
            sign = -sign;
          }
          return e * acc;
        };
        total += boundary(v, dv) - boundary(u, du);
      }
      std::complex<double> cj = total / two_pi;
      if (parity == 1) cj = {cj.real(), 0.0};
      if (parity == -1) cj = {0.0, cj.imag()};
      out.set_coeff(j, cj);
      out.set_coeff(-j, std::conj(cj));
    }
    out.tag_real();
    return out;
  }

  friend bool exact_equal(const CirclePiecewisePoly& f, const CirclePiecewisePoly& g) {
    std::vector<Rational> s;
    for (const auto& b : f.bps_) s.push_back(detail::norm_closed_left(b));
    for (const auto& b : g.bps_) s.push_back(detail::norm_closed_left(b));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (size_t j = 0; j < s.size(); ++j) {
      Rational v = j + 1 < s.size() ? s[j + 1] : Rational(1);
      Rational m = (s[j] + v) / 2;
      if (!(f.poly_at(m) == g.poly_at(m))) return false;
    }
    return true;
  }

 private:
  friend CirclePiecewisePoly combine(const CirclePiecewisePoly&, const CirclePiecewisePoly&, int);
  friend PiPoly inner_product_exact(const CirclePiecewisePoly&, const CirclePiecewisePoly&);

  void check_continuity() const {
    for (int r = 0; r <= continuity_; ++r) {
      for (size_t i = 0; i < bps_.size(); ++i) {
        size_t next = (i + 1) % pieces_.size();
        Rational right_pt = i + 1 == pieces_.size() ? Rational(-1) : bps_[i];
        PiPoly left = eval_at_pi_multiple(detail::nth_derivative(pieces_[i], r), bps_[i]);
        PiPoly right = eval_at_pi_multiple(detail::nth_derivative(pieces_[next], r), right_pt);
        if (!(left == right))
          throw std::invalid_argument("CirclePiecewisePoly: declared continuity not satisfied");
      }
    }
  }

  /// Piece i rewritten in the offset t = x - start*pi: returns the exact
  /// polynomial t -> f(start*pi + t). Expanding at the piece's own start
  /// keeps the double image of the coefficients on the scale of the local
  /// derivative norms; the monomial form in absolute x cancels
  /// catastrophically for small-norm high-order pieces near |x| = pi.
  PiecePoly local_piece(size_t i) const {
    return shift_by_pi_multiple(pieces_[i], piece_start(i));
  }

  /// lcm of breakpoint denominators: the lattice (multiples of pi/L) on
  /// which this function's structure lives. 0 when too large to exploit.
  long long lattice_order() const {
    BigInt l = 1;
    for (const auto& b : bps_) l = boost::multiprecision::lcm(l, denominator(b));
    if (l > (BigInt(1) << 20)) return 0;
    return l.convert_to<long long>();
  }

  long long snap_denominator_bound() const {
    long long L = lattice_order();
    if (L == 0) return 1024;
    return std::max<long long>(64, 8 * L);
  }

  std::vector<Rational> bps_;
  std::vector<PiecePoly> pieces_;
  std::vector<std::pair<Rational, PiPoly>> overrides_;
  int continuity_ = -1;
};

/// f + g (mode +1) or f - g (mode -1); point overrides do not survive
/// (the combination is an a.e. object).
inline CirclePiecewisePoly combine(const CirclePiecewisePoly& f, const CirclePiecewisePoly& g,
                                   int mode) {
  std::vector<Rational> s;
  for (const auto& b : f.bps_) s.push_back(b);
  for (const auto& b : g.bps_) s.push_back(b);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<PiecePoly> pieces;
  pieces.reserve(s.size());
  for (size_t j = 0; j < s.size(); ++j) {
    Rational u = j == 0 ? Rational(-1) : s[j - 1];
    Rational m = (u + s[j]) / 2;
    PiecePoly q = g.poly_at(m);
    pieces.push_back(mode > 0 ? f.poly_at(m) + q : f.poly_at(m) - q);
  }
  return CirclePiecewisePoly(std::move(s), std::move(pieces),
                             std::min(f.continuity_, g.continuity_));
}

inline CirclePiecewisePoly add(const CirclePiecewisePoly& f, const CirclePiecewisePoly& g) {
  return combine(f, g, +1);
}

inline CirclePiecewisePoly subtract(const CirclePiecewisePoly& f, const CirclePiecewisePoly& g) {
  return combine(f, g, -1);
}

/// Exact <f, g> = (1/2pi) * integral of f*g over the circle.
inline PiPoly inner_product_exact(const CirclePiecewisePoly& f, const CirclePiecewisePoly& g) {
  std::vector<Rational> s;
  for (const auto& b : f.bps_) s.push_back(detail::norm_closed_left(b));
  for (const auto& b : g.bps_) s.push_back(detail::norm_closed_left(b));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  PiPoly total;
  for (size_t j = 0; j < s.size(); ++j) {
    Rational v = j + 1 < s.size() ? s[j + 1] : Rational(1);
    Rational m = (s[j] + v) / 2;
    PiecePoly prod = f.poly_at(m) * g.poly_at(m);
    PiecePoly a = prod.antiderivative();
    total += eval_at_pi_multiple(a, v) - eval_at_pi_multiple(a, s[j]);
  }
  return total.shifted_pi(-1) / Rational(2);
}

}  // namespace revbern
