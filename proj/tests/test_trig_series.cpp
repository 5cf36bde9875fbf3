#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <revbern/trig_series.hpp>

using namespace revbern;
using Complex = std::complex<double>;

namespace {

// Fourier expansion of the unit-slope triangular wave with peak pi/2 at 0:
// coefficients 2/(pi j^2) on odd frequencies.
TrigSeries triangle_series(int band) {
  TrigSeries f(band);
  for (int j = 1; j <= band; j += 2) {
    const double c = 2.0 / (std::numbers::pi * j * j);
    f.set_coeff(j, c);
    f.set_coeff(-j, c);
  }
  f.tag_real();
  return f;
}

TrigSeries random_series(int band, unsigned seed, bool zero_mean) {
  std::mt19937_64 rng(seed);
  auto u = [&] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53 - 0.5; };
  TrigSeries f(band);
  for (int j = -band; j <= band; ++j) f.set_coeff(j, Complex(u(), u()));
  if (zero_mean) f.set_coeff(0, Complex{});
  return f;
}

}  // namespace

TEST_CASE("evaluation of small series", "[series]") {
  TrigSeries one(0);
  one.set_coeff(0, 1.0);
  CHECK(one.evaluate(1.3).real() == Catch::Approx(1.0).epsilon(1e-15));
  CHECK(one.evaluate(1.3).imag() == Catch::Approx(0.0).margin(1e-15));

  TrigSeries cos2(1);
  cos2.set_coeff(1, 1.0);
  cos2.set_coeff(-1, 1.0);
  cos2.tag_real();
  CHECK(cos2.evaluate_real(0.0) == Catch::Approx(2.0).epsilon(1e-15));
  CHECK(cos2.evaluate_real(1.0) == Catch::Approx(2.0 * std::cos(1.0)).epsilon(1e-14));
}

TEST_CASE("differentiation in frequency space", "[series]") {
  TrigSeries e1(1);
  e1.set_coeff(1, 1.0);
  CHECK(e1.derivative().coeff(1) == Complex(0.0, 1.0));

  TrigSeries c(0);
  c.set_coeff(0, 5.0);
  CHECK(c.derivative().is_zero());

  TrigSeries f(2);
  f.set_coeff(2, 1.0);
  f.set_coeff(-2, 1.0);
  const TrigSeries d = f.derivative();
  CHECK(d.coeff(2) == Complex(0.0, 2.0));
  CHECK(d.coeff(-2) == Complex(0.0, -2.0));

  // second derivative via repeated application
  CHECK(f.derivative(2).coeff(2) == Complex(-4.0, 0.0));
}

TEST_CASE("antiderivative needs zero mean and inverts differentiation", "[series]") {
  TrigSeries e1(1);
  e1.set_coeff(1, 1.0);
  CHECK(e1.antiderivative().coeff(1) == Complex(0.0, -1.0));

  TrigSeries dc(0);
  dc.set_coeff(0, 1.0);
  CHECK_THROWS_AS(dc.antiderivative(), std::domain_error);

  const TrigSeries f = random_series(6, 99, true);
  const TrigSeries back = f.antiderivative().derivative();
  for (int j = -6; j <= 6; ++j)
    CHECK(std::abs(back.coeff(j) - f.coeff(j)) <= 1e-15 * std::abs(f.coeff(j)));
}

TEST_CASE("inner product is the coefficient pairing", "[series]") {
  TrigSeries a(3), b(3);
  a.set_coeff(2, Complex(1.0, -2.0));
  b.set_coeff(2, Complex(0.5, 0.25));
  b.set_coeff(1, Complex(7.0, 0.0));  // orthogonal to a
  const Complex ip = inner_product(a, b);
  CHECK(ip == Complex(1.0, -2.0) * std::conj(Complex(0.5, 0.25)));

  // <I a, b> + <a, I b> = 0; each side rounds independently, so the sum
  // lands within a few ulp of zero rather than on it
  for (unsigned s = 0; s < 100; ++s) {
    const TrigSeries f = random_series(8, 1000 + s, true);
    const TrigSeries g = random_series(8, 2000 + s, true);
    const Complex sum = inner_product(f.antiderivative(), g) + inner_product(f, g.antiderivative());
    CHECK(std::abs(sum) <= 1e-14);
  }
}

TEST_CASE("tail projection and membership", "[series]") {
  TrigSeries f(5);
  f.set_coeff(0, 1.0);
  f.set_coeff(3, 2.0);
  f.set_coeff(5, 1.0);
  CHECK(f.tail_index() == 0);
  CHECK(f.in_tail(0));
  CHECK_FALSE(f.in_tail(1));

  const TrigSeries p = f.project_tail(4);
  CHECK(p.coeff(0) == Complex{});
  CHECK(p.coeff(3) == Complex{});
  CHECK(p.coeff(5) == Complex(1.0, 0.0));
  CHECK(p.tail_index() == 5);
  CHECK(p.in_tail(5));

  CHECK(TrigSeries(4).tail_index() == 5);
}

TEST_CASE("sup norm estimates on known functions", "[series][norms]") {
  TrigSeries cos2(1);
  cos2.set_coeff(1, 1.0);
  cos2.set_coeff(-1, 1.0);
  cos2.tag_real();
  CHECK(cos2.sup_norm_estimate(1e-10) == Catch::Approx(2.0).epsilon(1e-10));

  TrigSeries c(0);
  c.set_coeff(0, 3.0);
  CHECK(c.sup_norm_estimate() == Catch::Approx(3.0).epsilon(1e-15));

  TrigSeries wave(4);
  wave.set_coeff(4, 1.0);
  CHECK(wave.sup_norm_estimate() == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mean absolute value estimates", "[series][norms]") {
  TrigSeries cos2(1);
  cos2.set_coeff(1, 1.0);
  cos2.set_coeff(-1, 1.0);
  cos2.tag_real();
  // (1/2pi) int |2 cos| = 4/pi
  CHECK(cos2.l1_norm_estimate(1e-11) == Catch::Approx(4.0 / std::numbers::pi).epsilon(1e-9));

  TrigSeries f = random_series(3, 7, false);
  CHECK_THROWS_AS(f.l1_norm_estimate(), std::domain_error);
}

TEST_CASE("hard truncation of the triangular wave", "[series][truncation]") {
  const double peak = std::numbers::pi / 2;

  // error at the peak after truncating to band 9
  const TrigSeries f9 = triangle_series(9);
  CHECK(peak - f9.evaluate_real(0.0) == Catch::Approx(0.06345265251426717).epsilon(1e-10));

  // sup norm of the band-101 truncation: attained at 0, still visibly short
  const TrigSeries f101 = triangle_series(101);
  const double sup = f101.sup_norm_estimate(1e-10);
  CHECK(sup == Catch::Approx(peak - 0.006241170377212934).epsilon(1e-10));
  CHECK(sup < peak);
}

TEST_CASE("products convolve coefficients and stay real", "[series]") {
  TrigSeries cosx(1);
  cosx.set_coeff(1, 0.5);
  cosx.set_coeff(-1, 0.5);
  cosx.tag_real();
  const TrigSeries sq = multiply(cosx, cosx);  // cos^2 = 1/2 + cos(2x)/2
  CHECK(sq.is_real());
  CHECK(sq.coeff(0) == Complex(0.5, 0.0));
  CHECK(sq.coeff(2) == Complex(0.25, 0.0));
  CHECK(sq.coeff(-2) == Complex(0.25, 0.0));
  CHECK(sq.coeff(1) == Complex{});
}

TEST_CASE("real tag demands conjugate symmetry", "[series]") {
  TrigSeries f(1);
  f.set_coeff(1, Complex(1.0, 1.0));
  CHECK_THROWS_AS(f.tag_real(), std::invalid_argument);
  f.set_coeff(-1, Complex(1.0, -1.0));
  CHECK_NOTHROW(f.tag_real());
  CHECK(f.is_real());
}

TEST_CASE("angle normalization lands in the principal window", "[series]") {
  CHECK(normalize_angle(3 * std::numbers::pi) == Catch::Approx(std::numbers::pi).epsilon(1e-15));
  CHECK(normalize_angle(-std::numbers::pi) == Catch::Approx(std::numbers::pi).epsilon(1e-15));
  CHECK(normalize_angle(0.25) == Catch::Approx(0.25).epsilon(1e-15));
  CHECK(normalize_angle(two_pi + 0.25) == Catch::Approx(0.25).epsilon(1e-12));
}
