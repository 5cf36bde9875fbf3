#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include <revbern/revbern.hpp>

using namespace revbern;

TEST_CASE("trig series survives a json round trip") {
  TrigSeries f = random_tail_sample(2, 12, 777);
  const Json j = f;
  const TrigSeries g = trig_series_from_json(j);

  REQUIRE(g.band() == f.band());
  REQUIRE(g.is_real());
  for (int n = -12; n <= 12; ++n) REQUIRE(g.coeff(n) == f.coeff(n));
}

TEST_CASE("trig series json stores only nonzero coefficients") {
  TrigSeries f(6);
  f.set_coeff(3, {0.0, -0.5});
  f.set_coeff(-3, {0.0, 0.5});
  f.tag_real();

  const Json j = f;
  REQUIRE(j.at("band").get<int>() == 6);
  REQUIRE(j.at("coeffs").size() == 2);
  REQUIRE(j.at("coeffs")[0][0].get<int>() == -3);
  REQUIRE(j.at("coeffs")[1][0].get<int>() == 3);
}

TEST_CASE("complex-valued series round trips without a real tag") {
  TrigSeries f(2);
  f.set_coeff(2, {1.0, 0.0});

  const TrigSeries g = trig_series_from_json(Json(f));
  REQUIRE_FALSE(g.is_real());
  REQUIRE(g.coeff(2) == std::complex<double>{1.0, 0.0});
}

TEST_CASE("piecewise functions survive a json round trip") {
  for (const CirclePiecewisePoly& f :
       {make_c(3), make_J(2), make_extremal(2, 3)}) {
    const CirclePiecewisePoly g = piecewise_from_json(Json(f));
    REQUIRE(exact_equal(g, f));
    REQUIRE(g.continuity() == f.continuity());
    REQUIRE(g.overrides().empty());
  }
}

TEST_CASE("the sawtooth override survives a round trip") {
  const CirclePiecewisePoly f = make_J(1);
  const CirclePiecewisePoly g = piecewise_from_json(Json(f));

  REQUIRE(exact_equal(g, f));
  REQUIRE(g.overrides().size() == 1);
  REQUIRE(g.overrides().front().first == Rational(1));
  REQUIRE(g.evaluate_at(Rational(1)).is_zero());
  REQUIRE(g.continuity() == -1);
}

TEST_CASE("pi polynomials round trip with big integers") {
  const PiPoly big = PiPoly::pi_term(Rational(BigInt("4087072509293123892361"),
                                              BigInt("121645100408832000")),
                                     7) +
                     PiPoly(Rational(-3, 5));
  const PiPoly back = pi_poly_from_json(Json(big));
  REQUIRE((back - big).is_zero());
}

TEST_CASE("scaled constants serialize coefficient and power") {
  const Json j = constants_record(2, 2).C;
  REQUIRE(j.at("pi_power").get<int>() == -2);
  REQUIRE(j.at("value").get<double>() == Catch::Approx(32.0 / (pi_double * pi_double)).epsilon(1e-15));
}

TEST_CASE("constants records carry both directions of the constant") {
  const Json j = constants_record(1, 2);
  REQUIRE(j.at("k").get<int>() == 1);
  REQUIRE(j.at("m").get<int>() == 2);
  REQUIRE(j.at("C").at("value").get<double>() * j.at("D").at("value").get<double>() ==
          Catch::Approx(1.0).epsilon(1e-14));
  REQUIRE(j.at("B").is_array());
}

TEST_CASE("verification reports serialize trial records and omit absent stats") {
  VerificationReport rep = run_reverse_suite(2, 1, 3, 16, 99, 1e-6, false);
  const Json j = rep;
  REQUIRE(j.at("records").size() == 3);
  REQUIRE(j.at("records")[0].at("seed").get<std::uint64_t>() == 99);
  REQUIRE(j.contains("min_margin"));
  REQUIRE_FALSE(j.contains("saturation_gap"));

  VerificationReport only_sat = run_reverse_suite(2, 1, 0, 16, 99, 1e-6, true);
  const Json js = only_sat;
  REQUIRE_FALSE(js.contains("min_margin"));
  REQUIRE(js.at("saturation_gap").get<double>() <= 1e-12);
}

TEST_CASE("zero structure reports expose the flags the gate needs") {
  const Json j = verify_zero_structure(2, 1);
  REQUIRE(j.at("zero_count").get<int>() == 4);
  REQUIRE(j.at("all_simple").get<bool>());
  REQUIRE(j.at("alternating").get<bool>());
  REQUIRE(j.at("pass").get<bool>());
  REQUIRE(j.at("zeros").size() == 4);
}

TEST_CASE("output envelopes round trip") {
  OutputEnvelope env;
  env.command = "constants";
  env.parameters = {{"k", 1}, {"m", 2}};
  env.results = {{"C", 0.25}};

  const OutputEnvelope back = envelope_from_json(Json(env));
  REQUIRE(back.command == "constants");
  REQUIRE(back.parameters.at("m").get<int>() == 2);
  REQUIRE(back.results.at("C").get<double>() == 0.25);
  REQUIRE(back.version == version_string);
}

TEST_CASE("doubles survive json text round trips bit for bit") {
  const double values[] = {0.8105694691387022, 1.1790611336512773, 0x1.0p-1074,
                           -0.16149102437656154};
  for (const double v : values) {
    std::ostringstream os;
    os << Json(v);
    const double back = Json::parse(os.str()).get<double>();
    REQUIRE(back == v);
  }
}
