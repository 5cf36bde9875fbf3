#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "constants.hpp"
#include "interpolation.hpp"
#include "piecewise.hpp"
#include "trig_series.hpp"
#include "verify.hpp"
#include "version.hpp"

namespace revbern {

using Json = nlohmann::json;

// Rationals travel as [num, den, pi_power] with num/den as decimal strings;
// the integer parts can exceed 64 bits at higher antiderivative orders.
inline Json rational_entry(const Rational& q, int pi_power) {
  return Json::array({numerator(q).str(), denominator(q).str(), pi_power});
}

inline Rational rational_from_entry(const Json& e) {
  return Rational(BigInt(e.at(0).get<std::string>()), BigInt(e.at(1).get<std::string>()));
}

inline Json to_json(const PiPoly& v) {
  Json terms = Json::array();
  const std::vector<Rational>& c = v.coeffs();
  for (std::size_t p = 0; p < c.size(); ++p)
    if (c[p] != 0) terms.push_back(rational_entry(c[p], static_cast<int>(p)));
  return terms;
}

inline PiPoly pi_poly_from_json(const Json& terms) {
  PiPoly v;
  for (const Json& e : terms) v += PiPoly::pi_term(rational_from_entry(e), e.at(2).get<int>());
  return v;
}

inline Json to_json(const TrigSeries& f) {
  Json coeffs = Json::array();
  for (int j = -f.band(); j <= f.band(); ++j) {
    const std::complex<double> c = f.coeff(j);
    if (c == std::complex<double>{}) continue;
    coeffs.push_back(Json::array({j, c.real(), c.imag()}));
  }
  return Json{{"band", f.band()}, {"coeffs", coeffs}};
}

inline TrigSeries trig_series_from_json(const Json& j) {
  TrigSeries f(j.at("band").get<int>());
  for (const Json& e : j.at("coeffs"))
    f.set_coeff(e.at(0).get<int>(),
                std::complex<double>(e.at(1).get<double>(), e.at(2).get<double>()));
  try {
    f.tag_real();  // restore the tag when the data is conjugate-symmetric
  } catch (const std::invalid_argument&) {
  }
  return f;
}

inline Json to_json(const CirclePiecewisePoly& f) {
  Json bps = Json::array();
  for (const Rational& q : f.breakpoints()) bps.push_back(rational_entry(q, 1));
  Json pieces = Json::array();
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    Json piece = Json::array();
    const PiecePoly& p = f.piece(i);
    for (int d = 0; d <= p.degree(); ++d) {
      const PiPoly coeff = p.coeff(d);
      const std::vector<Rational>& c = coeff.coeffs();
      for (std::size_t pw = 0; pw < c.size(); ++pw)
        if (c[pw] != 0)
          piece.push_back(Json::array(
              {d, numerator(c[pw]).str(), denominator(c[pw]).str(), static_cast<int>(pw)}));
    }
    pieces.push_back(piece);
  }
  Json j{{"breakpoints", bps}, {"pieces", pieces}, {"continuity", f.continuity()}};
  if (!f.overrides().empty()) {
    Json ovr = Json::array();
    for (const auto& [q, v] : f.overrides())
      ovr.push_back(Json{{"angle", rational_entry(q, 1)}, {"value", to_json(v)}});
    j["overrides"] = ovr;
  }
  return j;
}

inline CirclePiecewisePoly piecewise_from_json(const Json& j) {
  std::vector<Rational> bps;
  for (const Json& e : j.at("breakpoints")) bps.push_back(rational_from_entry(e));
  std::vector<PiecePoly> pieces;
  for (const Json& jp : j.at("pieces")) {
    int deg = -1;
    for (const Json& t : jp) deg = std::max(deg, t.at(0).get<int>());
    std::vector<PiPoly> c(static_cast<std::size_t>(deg + 1));
    for (const Json& t : jp) {
      const Rational q(BigInt(t.at(1).get<std::string>()), BigInt(t.at(2).get<std::string>()));
      c[static_cast<std::size_t>(t.at(0).get<int>())] += PiPoly::pi_term(q, t.at(3).get<int>());
    }
    pieces.emplace_back(std::move(c));
  }
  CirclePiecewisePoly f(std::move(bps), std::move(pieces), j.at("continuity").get<int>());
  if (j.contains("overrides"))
    for (const Json& o : j.at("overrides"))
      f = f.with_override(rational_from_entry(o.at("angle")), pi_poly_from_json(o.at("value")));
  return f;
}

inline Json to_json(const PiScaled& s) {
  return Json{{"coeff", Json::array({numerator(s.coeff).str(), denominator(s.coeff).str()})},
              {"pi_power", s.pi_power},
              {"value", s.to_double()}};
}

inline Json to_json(const ConstantsRecord& r) {
  return Json{{"k", r.k},
              {"m", r.m},
              {"B", Json::array({numerator(r.B).str(), denominator(r.B).str()})},
              {"euler_number", r.euler.str()},
              {"C", to_json(r.C)},
              {"D", to_json(r.D)},
              {"C_value", r.C_value},
              {"D_value", r.D_value}};
}

inline Json to_json(const TrialRecord& t) {
  return Json{{"seed", t.seed},     {"band", t.band},     {"f_norm", t.f_norm},
              {"fm_norm", t.fm_norm}, {"bound", t.bound}, {"margin", t.margin},
              {"pass", t.pass}};
}

inline Json to_json(const VerificationReport& r) {
  Json records = Json::array();
  for (const TrialRecord& t : r.records) records.push_back(to_json(t));
  Json j{{"k", r.k},       {"m", r.m},
         {"trials", r.trials}, {"band", r.band},
         {"seed", r.seed},  {"tol", r.tol},
         {"forward", r.forward}, {"records", records},
         {"all_pass", r.all_pass}};
  if (!std::isnan(r.min_margin)) j["min_margin"] = r.min_margin;
  if (!std::isnan(r.saturation_gap)) j["saturation_gap"] = r.saturation_gap;
  return j;
}

inline Json to_json(const ZeroStructureReport& r) {
  return Json{{"k", r.k},
              {"m", r.m},
              {"zeros", r.zeros},
              {"zero_count", r.zero_count},
              {"max_residual_at_zeros", r.max_residual_at_zeros},
              {"residual_vanishes", r.residual_vanishes},
              {"all_simple", r.all_simple},
              {"alternating", r.alternating},
              {"no_extra_zeros", r.no_extra_zeros},
              {"sign_matches_wave", r.sign_matches_wave},
              {"pass", r.pass}};
}

inline Json to_json(const ConditionReport& r) {
  return Json{{"k", r.k},
              {"parity", r.parity},
              {"min_pivot", r.min_pivot},
              {"max_pivot", r.max_pivot},
              {"nonsingular", r.nonsingular}};
}

// Common wrapper for every CLI result: the subcommand, its effective
// parameters, the payload, and the library version.
struct OutputEnvelope {
  std::string command;
  Json parameters;
  Json results;
  std::string version = version_string;
};

inline Json to_json(const OutputEnvelope& e) {
  return Json{{"command", e.command},
              {"parameters", e.parameters},
              {"results", e.results},
              {"version", e.version}};
}

inline OutputEnvelope envelope_from_json(const Json& j) {
  OutputEnvelope e;
  e.command = j.at("command").get<std::string>();
  e.parameters = j.at("parameters");
  e.results = j.at("results");
  e.version = j.at("version").get<std::string>();
  return e;
}

// Adapters in the signature nlohmann looks up, so Json(x) works directly.
inline void to_json(Json& j, const PiPoly& v) { j = to_json(v); }
inline void to_json(Json& j, const TrigSeries& f) { j = to_json(f); }
inline void to_json(Json& j, const CirclePiecewisePoly& f) { j = to_json(f); }
inline void to_json(Json& j, const PiScaled& s) { j = to_json(s); }
inline void to_json(Json& j, const ConstantsRecord& r) { j = to_json(r); }
inline void to_json(Json& j, const TrialRecord& t) { j = to_json(t); }
inline void to_json(Json& j, const VerificationReport& r) { j = to_json(r); }
inline void to_json(Json& j, const ZeroStructureReport& r) { j = to_json(r); }
inline void to_json(Json& j, const ConditionReport& r) { j = to_json(r); }
inline void to_json(Json& j, const OutputEnvelope& e) { j = to_json(e); }

}  // namespace revbern
