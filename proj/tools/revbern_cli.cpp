#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include <revbern/revbern.hpp>

namespace {

using namespace revbern;

constexpr int max_k = 64;
constexpr int max_m = 30;
constexpr int max_band = 1024;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string rat_str(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

std::string dump_envelope(const OutputEnvelope& env) { return to_json(env).dump(2) + "\n"; }

int default_band(int k) { return std::min(std::max(4 * k, 16), max_band); }

struct ConstantsArgs {
  int k = 1, k_max = 0, m = 1, m_max = 0;
  std::string format = "csv", output;
};

int run_constants(const ConstantsArgs& a) {
  const int k_hi = a.k_max > 0 ? a.k_max : a.k;
  const int m_hi = a.m_max > 0 ? a.m_max : a.m;
  if (k_hi < a.k || m_hi < a.m) {
    std::cerr << "error: --k-max/--m-max must not be below --k/--m\n";
    return 2;
  }
  if (a.format == "csv") {
    std::ostringstream out;
    out << "k,m,B,euler,C,D\n";
    for (int k = a.k; k <= k_hi; ++k)
      for (int m = a.m; m <= m_hi; ++m) {
        const ConstantsRecord r = constants_record(k, m);
        out << k << ',' << m << ',' << rat_str(r.B) << ',' << r.euler.str() << ','
            << fmt(r.C_value) << ',' << fmt(r.D_value) << '\n';
      }
    return emit(out.str(), a.output);
  }
  Json records = Json::array();
  for (int k = a.k; k <= k_hi; ++k)
    for (int m = a.m; m <= m_hi; ++m) records.push_back(to_json(constants_record(k, m)));
  OutputEnvelope env;
  env.command = "constants";
  env.parameters = Json{{"k", a.k}, {"k_max", k_hi}, {"m", a.m}, {"m_max", m_hi}};
  env.results = Json{{"records", records}};
  return emit(dump_envelope(env), a.output);
}

struct ExtremalArgs {
  int k = 1, m = 1, band = 0;
  std::string format = "json", output;
};

int run_extremal(const ExtremalArgs& a) {
  const CirclePiecewisePoly f = make_extremal(a.k, a.m);
  const ExactReal sup = f.sup_norm_info();
  const ConstantsRecord rec = constants_record(a.k, a.m);
  if (a.format == "csv") {
    std::ostringstream out;
    out << "kind,a,b,c\n";
    for (const Rational& q : f.breakpoints())
      out << "breakpoint," << rat_str(q) << ',' << fmt(to_double(q) * pi_double) << ",\n";
    out << "metric,sup_norm," << fmt(sup.value) << ",\n";
    out << "metric,D," << fmt(rec.D_value) << ",\n";
    if (a.band > 0) {
      const TrigSeries s = f.to_trig_series(a.band);
      for (int j = -s.band(); j <= s.band(); ++j)
        if (s.coeff(j) != std::complex<double>{})
          out << "coeff," << j << ',' << fmt(s.coeff(j).real()) << ',' << fmt(s.coeff(j).imag())
              << '\n';
    }
    return emit(out.str(), a.output);
  }
  OutputEnvelope env;
  env.command = "extremal";
  env.parameters = Json{{"k", a.k}, {"m", a.m}, {"band", a.band}};
  env.results = Json{{"function", to_json(f)},
                     {"sup_norm", sup.value},
                     {"sup_norm_exact", sup.exact ? Json(sup.exact->str()) : Json(nullptr)},
                     {"D", to_json(rec.D)}};
  if (a.band > 0) env.results["series"] = to_json(f.to_trig_series(a.band));
  return emit(dump_envelope(env), a.output);
}

struct InterpolateArgs {
  int k = 1, m = 1;
  std::string format = "json", output;
};

int run_interpolate(const InterpolateArgs& a) {
  const TrigSeries p = interpolate_J(a.k, a.m);
  const ZeroStructureReport zs = verify_zero_structure(a.k, a.m);
  const double l1 = residual_l1(a.k, a.m);
  const ConstantsRecord rec = constants_record(a.k, a.m);
  const double disc = std::abs(l1 - rec.D_value);
  if (a.format == "csv") {
    std::ostringstream out;
    out << "kind,a,b,c\n";
    for (int j = -p.band(); j <= p.band(); ++j)
      if (p.coeff(j) != std::complex<double>{})
        out << "coeff," << j << ',' << fmt(p.coeff(j).real()) << ',' << fmt(p.coeff(j).imag())
            << '\n';
    for (double z : zs.zeros) out << "zero," << fmt(z) << ",,\n";
    out << "metric,residual_l1," << fmt(l1) << ",\n";
    out << "metric,D," << fmt(rec.D_value) << ",\n";
    out << "metric,discrepancy," << fmt(disc) << ",\n";
    out << "metric,zero_structure_pass," << (zs.pass ? 1 : 0) << ",\n";
    return emit(out.str(), a.output);
  }
  OutputEnvelope env;
  env.command = "interpolate";
  env.parameters = Json{{"k", a.k}, {"m", a.m}};
  env.results = Json{{"interpolant", to_json(p)},
                     {"zero_structure", to_json(zs)},
                     {"residual_l1", l1},
                     {"D", to_json(rec.D)},
                     {"discrepancy", disc}};
  return emit(dump_envelope(env), a.output);
}

struct VerifyArgs {
  int k = 1, m = 1, trials = 100, band = 0;
  std::uint64_t seed = 12345;
  double tol = 1e-6;
  bool forward = false;
  std::string format = "json", output;
};

std::string verify_csv(const VerificationReport& rep) {
  std::ostringstream out;
  out << "# k=" << rep.k << " m=" << rep.m << " trials=" << rep.trials << " band=" << rep.band
      << " seed=" << rep.seed << " tol=" << fmt(rep.tol)
      << " min_margin=" << (std::isnan(rep.min_margin) ? std::string() : fmt(rep.min_margin))
      << " saturation_gap="
      << (std::isnan(rep.saturation_gap) ? std::string() : fmt(rep.saturation_gap))
      << " all_pass=" << (rep.all_pass ? 1 : 0) << '\n';
  out << "trial,seed,band,f_norm,fm_norm,bound,margin,pass\n";
  for (std::size_t i = 0; i < rep.records.size(); ++i) {
    const TrialRecord& t = rep.records[i];
    out << i << ',' << t.seed << ',' << t.band << ',' << fmt(t.f_norm) << ',' << fmt(t.fm_norm)
        << ',' << fmt(t.bound) << ',' << fmt(t.margin) << ',' << (t.pass ? 1 : 0) << '\n';
  }
  return out.str();
}

int run_verify(const VerifyArgs& a) {
  const int band = a.band > 0 ? a.band : default_band(a.k);
  if (!a.forward && band < a.k) {
    std::cerr << "error: --band must be at least --k\n";
    return 2;
  }
  const VerificationReport rep = a.forward
                                     ? run_forward_suite(a.k, a.trials, a.seed, a.tol)
                                     : run_reverse_suite(a.k, a.m, a.trials, band, a.seed, a.tol);
  int rc;
  if (a.format == "csv") {
    rc = emit(verify_csv(rep), a.output);
  } else {
    OutputEnvelope env;
    env.command = "verify";
    env.parameters = Json{{"k", a.k},       {"m", a.m},     {"trials", a.trials},
                          {"band", band},   {"seed", a.seed}, {"tol", a.tol},
                          {"forward", a.forward}};
    env.results = to_json(rep);
    rc = emit(dump_envelope(env), a.output);
  }
  if (rc != 0) return rc;
  return rep.all_pass ? 0 : 1;
}

struct SweepArgs {
  int k_max = 4, m_max = 3, trials = 100, band = 0;
  std::uint64_t seed = 12345;
  double tol = 1e-6;
  std::string format = "csv", output;
};

int run_sweep(const SweepArgs& a) {
  if (a.band > 0 && a.band < a.k_max) {
    std::cerr << "error: --band must be at least --k-max\n";
    return 2;
  }
  bool all_pass = true;
  std::ostringstream csv;
  csv << "k,m,min_margin,saturation_gap\n";
  Json cells = Json::array();
  std::uint64_t seed = a.seed;
  for (int k = 1; k <= a.k_max; ++k)
    for (int m = 1; m <= a.m_max; ++m) {
      const int band = a.band > 0 ? a.band : default_band(k);
      const VerificationReport rep = run_reverse_suite(k, m, a.trials, band, seed, a.tol);
      seed += static_cast<std::uint64_t>(a.trials);
      all_pass = all_pass && rep.all_pass;
      csv << k << ',' << m << ','
          << (std::isnan(rep.min_margin) ? std::string() : fmt(rep.min_margin)) << ','
          << fmt(rep.saturation_gap) << '\n';
      cells.push_back(Json{{"k", k},
                           {"m", m},
                           {"band", band},
                           {"min_margin", std::isnan(rep.min_margin) ? Json(nullptr)
                                                                     : Json(rep.min_margin)},
                           {"saturation_gap", rep.saturation_gap},
                           {"all_pass", rep.all_pass}});
    }
  int rc;
  if (a.format == "csv") {
    rc = emit(csv.str(), a.output);
  } else {
    OutputEnvelope env;
    env.command = "sweep";
    env.parameters = Json{{"k_max", a.k_max}, {"m_max", a.m_max}, {"trials", a.trials},
                          {"band", a.band},   {"seed", a.seed},   {"tol", a.tol}};
    env.results = Json{{"cells", cells}, {"all_pass", all_pass}};
    rc = emit(dump_envelope(env), a.output);
  }
  if (rc != 0) return rc;
  return all_pass ? 0 : 1;
}

void add_format_options(CLI::App* cmd, std::string& format, std::string& output) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", output, "write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sharp reverse Bernstein constants, extremal functions, and verification"};
  app.require_subcommand(1);

  ConstantsArgs ca;
  CLI::App* constants = app.add_subcommand("constants", "tabulate B_m, Euler numbers, C and D");
  constants->add_option("--k", ca.k)->check(CLI::Range(1, max_k));
  constants->add_option("--k-max", ca.k_max)->check(CLI::Range(1, max_k));
  constants->add_option("--m", ca.m)->check(CLI::Range(1, max_m));
  constants->add_option("--m-max", ca.m_max)->check(CLI::Range(1, max_m));
  add_format_options(constants, ca.format, ca.output);

  ExtremalArgs ea;
  CLI::App* extremal = app.add_subcommand("extremal", "emit the extremal piecewise function");
  extremal->add_option("--k", ea.k)->required()->check(CLI::Range(1, max_k));
  extremal->add_option("--m", ea.m)->required()->check(CLI::Range(1, max_m));
  extremal->add_option("--band", ea.band, "also emit series coefficients up to this band")
      ->check(CLI::Range(1, max_band));
  ea.format = "json";
  add_format_options(extremal, ea.format, ea.output);

  InterpolateArgs ia;
  CLI::App* interpolate = app.add_subcommand("interpolate", "best L1 kernel interpolant");
  interpolate->add_option("--k", ia.k)->required()->check(CLI::Range(1, max_k));
  interpolate->add_option("--m", ia.m)->required()->check(CLI::Range(1, max_m));
  add_format_options(interpolate, ia.format, ia.output);

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "randomized inequality checks");
  verify->add_option("--k", va.k)->required()->check(CLI::Range(1, max_k));
  verify->add_option("--m", va.m)->check(CLI::Range(1, max_m));
  verify->add_option("--trials", va.trials)->check(CLI::Range(0, 1000000));
  verify->add_option("--band", va.band)->check(CLI::Range(1, max_band));
  verify->add_option("--seed", va.seed);
  verify->add_option("--tol", va.tol)->check(CLI::PositiveNumber);
  verify->add_flag("--forward", va.forward, "check the forward inequality instead");
  add_format_options(verify, va.format, va.output);

  SweepArgs sa;
  CLI::App* sweep = app.add_subcommand("sweep", "grid of verification cells");
  sweep->add_option("--k-max", sa.k_max)->check(CLI::Range(1, max_k));
  sweep->add_option("--m-max", sa.m_max)->check(CLI::Range(1, max_m));
  sweep->add_option("--trials", sa.trials)->check(CLI::Range(0, 1000000));
  sweep->add_option("--band", sa.band)->check(CLI::Range(1, max_band));
  sweep->add_option("--seed", sa.seed);
  sweep->add_option("--tol", sa.tol)->check(CLI::PositiveNumber);
  add_format_options(sweep, sa.format, sa.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*constants) return run_constants(ca);
    if (*extremal) return run_extremal(ea);
    if (*interpolate) return run_interpolate(ia);
    if (*verify) return run_verify(va);
    if (*sweep) return run_sweep(sa);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
