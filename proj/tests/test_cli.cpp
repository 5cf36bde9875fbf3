#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <revbern/revbern.hpp>

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(REVBERN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  REQUIRE(status != -1);
  return {WEXITSTATUS(status), out};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) fields.push_back(f);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

}  // namespace

TEST_CASE("constants csv carries the closed-form values") {
  const CliResult r = run_cli("constants --k 1 --m 1 --m-max 2 --format csv");
  REQUIRE(r.code == 0);

  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  REQUIRE(lines[0] == "k,m,B,euler,C,D");

  const auto row1 = fields_of(lines[1]);
  REQUIRE(row1[0] == "1");
  REQUIRE(row1[1] == "1");
  REQUIRE(row1[2] == "1/1");
  REQUIRE(std::stod(row1[4]) == Catch::Approx(2.0 / revbern::pi_double).epsilon(1e-12));

  const auto row2 = fields_of(lines[2]);
  REQUIRE(std::stod(row2[4]) ==
          Catch::Approx(8.0 / (revbern::pi_double * revbern::pi_double)).epsilon(1e-12));
}

TEST_CASE("constants json wraps records in an envelope") {
  const CliResult r = run_cli("constants --k 2 --m 2 --format json");
  REQUIRE(r.code == 0);

  const revbern::Json j = revbern::Json::parse(r.out);
  REQUIRE(j.at("command") == "constants");
  REQUIRE(j.at("version") == revbern::version_string);
  const revbern::Json& rec = j.at("results").at("records").at(0);
  REQUIRE(rec.at("k") == 2);
  REQUIRE(rec.at("C").at("value").get<double>() ==
          Catch::Approx(32.0 / (revbern::pi_double * revbern::pi_double)).epsilon(1e-12));
  REQUIRE(rec.at("C").at("pi_power") == -2);
}

TEST_CASE("usage errors exit with code 2") {
  REQUIRE(run_cli("constants --m 0").code == 2);
  REQUIRE(run_cli("constants --k 65").code == 2);
  REQUIRE(run_cli("").code == 2);
  REQUIRE(run_cli("frobnicate").code == 2);
  REQUIRE(run_cli("extremal --m 2").code == 2);
  REQUIRE(run_cli("verify --k 8 --band 4").code == 2);
}

TEST_CASE("help exits cleanly") {
  REQUIRE(run_cli("--help").code == 0);
}

TEST_CASE("verify reports a passing cell") {
  const CliResult r = run_cli("verify --k 2 --m 2 --trials 10 --seed 31 --format json");
  REQUIRE(r.code == 0);

  const revbern::Json j = revbern::Json::parse(r.out);
  const revbern::Json& res = j.at("results");
  REQUIRE(res.at("all_pass").get<bool>());
  REQUIRE(res.at("records").size() == 10);
  REQUIRE(res.at("min_margin").get<double>() > 0.0);
  REQUIRE(res.at("saturation_gap").get<double>() <= 1e-12);
  REQUIRE(res.at("records").at(0).at("seed").get<std::uint64_t>() == 31);
}

TEST_CASE("verify csv repeats byte for byte under a fixed seed") {
  const std::string cmd = "verify --k 2 --m 1 --trials 20 --seed 777 --format csv";
  const CliResult a = run_cli(cmd);
  const CliResult b = run_cli(cmd);
  REQUIRE(a.code == 0);
  REQUIRE(a.out == b.out);

  const auto lines = lines_of(a.out);
  REQUIRE(lines.size() == 22);
  REQUIRE(lines[0].substr(0, 1) == "#");
  REQUIRE(lines[1] == "trial,seed,band,f_norm,fm_norm,bound,margin,pass");
  REQUIRE(fields_of(lines[2])[1] == "777");
}

TEST_CASE("forward verification runs through the cli") {
  const CliResult r = run_cli("verify --k 3 --trials 10 --forward --format json");
  REQUIRE(r.code == 0);
  const revbern::Json j = revbern::Json::parse(r.out);
  REQUIRE(j.at("results").at("forward").get<bool>());
  REQUIRE(j.at("results").at("all_pass").get<bool>());
}

TEST_CASE("sweep csv has one row per cell") {
  const CliResult r = run_cli("sweep --k-max 2 --m-max 2 --trials 5 --format csv");
  REQUIRE(r.code == 0);

  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);
  REQUIRE(lines[0] == "k,m,min_margin,saturation_gap");
  const auto row = fields_of(lines[1]);
  REQUIRE(row.size() == 4);
  REQUIRE(row[0] == "1");
  REQUIRE(row[1] == "1");
  REQUIRE(std::stod(row[3]) <= 1e-12);
}

TEST_CASE("sweep with zero trials leaves the margin column empty") {
  const CliResult r = run_cli("sweep --k-max 1 --m-max 2 --trials 0 --format csv");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = fields_of(lines[i]);
    REQUIRE(row[2].empty());
    REQUIRE(std::stod(row[3]) <= 1e-12);
  }
}

TEST_CASE("extremal json reports the certified sup norm") {
  const CliResult r = run_cli("extremal --k 2 --m 2 --band 16 --format json");
  REQUIRE(r.code == 0);

  const revbern::Json j = revbern::Json::parse(r.out);
  const revbern::Json& res = j.at("results");
  REQUIRE(res.at("sup_norm").get<double>() ==
          Catch::Approx(revbern::pi_double * revbern::pi_double / 32.0).epsilon(1e-13));
  REQUIRE(res.at("sup_norm_exact").is_string());
  REQUIRE(res.at("sup_norm_exact").get<std::string>() == "1/32*pi^2");
  REQUIRE(res.at("series").at("band") == 16);

  const revbern::CirclePiecewisePoly f = revbern::piecewise_from_json(res.at("function"));
  REQUIRE(exact_equal(f, revbern::make_extremal(2, 2)));
}

TEST_CASE("interpolate json discrepancy stays within tolerance") {
  const CliResult r = run_cli("interpolate --k 3 --m 2 --format json");
  REQUIRE(r.code == 0);

  const revbern::Json j = revbern::Json::parse(r.out);
  const revbern::Json& res = j.at("results");
  REQUIRE(res.at("discrepancy").get<double>() <= 1e-9);
  REQUIRE(res.at("zero_structure").at("pass").get<bool>());
  REQUIRE(res.at("interpolant").at("band") == 2);
}

TEST_CASE("output lands in a file on request") {
  const std::string path = "cli_test_output.json";
  std::remove(path.c_str());
  const CliResult r = run_cli("constants --k 1 --m 1 --format json --output " + path);
  REQUIRE(r.code == 0);
  REQUIRE(r.out.empty());

  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  const revbern::Json j = revbern::Json::parse(buf.str());
  REQUIRE(j.at("command") == "constants");
  std::remove(path.c_str());
}
