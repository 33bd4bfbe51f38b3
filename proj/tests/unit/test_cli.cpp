#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config_file.hpp"
#include "doctest.h"
#include "json.hpp"
#include "usage_error.hpp"
#include "wedgeqed/version.hpp"

namespace cli = wedgeqed::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int rc;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int rc = cli::run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("wedgeqed-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// Clears the output-directory variable for the duration of a test.
struct NoOutDir {
  NoOutDir() { ::unsetenv(cli::kOutDirEnv); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("single point as CSV") {
  NoOutDir guard;
  const auto r = run({"wedge-decay", "--p", "2", "--theta0-frac", "0.5", "--r-over-lambda", "1"});
  REQUIRE(r.rc == cli::kOk);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "r_over_lambda,theta0,gamma_r,gamma_theta,gamma_z,est_error,converged");
  CHECK(lines[1].substr(0, 23) == "1.0000000000000000e+00,");
  CHECK(lines[1].back() == '1');
  CHECK(r.out.find("# tool: wedgeqed ") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  NoOutDir guard;
  CHECK(run({}).rc == cli::kUsage);
  CHECK(run({"no-such-command"}).rc == cli::kUsage);
  CHECK(run({"wedge-decay", "--theta0", "0.3", "--r-over-lambda", "1"}).rc == cli::kUsage);
  CHECK(run({"wedge-decay", "--p", "2", "--theta0", "0.3", "--start", "1"}).rc == cli::kUsage);
  CHECK(run({"wedge-decay", "--p", "2", "--sweep", "r", "--start", "0.1", "--stop", "1"}).rc == cli::kUsage);
  CHECK(run({"plates-decay", "--d-over-lambda", "1", "--y-frac", "0.5", "--acceleration", "magic"}).rc ==
        cli::kUsage);
  CHECK(run({"wedge-decay", "--config", "/nonexistent/file.conf"}).rc == cli::kUsage);
}

TEST_CASE("domain errors exit 3") {
  NoOutDir guard;
  CHECK(run({"wedge-decay", "--p", "3", "--theta0", "2.0", "--r-over-lambda", "1"}).rc == cli::kDomain);
  CHECK(run({"halfsheet-decay", "--r-over-lambda", "1", "--theta0", "0"}).rc == cli::kDomain);
  CHECK(run({"plates-decay", "--d-over-lambda", "1", "--y-over-lambda", "1.5"}).rc == cli::kDomain);
  CHECK(run({"halfsheet-shift", "--scaled-2gr", "1", "--lambda-cap", "0.5"}).rc == cli::kDomain);
}

TEST_CASE("unconverged rows exit 4 unless partial output is allowed") {
  NoOutDir guard;
  const std::vector<std::string> base = {"plates-decay", "--d-over-lambda", "1.5", "--y-frac",
                                         "0.5", "--max-images", "256"};
  const auto strict = run(base);
  CHECK(strict.rc == cli::kNotConverged);
  auto lenient_args = base;
  lenient_args.push_back("--allow-partial");
  const auto lenient = run(lenient_args);
  CHECK(lenient.rc == cli::kOk);
  const auto lines = data_lines(lenient.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[1].back() == '0');
  CHECK(lenient.out.find("# unconverged_rows: 1") != std::string::npos);
}

TEST_CASE("sweeps are deterministic and independent of --jobs") {
  NoOutDir guard;
  const std::vector<std::string> base = {"halfsheet-decay", "--r-over-lambda", "1", "--sweep",
                                         "theta", "--start", "0.1", "--stop", "6", "--points", "17"};
  auto one = base;
  one.insert(one.end(), {"--jobs", "1"});
  auto four = base;
  four.insert(four.end(), {"--jobs", "4"});
  const auto a = run(one);
  const auto b = run(four);
  REQUIRE(a.rc == 0);
  REQUIRE(b.rc == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == run(one).out);
  const auto lines = data_lines(a.out);
  REQUIRE(lines.size() == 18);
  CHECK(lines[1].substr(0, 45).find("1.0000000000000001e-01") != std::string::npos);
  CHECK(lines[17].find(",6.0000000000000000e+00,") != std::string::npos);
}

TEST_CASE("config file entries are overridden by the command line") {
  NoOutDir guard;
  const fs::path dir = scratch_dir("config");
  const fs::path conf = dir / "sweep.conf";
  {
    std::ofstream f(conf);
    f << "# comment\np = 3\n--theta0-frac = 0.5\nsweep = r\nstart = 0.5\nstop = 2  # trailing\npoints = 5\n";
  }
  const auto from_file = run({"wedge-decay", "--config", conf.string()});
  REQUIRE(from_file.rc == 0);
  CHECK(data_lines(from_file.out).size() == 6);
  const auto overridden = run({"wedge-decay", "--config", conf.string(), "--points", "3"});
  REQUIRE(overridden.rc == 0);
  CHECK(data_lines(overridden.out).size() == 4);
  {
    std::ofstream f(dir / "bad.conf");
    f << "colour = blue\n";
  }
  CHECK(run({"wedge-decay", "--config", (dir / "bad.conf").string()}).rc == cli::kUsage);
  std::istringstream malformed("just words\n");
  CHECK_THROWS_AS(cli::parse_config(malformed, "inline"), cli::UsageError);
}

TEST_CASE("JSON output") {
  NoOutDir guard;
  const auto r = run({"wedge-shift", "--p", "1", "--theta0-frac", "0.5", "--sweep", "scaled-2gr",
                      "--start", "1", "--stop", "4", "--points", "4", "--format", "json"});
  REQUIRE(r.rc == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["columns"] == nlohmann::json({"scaled_2gr", "shift_ratio", "est_error"}));
  REQUIRE(doc["rows"].size() == 4);
  CHECK(doc["rows"][3]["scaled_2gr"].get<double>() == 4.0);
  CHECK(doc["rows"][0]["converged"].get<bool>());
  CHECK(doc["meta"].contains("lambda_cap"));
}

TEST_CASE("output directory from the environment") {
  const fs::path dir = scratch_dir("outdir");
  ::setenv(cli::kOutDirEnv, dir.c_str(), 1);
  const auto r = run({"halfsheet-shift", "--scaled-2gr", "2"});
  const auto named = run({"halfsheet-shift", "--scaled-2gr", "2", "--out", "sub/named.csv"});
  const auto forced = run({"halfsheet-shift", "--scaled-2gr", "2", "--out", "-"});
  ::unsetenv(cli::kOutDirEnv);
  CHECK(r.rc == 0);
  CHECK(r.out.empty());
  CHECK(fs::exists(dir / "halfsheet-shift.csv"));
  CHECK(named.rc == 0);
  CHECK(fs::exists(dir / "sub" / "named.csv"));
  CHECK_FALSE(forced.out.empty());
}

TEST_CASE("validate subcommand") {
  NoOutDir guard;
  const auto r = run({"validate", "--suite", "graf", "--seed", "11"});
  CHECK(r.rc == cli::kOk);
  CHECK(r.out.find("suite graf: 100/100 passed") != std::string::npos);
  CHECK(run({"validate", "--suite", "bogus"}).rc == cli::kUsage);
}

TEST_CASE("version and help") {
  const auto v = run({"--version"});
  CHECK(v.rc == 0);
  CHECK(v.out.find(wedgeqed::version()) != std::string::npos);
  const auto h = run({"--help"});
  CHECK(h.rc == 0);
  CHECK(h.out.find("wedge-decay") != std::string::npos);
  CHECK(run({"plates-decay", "--help"}).rc == 0);
}

TEST_CASE("every recipe names its command and parses") {
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(WEDGEQED_RECIPE_DIR)) {
    if (entry.path().extension() != ".conf") continue;
    ++seen;
    std::ifstream f(entry.path());
    std::string usage;
    for (std::string line; std::getline(f, line) && !line.empty() && line[0] == '#';) {
      if (line.rfind("# wedgeqed ", 0) == 0) usage = line;
    }
    INFO(entry.path().filename().string());
    CHECK(usage.find(" --config recipes/" + entry.path().filename().string()) != std::string::npos);
    CHECK_NOTHROW(cli::read_config(entry.path().string()));
  }
  CHECK(seen == 21);
}

}  // TEST_SUITE
