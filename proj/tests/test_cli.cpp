#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "zetafast/engine.hpp"

using namespace zetafast;
using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "zetafast");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("zeta --json") {
  const auto r = run({"zeta", "--sigma", "2", "--tau", "0", "--delta", "1e-6", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["value"]["re"].get<double>() == doctest::Approx(1.6449340668).epsilon(1e-9));
  CHECK(j["value"]["im"].get<double>() == 0.0);
  CHECK(j["certified"].get<bool>());
  CHECK(j["error_bound"].get<double>() == 1e-6);
  CHECK(j["summands_used"].get<std::int64_t>() > 0);
  CHECK(j.contains("max_cancellation_ratio"));
}

TEST_CASE("JSON round trip") {
  const auto r = run({"zeta", "--sigma", "0.5", "--tau", "123.456", "--delta", "1e-9", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const EvalResult direct = zeta(ComplexValue(0.5, 123.456), 1e-9);
  CHECK(j["value"]["re"].get<double>() == direct.value.real());
  CHECK(j["value"]["im"].get<double>() == direct.value.imag());
  CHECK(j["max_cancellation_ratio"].get<double>() == direct.max_cancellation_ratio);
  // 17 significant digits
  const auto pos = r.out.find("\"re\": ");
  const std::string digits = r.out.substr(pos + 6, r.out.find(',', pos) - pos - 6);
  std::size_t count = 0;
  for (char c : digits) count += (c >= '0' && c <= '9');
  CHECK(count >= 17);
}

TEST_CASE("oracle engine and heuristic mode") {
  const auto o = run({"zeta", "--sigma", "0.5", "--tau", "50", "--delta", "1e-6", "--engine", "oracle", "--json"});
  const auto f = run({"zeta", "--sigma", "0.5", "--tau", "50", "--delta", "1e-6", "--json"});
  REQUIRE(o.code == 0);
  const json a = json::parse(o.out), b = json::parse(f.out);
  CHECK(std::abs(a["value"]["re"].get<double>() - b["value"]["re"].get<double>()) < 1e-6);
  CHECK_FALSE(a["certified"].get<bool>());

  const auto h = run({"zeta", "--sigma", "-2", "--tau", "3", "--delta", "1e-6", "--mode", "heuristic", "--json"});
  REQUIRE(h.code == 0);
  CHECK_FALSE(json::parse(h.out)["certified"].get<bool>());
}

TEST_CASE("zeta-deriv") {
  const auto r = run({"zeta-deriv", "--order", "1", "--sigma", "0", "--tau", "0", "--delta", "1e-8", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["value"]["re"].get<double>() == doctest::Approx(-0.9189385332046727).epsilon(1e-9));
  CHECK_FALSE(j["certified"].get<bool>());
  CHECK(run({"zeta-deriv", "--order", "3", "--sigma", "0", "--tau", "0", "--delta", "1e-8"}).code == 2);
}

TEST_CASE("lfun") {
  const auto r = run({"lfun", "--q", "4", "--char-index", "1", "--sigma", "1", "--tau", "0", "--delta", "1e-8", "--json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["value"]["re"].get<double>() == doctest::Approx(0.7853981634).epsilon(1e-9));
  CHECK(run({"lfun", "--q", "4", "--char-index", "0", "--sigma", "1", "--tau", "0", "--delta", "1e-8"}).code == 3);
  CHECK(run({"lfun", "--q", "4", "--char-index", "9", "--sigma", "1", "--tau", "0", "--delta", "1e-8"}).code == 3);
}

TEST_CASE("params") {
  const auto r = run({"params", "--sigma", "1", "--tau", "10", "--delta", "0.05"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("v=6") != std::string::npos);
  CHECK(r.out.find("M=2") != std::string::npos);
  const auto j = json::parse(run({"params", "--sigma", "1", "--tau", "10", "--delta", "0.05", "--json"}).out);
  CHECK(j["v"].get<int>() == 6);
  CHECK(j["M"].get<int>() == 2);
  CHECK_FALSE(j["precondition_ok"].get<bool>());
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"zeta", "--sigma", "1"}).code == 2);
  CHECK(run({"zeta", "--sigma", "x", "--tau", "0", "--delta", "1e-6"}).code == 2);
  CHECK(run({"zeta", "--sigma", "1", "--tau", "0", "--delta", "1e-6"}).code == 3);
  CHECK(run({"zeta", "--sigma", "3", "--tau", "0", "--delta", "1e-6"}).code == 3);
  CHECK(run({"zeta", "--sigma", "0.5", "--tau", "0", "--delta", "0.5"}).code == 3);
  CHECK(run({"zeta", "--sigma", "0.5", "--tau", "10000", "--delta", "1e-40"}).code == 4);
  CHECK(run({"scan", "--t0", "0", "--t1", "10"}).code == 3);
  CHECK(run({"bench", "--tau-list", "1,a", "--delta-list", "1e-3"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("precision environment variable") {
  ::setenv("ZETAFAST_PRECISION", "extended", 1);
  const auto ext = run({"zeta", "--sigma", "0.5", "--tau", "30", "--delta", "1e-6", "--json"});
  ::setenv("ZETAFAST_PRECISION", "hardware", 1);
  const auto hw = run({"zeta", "--sigma", "0.5", "--tau", "30", "--delta", "1e-6", "--json"});
  ::setenv("ZETAFAST_PRECISION", "quad", 1);
  const auto bad = run({"zeta", "--sigma", "0.5", "--tau", "30", "--delta", "1e-6", "--json"});
  ::unsetenv("ZETAFAST_PRECISION");
  CHECK(json::parse(ext.out)["backend"].get<std::string>() == "extended");
  CHECK(json::parse(hw.out)["backend"].get<std::string>() == "hardware");
  CHECK(bad.code == 2);
}

TEST_CASE("scan") {
  const auto r = run({"scan", "--t0", "10", "--t1", "30", "--step", "0.05", "--delta", "1e-8", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["count"].get<int>() == 3);
  CHECK(j["zeros"][0]["t"].get<double>() == doctest::Approx(14.134725).epsilon(1e-7));
}

TEST_CASE("bench CSV") {
  const auto path = std::filesystem::temp_directory_path() / "zetafast_bench_test.csv";
  const auto r = run({"bench", "--tau-list", "100,1000,10000", "--delta-list", "1e-3,1e-6", "--csv", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "sigma,tau,delta,summands_measured,summands_bound,precondition_ok,wall_time,abs_error_vs_oracle");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (line.back() == ',') f.push_back("");
    REQUIRE(f.size() == 8);
    if (f[5] == "true") CHECK(std::stod(f[3]) <= std::stod(f[4]));
    CHECK(std::stod(f[7]) <= std::stod(f[2]));
  }
  CHECK(rows == 5 * 3 * 2);
  std::filesystem::remove(path);
}
