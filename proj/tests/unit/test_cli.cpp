#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sklylab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = sklylab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = SKLYLAB_DATA_DIR;

}  // namespace

TEST_CASE("hilbert over F_p") {
  const auto r = run({"--field", "fp:10007", "--max-deg", "4", "hilbert", "--alpha", "-5/7", "--beta", "2",
                      "--gamma", "3"});
  CHECK(r.code == sklylab::cli::kExitOk);
  const auto j = r.json();
  CHECK(j.at("dims") == nlohmann::json({1, 4, 10, 20, 35}));
  CHECK(j.at("schema") == "sklylab.report/1");
  CHECK_FALSE(j.contains("seconds"));
}

TEST_CASE("validate reports violations with the verdict exit code") {
  const auto ok = run({"validate", "--alpha", "-5/7", "--beta", "2", "--gamma", "3"});
  CHECK(ok.code == 0);
  const auto bad = run({"validate", "--alpha", "-1", "--beta", "1", "--gamma", "5"});
  CHECK(bad.code == sklylab::cli::kExitVerdict);
  CHECK(bad.json().at("valid") == false);
}

TEST_CASE("strata rejects n dividing 4") {
  const auto r = run({"strata", "--n", "4"});
  CHECK(r.code == sklylab::cli::kExitUsage);
  CHECK(r.err.find("n divides 4 excluded") != std::string::npos);
  const auto good = run({"strata", "--n", "5"});
  CHECK(good.code == 0);
  CHECK(good.json().at("n") == 5);
  const auto csv = run({"strata", "--n", "5", "--profile"});
  CHECK(csv.code == 0);
}

TEST_CASE("poisson check on a stored instance") {
  const auto r = run({"poisson", "check", "--instance", kData + "/instances/odd_n3.json"});
  CHECK(r.code == 0);
  const auto j = r.json();
  CHECK(j.at("casimir_ok") == true);
  CHECK(j.at("jacobi_ok") == true);
  CHECK(j.at("nambu_sign") == -1);
  CHECK(run({"poisson", "check", "--preset", "even_rho1"}).code == 0);
}

TEST_CASE("singular locus subcommands") {
  CHECK(run({"singloc", "even", "--file", kData + "/instances/even_rho1.json"}).code == 0);
  CHECK(run({"singloc", "odd", "--preset", "odd_n3"}).code == 0);
  CHECK(run({"singloc", "odd", "--preset", "odd_n3", "--direction", "0,1"}).code == sklylab::cli::kExitVerdict);
}

TEST_CASE("corrupted instance file") {
  const auto path = (std::filesystem::temp_directory_path() / "sklylab_cli_corrupt.json").string();
  {
    std::ofstream out(path);
    out << "{\"schema\": \"sklylab.instance/1\", \"n\": ";
  }
  const auto r = run({"poisson", "check", "--instance", path});
  CHECK(r.code == sklylab::cli::kExitUsage);
  CHECK(r.err.find("InvalidInstance") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("usage errors") {
  CHECK(run({"hilbert"}).code == sklylab::cli::kExitUsage);
  CHECK(run({"--field", "fp:8", "hilbert", "--alpha", "1", "--beta", "1", "--gamma", "1"}).code ==
        sklylab::cli::kExitUsage);
  CHECK(run({"no-such-command"}).code == sklylab::cli::kExitUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("full-verify subset") {
  const auto r = run({"full-verify", "--only", "strata"});
  CHECK(r.code == 0);
  const auto j = r.json();
  REQUIRE(j.at("verdicts").size() == 1);
  CHECK(j.at("verdicts")[0].at("ok") == true);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args{"--seed", "7", "--field", "fp:10007", "sigma-order", "--alpha", "-5/7",
                                      "--beta", "2", "--gamma", "3", "--samples", "2"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto h1 = run({"h4", "verify", "--alpha", "-5/7", "--beta", "2", "--gamma", "3"});
  const auto h2 = run({"h4", "verify", "--alpha", "-5/7", "--beta", "2", "--gamma", "3"});
  CHECK(h1.code == 0);
  CHECK(h1.out == h2.out);
}

TEST_CASE("timing and output file") {
  const auto path = (std::filesystem::temp_directory_path() / "sklylab_cli_out.json").string();
  const auto r = run({"--timing", "--out", path, "strata", "--n", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j.contains("seconds"));
  std::remove(path.c_str());
}
