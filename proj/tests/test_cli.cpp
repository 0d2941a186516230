#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_runner.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

int line_count(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

}  // namespace

TEST_CASE("lk") {
  CHECK(run_cli("lk --sigma 1,3,2,4 --pi 2,4,1,3").out == "1\n");
  CHECK(run_cli("lk --sigma 1,2,3,4 --pi 1,2,3,4").out == "0\n");
  CHECK(run_cli("lk --sigma 4,2,3,1 --pi 2,4,1,3").out == "-1\n");
  const CliResult checked = run_cli("lk --sigma 1,3,2,4 --pi 2,4,1,3 --check --crossings --json");
  CHECK(checked.exit_code == 0);
  const json j = json::parse(checked.out);
  CHECK(j["lk"] == 1);
  CHECK(j["geometric"] == 1);
  CHECK(j["crossings"].size() == 2);
}

TEST_CASE("lk from a file") {
  const fs::path path = fs::temp_directory_path() / "gridlink_cli_link.txt";
  {
    std::ofstream out(path);
    out << "# hopf link\n1,3,2,4\n2,4,1,3\n";
  }
  CHECK(run_cli("lk --input " + path.string()).out == "1\n");
  fs::remove(path);
  CHECK(run_cli("lk --input /nonexistent/link.txt").exit_code == 5);
}

TEST_CASE("parse errors exit 2") {
  CHECK(run_cli("lk --sigma 1,1,2,4 --pi 2,4,1,3").exit_code == 2);
  CHECK(run_cli("lk --sigma 1,3,2,4").exit_code == 2);
  CHECK(run_cli("lk --sigma 1,3,2,4 --pi 1,2,3,4,5,6").exit_code == 2);
  CHECK(run_cli("lk --bogus").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("types of --seq 1,x --n 5").exit_code == 2);
  CHECK(run_cli("types count --type '{({1}' --n 5").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("moments exact") {
  const CliResult text = run_cli("moments exact --u 2");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("a_u=1/36\n") != std::string::npos);
  const json j = json::parse(run_cli("moments exact --u 2 --breakdown --json").out);
  CHECK(j["a_u"] == "1/36");
  CHECK(j["n_valid"] == 3);
  CHECK(j.contains("pairs"));
  CHECK(run_cli("moments exact --u 2 --symbol-limit 4").exit_code == 4);
  CHECK(run_cli("moments exact --u 2 --verify-unfiltered --cross-check").exit_code == 0);
}

TEST_CASE("moments brute") {
  CHECK(run_cli("moments brute --n 3 --u 1").out == "0/1\n");
  CHECK(run_cli("moments brute --n 3 --u 2").out == "1/4\n");
  CHECK(run_cli("moments brute --n 4 --u 2").exit_code == 4);
  CHECK(run_cli("moments brute --n 7 --u 2 --allow-long").exit_code == 4);
}

TEST_CASE("moments mc") {
  const CliResult r =
      run_cli("moments mc --n 50 --u 2 --samples 100000 --seed 7 --json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["metadata"]["seed"] == 7);
  CHECK(j["metadata"]["rng_family"].is_string());
  const json second = j["moments"][1];
  const double estimate = second["normalized"];
  const double se = second["normalized_se"];
  CHECK(std::abs(estimate - 1.0 / 36) <= 3 * se);

  const CliResult text = run_cli("moments mc --n 10 --u 2 --samples 1000 --seed 7");
  CHECK(json::parse(first_line(text.out))["seed"] == 7);
}

TEST_CASE("types") {
  CHECK(run_cli("types of --seq 2,5,5,1 --n 5").out == "{({2,3},{4},{1})}\n");
  CHECK(line_count(run_cli("types enumerate --u 1").out) == 1);
  CHECK(line_count(run_cli("types enumerate --u 2 --min-block-seq 2").out) == 3);
  CHECK(run_cli("types count --type '{({1});({2,3},{4})}' --n 5").out == "5\n");
  const json j = json::parse(run_cli("types enumerate --u 4 --min-block-seq 2 --json").out);
  CHECK(j["count"] == 102);
  CHECK(run_cli("types of --seq 1,2,3 --n 3").exit_code == 2);
}

TEST_CASE("render") {
  const fs::path path = fs::temp_directory_path() / "gridlink_cli_render.svg";
  const CliResult r = run_cli("render --sigma 1,3,2,4 --pi 2,4,1,3 --out " + path.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  std::stringstream svg;
  svg << in.rdbuf();
  CHECK(svg.str().find("lk = 1<") != std::string::npos);
  fs::remove(path);
  CHECK(run_cli("render --sigma 1,3,2,4 --pi 2,4,1,3 --out /nonexistent/dir/x.svg").exit_code == 5);
}

TEST_CASE("verify quick") {
  const CliResult r = run_cli("verify quick --json");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["failed"].empty());
  CHECK(j["checks"].size() >= 5);
}

TEST_CASE("histogram and convergence carry metadata") {
  const CliResult h = run_cli("histogram --n 6 --samples 5000 --seed 3");
  REQUIRE(h.exit_code == 0);
  const json meta = json::parse(first_line(h.out));
  CHECK(meta["seed"] == 3);
  CHECK(meta["bin_width"] == "1/6");
  CHECK(h.out.find("bin_lo,bin_hi,count\n") != std::string::npos);

  const CliResult c = run_cli("convergence --n-list 6,8 --samples 4000 --seed 3");
  REQUIRE(c.exit_code == 0);
  const json cmeta = json::parse(first_line(c.out));
  CHECK(cmeta["limits"]["a2"] == "1/36");
  CHECK(c.out.find("n,samples,m1,se1,m2,se2,m3,se3,m4,se4,ks_prev\n") != std::string::npos);
  CHECK(run_cli("convergence --n-list 8,6 --samples 10").exit_code == 2);
}

TEST_CASE("thread count leaves reports unchanged") {
  for (const std::string args :
       {"moments mc --n 12 --u 4 --samples 50000 --seed 19 --chunk-size 1000",
        "histogram --n 9 --samples 30000 --seed 4 --json",
        "convergence --n-list 5,9 --samples 20000 --seed 8 --no-limits"}) {
    const CliResult one = run_cli(args, "GRIDLINK_THREADS=1");
    const CliResult many = run_cli(args, "GRIDLINK_THREADS=4");
    CHECK(one.exit_code == 0);
    CHECK(one.out == many.out);
  }
}
