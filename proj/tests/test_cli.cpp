#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

using Json = nlohmann::json;

std::string cli_path() {
  const char* env = std::getenv("ISOBALL_CLI");
  REQUIRE_MESSAGE(env != nullptr, "ISOBALL_CLI must point at the CLI binary");
  return env;
}

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.stdout_text.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

Json strip_timing(Json j) {
  j.erase("timing_seconds");
  if (j.contains("statistics") && j["statistics"].is_object())
    j["statistics"].erase("wall_seconds");
  return j;
}

}  // namespace

TEST_CASE("cli: verify appendix passes") {
  const auto res = run_cli("verify appendix --aux-max 20");
  CHECK(res.exit_code == 0);
  const Json j = Json::parse(res.stdout_text);
  CHECK(j.at("verdicts").at("ineq17").at("match") == true);
  CHECK(j.at("verdicts").at("ineq18").at("positivity_certified") == true);
  CHECK(j.at("schema_version") == 1);
}

TEST_CASE("cli: exhaustive local expansion") {
  const auto res = run_cli("verify local-expansion --n 4 --r 2");
  CHECK(res.exit_code == 0);
  const Json j = Json::parse(res.stdout_text);
  CHECK(j.at("statistics").at("families_examined") == "64");
  CHECK(j.at("verdicts").at("zero_violations") == true);
}

TEST_CASE("cli: oversized slice is a usage error") {
  CHECK(run_cli("verify nm --n 99 --r 50").exit_code == 2);
}

TEST_CASE("cli: unknown subcommand and bad flags exit 2") {
  CHECK(run_cli("construct frobnicate --n 4").exit_code == 2);
  CHECK(run_cli("bounds eval --which nope --n 4 --size 1").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("cli: min boundary search") {
  const auto res = run_cli("search min-boundary --n 4 --size 5");
  CHECK(res.exit_code == 0);
  const Json j = Json::parse(res.stdout_text);
  CHECK(j.at("verdicts").at("min_boundary") == "6");
  // tight budget exceeds
  CHECK(run_cli("search min-boundary --n 4 --size 5 --budget 10").exit_code == 2);
}

TEST_CASE("cli: empty sample run") {
  const auto res = run_cli("search sample --bound thm1 --n 12 --R 6 --rho 1/4 --samples 0");
  CHECK(res.exit_code == 0);
  const Json j = Json::parse(res.stdout_text);
  CHECK(j.at("statistics").at("families_examined") == "0");
}

TEST_CASE("cli: seeded sample runs are deterministic and json round-trips") {
  const std::string cmd = "search sample --bound thm1 --n 12 --R 6 --rho 0.25 "
                          "--samples 40 --seed 7";
  const auto a = run_cli(cmd);
  const auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  const Json ja = strip_timing(Json::parse(a.stdout_text));
  const Json jb = strip_timing(Json::parse(b.stdout_text));
  CHECK(ja == jb);
  // round trip: parse(serialize(report)) == report
  CHECK(Json::parse(ja.dump()) == ja);
  CHECK(ja.at("seed") == 7);
}

TEST_CASE("cli: constructions emit family JSON") {
  const auto res = run_cli("construct slice-halfspace --n 4 --r 2 --k 0");
  CHECK(res.exit_code == 0);
  const Json j = Json::parse(res.stdout_text);
  CHECK(j.at("statistics").at("size") == "5");
  CHECK(j.at("verdicts").at("family").at("repr") == "profile");

  const auto empty = run_cli("construct ball-halfspace --n 4 --R 2 --k -3");
  CHECK(empty.exit_code == 0);
  CHECK(Json::parse(empty.stdout_text).at("statistics").at("size") == "0");

  const auto sized = run_cli("construct sized-ball-halfspace --n 100 --R 50 --alpha 1/2");
  CHECK(sized.exit_code == 0);
}

TEST_CASE("cli: bound evaluation") {
  const auto nm = run_cli("bounds eval --which nm --n 4 --r 2 --size 3");
  CHECK(nm.exit_code == 0);
  const Json j = Json::parse(nm.stdout_text);
  CHECK(j.at("verdicts").at("lower_shadow_bound") == "2");
  CHECK(j.at("verdicts").at("upper_shadow_bound") == "2");

  const auto eq4 = run_cli("bounds eval --which eq4 --n 6 --r 3 --size 10 --boundary 25");
  CHECK(eq4.exit_code == 0);
  CHECK(Json::parse(eq4.stdout_text).at("verdicts").at("holds") == true);

  // a failing instance exits 1
  CHECK(run_cli("bounds eval --which eq4 --n 4 --r 2 --size 3 --boundary 4").exit_code == 1);

  // precondition gate: size below the admissible window
  CHECK(run_cli("bounds eval --which thm1 --n 6 --R 3 --rho 1/3 --size 2 --boundary 6")
            .exit_code == 2);
  // same instance, exploratory evaluation
  const auto expl =
      run_cli("bounds eval --which thm1 --n 6 --R 3 --rho 1/3 --size 21 --boundary 6 "
              "--exploratory");
  CHECK(expl.exit_code == 0);
  const Json je = Json::parse(expl.stdout_text);
  CHECK(je.at("verdicts").at("holds") == true);
  CHECK(je.at("verdicts").at("size_window_ok") == false);
  CHECK(je.at("verdicts").at("exploratory") == true);

  const auto l7 = run_cli("bounds eval --which lemma7 --n 8 --R 4 --size 40 --boundary 6");
  CHECK(l7.exit_code == 0);
  const Json jl = Json::parse(l7.stdout_text);
  CHECK(jl.at("verdicts").at("c") == "113/153");
  CHECK(jl.at("verdicts").at("r0") == 2);
  CHECK(jl.at("verdicts").at("holds") == true);
}

TEST_CASE("cli: --out and --csv write files") {
  const std::string out = "/tmp/isoball_test_out.json";
  const std::string csv = "/tmp/isoball_test_rows.csv";
  std::remove(out.c_str());
  std::remove(csv.c_str());
  const auto res = run_cli("--out " + out + " --csv " + csv +
                           " search sample --bound thm1 --n 12 --R 6 --rho 1/4 --samples 10 "
                           "--generator construction");
  CHECK(res.exit_code == 0);
  std::ifstream jf(out);
  REQUIRE(jf.good());
  Json j;
  jf >> j;
  CHECK(strip_timing(j) == strip_timing(Json::parse(res.stdout_text)));
  std::ifstream cf(csv);
  REQUIRE(cf.good());
  std::string header;
  std::getline(cf, header);
  CHECK(header == "index,size,boundary,boundary_is_upper_bound,checked,violation,ratio");
  std::string first_row;
  std::getline(cf, first_row);
  CHECK(!first_row.empty());
}

TEST_CASE("cli: workers flag leaves verdicts unchanged") {
  const auto w1 = run_cli("--workers 1 verify local-expansion --n 5 --r 2");
  const auto w2 = run_cli("--workers 2 verify local-expansion --n 5 --r 2");
  CHECK(w1.exit_code == 0);
  Json a = strip_timing(Json::parse(w1.stdout_text));
  Json b = strip_timing(Json::parse(w2.stdout_text));
  a.erase("parameters");
  b.erase("parameters");  // workers count differs there by design
  CHECK(a == b);
}

TEST_CASE("cli: interlace verification modes") {
  const auto inst = run_cli("verify interlace --r 2 --s 4 --alpha 2/5");
  CHECK(inst.exit_code == 0);
  const Json j = Json::parse(inst.stdout_text);
  CHECK(j.at("verdicts").at("roots").at("all_hold") == true);

  const auto raw = run_cli("verify interlace --b1 0 --c1 -1 --b2 -2 --c2 0");
  CHECK(raw.exit_code == 0);
  CHECK(Json::parse(raw.stdout_text).at("verdicts").at("conclusion_x2m_lt_x1p") == "holds");

  const auto degenerate = run_cli("verify interlace --b1 1 --c1 -1 --b2 1 --c2 -2");
  CHECK(degenerate.exit_code == 2);
}

TEST_CASE("cli: lemma6 sweep") {
  const auto res = run_cli("verify lemma6 --max-n 64");
  CHECK(res.exit_code == 0);
  const Json j = Json::parse(res.stdout_text);
  CHECK(j.at("verdicts").at("ratio_monotone_all") == true);
  CHECK(j.at("verdicts").at("slice_lower_bound_all") == true);
}
