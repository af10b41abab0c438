#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

// Exercises the installed exit-code contract of the wrl tool:
//   0 success / verified, 1 usage, 2 bounds-only, 3 prediction mismatch.
// The binary path comes from the WRL_CLI environment variable.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run(const std::string& args) {
  const char* cli = std::getenv("WRL_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "WRL_CLI must point at the wrl binary");
  std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace

TEST_CASE("rank: exact certificates exit 0") {
  auto r = run("rank --binary 2/1,0,-6/1,0 --no-weighted");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"status\": \"exact\"") != std::string::npos);
  CHECK(r.output.find("\"upper\": 3") != std::string::npos);

  // power of a linear form: rank 1
  auto r1 = run("rank --binary 1,5,10,10,5,1 --no-weighted");
  CHECK(r1.exit_code == 0);
  CHECK(r1.output.find("\"upper\": 1") != std::string::npos);
}

TEST_CASE("rank: malformed rationals exit 1") {
  CHECK(run("rank --binary 1/0,1,2").exit_code == 1);
  CHECK(run("rank --binary x,y").exit_code == 1);
  CHECK(run("rank").exit_code == 1);
  CHECK(run("frobnicate").exit_code == 1);
}

TEST_CASE("rank: undecided certificates exit 2") {
  // z^4 - z^2 = z^2 (z-1)(z+1): every apolar cubic has exactly one real
  // root, so the level-3 search must fail while the complex rank stays 3
  auto r = run("rank --binary 1,0,-1,0,0 --no-weighted");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("\"status\": \"bounded\"") != std::string::npos);
  CHECK(r.output.find("\"lower\": 3") != std::string::npos);
  CHECK(r.output.find("\"upper\": 4") != std::string::npos);
}

TEST_CASE("witness: certified constructions exit 0, bad input exits 1") {
  auto r = run("witness -d 4 -c 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"distinct_real_roots\": 4") != std::string::npos);

  CHECK(run("witness -d 4 -c 0").exit_code == 1);
  CHECK(run("witness -c 1").exit_code == 1);  // missing degree
}

TEST_CASE("verify: hypothesis gating exits 1") {
  CHECK(run("verify w6 --m 4 --d 12 --samples 1").exit_code == 1);
  CHECK(run("verify zz --m 2 --d 6").exit_code == 1);
}

TEST_CASE("verify: passing prediction exits 0") {
  auto r = run("verify w2 --m 1 --d 5 --samples 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("census: invalid ranges exit 1, valid runs write files and exit 0") {
  namespace fs = std::filesystem;
  // b > (d+2)/2 for m = 1
  CHECK(run("census --m 1 --d 7 --b 6 --types 6,0 --samples 2").exit_code == 1);

  auto dir = fs::temp_directory_path() / "wrl_cli_census";
  fs::remove_all(dir);
  auto r = run("census --m 1 --d 7 --b 2 --types 2,0;0,1 --samples 2 --seed 42 --out " +
               dir.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("m,d,b,stratum_e,stratum_a") != std::string::npos);
  CHECK(fs::exists(dir / "census_m1_d7_b2_s2a.jsonl"));
  CHECK(fs::exists(dir / "census_m1_d7_b2_s2a.csv"));
  fs::remove_all(dir);
}

TEST_CASE("decompose: exact decompositions exit 0") {
  auto r = run("decompose --binary 2/1,0,-6/1,0 --no-weighted");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"terms\"") != std::string::npos);
}
