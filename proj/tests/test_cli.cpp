#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "theta/enumerate.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(THETA_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("version and usage errors") {
  CHECK(run_cli("--version").exit_code == 0);
  CHECK(run_cli("--definitely-not-a-flag").exit_code == 2);
  CHECK(run_cli("index").exit_code == 2);                      // missing --n
  CHECK(run_cli("verify nosuchsuite --n 12 --k 8").exit_code == 2);
  CHECK(run_cli("charpoly --family theta2 --n 7 --k 8").exit_code == 2);  // n < k
  // runtime failures (I/O) exit 1, usage stays 2
  CHECK(run_cli("enumerate --vertices 5 --out /no/such/dir/x.g6").exit_code == 1);
}

TEST_CASE("index of a family instance") {
  RunResult r = run_cli("index --family theta2 --n 12 --k 8");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  double lam = std::stod(j["lambda1"].get<std::string>());
  CHECK(lam == doctest::Approx(9.411345879150234).epsilon(1e-8));
  CHECK(j["eigenvalues"].size() == 12);
}

TEST_CASE("charpoly quotient factor") {
  RunResult r = run_cli("charpoly --family theta2 --n 12 --k 8 --quotient");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  std::vector<std::string> expect{"-459", "181", "130", "-38", "-7", "1"};
  REQUIRE(j.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(j[i].get<std::string>() == expect[i]);
}

TEST_CASE("family then index via g6 round trip") {
  RunResult fam = run_cli("family --family theta1 --n 12 --s 1 --t 1");
  REQUIRE(fam.exit_code == 0);
  std::string g6 = fam.output.substr(0, fam.output.find('\n'));
  RunResult idx = run_cli("index --g6 '" + g6 + "' --n 12");
  REQUIRE(idx.exit_code == 0);
  auto j = nlohmann::json::parse(idx.output);
  CHECK(j["n"] == 12);
}

TEST_CASE("enumerate writes sorted graph6 lines") {
  std::string path = "/tmp/theta_test_enum.g6";
  RunResult r = run_cli("enumerate --vertices 5 --out " + path);
  REQUIRE(r.exit_code == 0);
  std::ifstream f(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(f, line)) lines.push_back(line);
  auto expect = theta::enumerate_bicyclic_certificates(5);
  CHECK(lines == expect);
  std::remove(path.c_str());
}

TEST_CASE("verify suite exit codes and determinism") {
  RunResult a = run_cli("--no-timestamp verify identities --n 12:13 --k 8");
  CHECK(a.exit_code == 0);
  RunResult b = run_cli("--no-timestamp verify identities --n 12:13 --k 8");
  CHECK(a.output == b.output);
  auto j = nlohmann::json::parse(a.output);
  CHECK(j["gating_ok"] == true);
}

TEST_CASE("search is reproducible") {
  RunResult a = run_cli("--no-timestamp search --n 14 --k 7 --seeds 2 --max-iters 60 --seed 5");
  REQUIRE(a.exit_code == 0);
  RunResult b = run_cli("--no-timestamp search --n 14 --k 7 --seeds 2 --max-iters 60 --seed 5");
  CHECK(a.output == b.output);
  auto j = nlohmann::json::parse(a.output);
  CHECK(j["runs"].size() == 2);
}
