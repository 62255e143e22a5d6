#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#ifndef DIVTOWER_BIN
#error "DIVTOWER_BIN must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(DIVTOWER_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Per-process scratch directory, wiped on startup.
const fs::path& scratch() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "divtower-cli-tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_scratch(const std::string& name, const std::string& content) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << content;
  return p.string();
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const char* kSteane =
    "n=7\nnu=2\nt= 3 3 3 3 3 3 3\nL:\n1111111\nS:\n1010101\n0110011\n0001111\n";

}  // namespace

TEST_CASE("verify accepts a valid code file") {
  const std::string path = write_scratch("steane.codefile", kSteane);
  const RunResult r = run("verify " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("result: PASS") != std::string::npos);
}

TEST_CASE("verify flags an even coefficient as a parse error") {
  const std::string path = write_scratch(
      "even.codefile", "n=3\nnu=2\nt= 1 2 1\nL:\n111\nS:\n");
  const RunResult r = run("verify " + path);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("entry 2") != std::string::npos);
}

TEST_CASE("verify reports a failing norm with its witness row") {
  const std::string path = write_scratch(
      "unit.codefile", "n=7\nnu=2\nt= 1 1 1 1 1 1 1\nL:\n1111111\nS:\n1010101\n0110011\n0001111\n");
  const RunResult r = run("verify " + path);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("l-nu-orthonormal: FAIL") != std::string::npos);
  CHECK(r.output.find("result: FAIL") != std::string::npos);
}

TEST_CASE("verify rejects unreadable paths as usage errors") {
  const RunResult r = run("verify " + (scratch() / "missing.codefile").string());
  CHECK(r.exit_code == 2);
}

TEST_CASE("lift produces the fifteen-column code with distance three") {
  const std::string path = write_scratch("steane.codefile", kSteane);
  const std::string out = (scratch() / "steane.nu3.codefile").string();
  const RunResult r = run("lift " + path + " --out " + out);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("15 columns") != std::string::npos);
  CHECK(r.output.find("d_Z = 3") != std::string::npos);
  CHECK(r.output.find("lifted to level 3") != std::string::npos);

  const RunResult again = run("verify " + out);
  CHECK(again.exit_code == 0);
}

TEST_CASE("lift reports both adjustment behaviours") {
  const std::string path = write_scratch("steane.codefile", kSteane);
  const RunResult r = run("lift " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("bumped columns {1, 8}") != std::string::npos);
  CHECK(r.output.find("even-bump constraint applied: yes") != std::string::npos);
  CHECK(r.output.find("coefficient-sum identity: PASS") != std::string::npos);
  CHECK(r.output.find("single-block adjustment for comparison: bumped columns {7}; valid: no") !=
        std::string::npos);
}

TEST_CASE("lift on the smallest H-code reports distance two") {
  const RunResult cat = run("catalog hcode 2 --out " + (scratch() / "h2.codefile").string());
  REQUIRE(cat.exit_code == 0);
  const RunResult r = run("lift " + (scratch() / "h2.codefile").string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("14 columns") != std::string::npos);
  CHECK(r.output.find("d_Z = 2") != std::string::npos);
  CHECK(r.output.find("triorthogonal (pairs and triples even): yes") != std::string::npos);
}

TEST_CASE("lift rejects mixed-level inputs") {
  const std::string low = write_scratch("steane.codefile", kSteane);
  const std::string high = (scratch() / "steane.nu3.codefile").string();
  REQUIRE(run("lift " + low + " --out " + high).exit_code == 0);
  const RunResult r = run("lift " + low + " " + high);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("level") != std::string::npos);
}

TEST_CASE("tower climbs to level four and writes re-verifiable files") {
  const std::string path = write_scratch("steane.codefile", kSteane);
  const std::string dir = (scratch() / "tower").string();
  const RunResult r = run("tower " + path + " --target 4 --out-dir " + dir);
  CHECK(r.exit_code == 0);
  for (unsigned nu = 2; nu <= 4; ++nu) {
    const fs::path level = fs::path(dir) / ("steane.nu" + std::to_string(nu) + ".codefile");
    REQUIRE(fs::exists(level));
    CHECK(run("verify " + level.string()).exit_code == 0);
  }
  CHECK(r.output.find("31") != std::string::npos);
}

TEST_CASE("tower at the input level just copies the file") {
  const std::string path = write_scratch("steane.codefile", kSteane);
  const std::string dir = (scratch() / "tower-copy").string();
  const RunResult r = run("tower " + path + " --target 2 --out-dir " + dir);
  CHECK(r.exit_code == 0);
  CHECK(read_text(fs::path(dir) / "steane.nu2.codefile") == kSteane);
}

TEST_CASE("tower refuses codes without a transversal X") {
  // Valid single-qubit logical on two columns; the all-ones vector is not
  // in the generator span.
  const std::string path = write_scratch("nox.codefile", "n=2\nnu=2\nt= 1 1\nL:\n10\nS:\n");
  REQUIRE(run("verify " + path).exit_code == 0);
  const RunResult r =
      run("tower " + path + " --target 3 --out-dir " + (scratch() / "tower-nox").string());
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("transversal X fails at level 2") != std::string::npos);
}

TEST_CASE("distance prints both distances") {
  const std::string path = write_scratch("steane.codefile", kSteane);
  const RunResult r = run("distance " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("d_Z = 3") != std::string::npos);
  CHECK(r.output.find("d_X = 3") != std::string::npos);
}

TEST_CASE("phase-check passes on the catalog code") {
  const std::string path = write_scratch("steane.codefile", kSteane);
  const RunResult r = run("phase-check " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("phase-identity: PASS") != std::string::npos);
}

TEST_CASE("checkmat emits both matrices separated by a blank line") {
  const std::string path = write_scratch("steane.codefile", kSteane);
  const RunResult r = run("checkmat " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("111111110000000\n") != std::string::npos);
  CHECK(r.output.find("\n\n111111111111111\n") != std::string::npos);
}

TEST_CASE("sensitivity splits line from ring") {
  const std::string line = write_scratch("line5.txt", "11000\n01100\n00110\n00011\n");
  const RunResult bad = run("sensitivity " + line + " --d 5");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("e=10000") != std::string::npos);

  const std::string ring = write_scratch("ring5.txt", "11000\n01100\n00110\n00011\n10001\n");
  const RunResult good = run("sensitivity " + ring + " --d 5");
  CHECK(good.exit_code == 0);
  CHECK(good.output.find("PASS") != std::string::npos);
}

TEST_CASE("rate prints exact rationals") {
  CHECK(run("rate --n 7 --k 1 --s 2 --mu 2 --nu 4").output.find("= 117") != std::string::npos);
  const RunResult frac = run("rate --n 5 --k 3 --s 2 --mu 2 --nu 3");
  CHECK(frac.exit_code == 0);
  CHECK(frac.output.find("/") != std::string::npos);
  CHECK(run("rate --n 7 --k 1 --s 1 --mu 2 --nu 3").exit_code == 2);
}

TEST_CASE("catalog emits code files and matrices") {
  const RunResult st = run("catalog steane");
  CHECK(st.exit_code == 0);
  CHECK(st.output.find("n=7") != std::string::npos);
  CHECK(st.output.find("1010101") != std::string::npos);

  const RunResult bh = run("catalog bh-trio 2");
  CHECK(bh.exit_code == 0);
  CHECK(bh.output.find("00001111101010") != std::string::npos);

  CHECK(run("catalog hcode 3").exit_code == 2);
  CHECK(run("catalog hcode").exit_code == 2);
  CHECK(run("catalog unknown-name").exit_code == 2);
  CHECK(run("catalog random 6 2 8 1").exit_code == 1);  // unreachable distance
}

TEST_CASE("coeff synthesizes or reports absence") {
  const std::string no_t = write_scratch("bare.codefile",
                                         "n=7\nnu=2\nL:\n1111111\nS:\n1010101\n0110011\n0001111\n");
  const RunResult r = run("coeff " + no_t);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("t=") != std::string::npos);

  const RunResult absent = run("coeff " + no_t + " --nu 5");
  CHECK(absent.exit_code == 1);
  CHECK(absent.output.find("no coefficient vector") != std::string::npos);
}

TEST_CASE("json reports are stable and machine readable") {
  const std::string path = write_scratch("steane.codefile", kSteane);
  const RunResult a = run("--json verify " + path);
  const RunResult b = run("--json verify " + path);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  const nlohmann::json j = nlohmann::json::parse(a.output);
  CHECK(j["command"] == "verify");
  CHECK(j["pass"] == true);
  CHECK(j["checks"].is_array());
  CHECK(j["transversal_x"] == true);

  const nlohmann::json lift = nlohmann::json::parse(run("--json lift " + path).output);
  CHECK(lift["columns"] == 15);
  CHECK(lift["d_z"] == 3);
  CHECK(lift["adjustment"]["bumped_columns"] == nlohmann::json::array({1, 8}));

  const nlohmann::json rate =
      nlohmann::json::parse(run("--json rate --n 7 --k 1 --s 2 --mu 2 --nu 3").output);
  CHECK(rate["numerator"] == 29);
  CHECK(rate["denominator"] == 1);
}

TEST_CASE("reports are byte-for-byte deterministic") {
  const std::string path = write_scratch("steane.codefile", kSteane);
  const RunResult a = run("lift " + path);
  const RunResult b = run("lift " + path);
  CHECK(a.output == b.output);
}

TEST_CASE("help exits cleanly and usage errors do not") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("rate --n 7").exit_code == 2);
}
