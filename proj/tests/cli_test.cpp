#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "bgdc/json_io.hpp"
#include "bgdc/kinematics.hpp"

using namespace bgdc;

namespace {

std::string cli_path() {
  const char* env = std::getenv("BGDC_CLI");
  REQUIRE_MESSAGE(env != nullptr, "BGDC_CLI must point at the bgdc binary");
  return env;
}

int run(const std::string& args) {
  const std::string cmd = "\"" + cli_path() + "\" " + args;
  int st = std::system(cmd.c_str());
  REQUIRE(st != -1);
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

// Like run(), but with an environment prefix before the binary.
int run_env(const std::string& env_prefix, const std::string& args) {
  const std::string cmd = env_prefix + " \"" + cli_path() + "\" " + args;
  int st = std::system(cmd.c_str());
  REQUIRE(st != -1);
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), ("missing file: " + path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << text;
}

std::string write_fixture_json() {
  const std::string path = "cli_ut_k3.json";
  spit(path, kinconfig_to_json(fixture_k3()).dump(2) + "\n");
  return path;
}

}  // namespace

TEST_CASE("gen is deterministic and validates its arguments") {
  CHECK(run("gen --n 4 --seed 7 -o cli_ut_g1.json 2>/dev/null") == 0);
  CHECK(run("gen --n 4 --seed 7 -o cli_ut_g2.json 2>/dev/null") == 0);
  CHECK(run("gen --n 4 --seed 8 -o cli_ut_g3.json 2>/dev/null") == 0);
  CHECK(slurp("cli_ut_g1.json") == slurp("cli_ut_g2.json"));
  CHECK(slurp("cli_ut_g1.json") != slurp("cli_ut_g3.json"));

  // A generated config must round-trip into the reader.
  json j = json::parse(slurp("cli_ut_g1.json"));
  KinConfig<ExactScalar> cfg = kinconfig_from_json<ExactScalar>(j);
  CHECK(cfg.n() == 4);
  CHECK(validate(cfg).pass);

  CHECK(run("gen --n 2 -o cli_ut_bad.json 2>/dev/null") == 1);
  CHECK(run("gen 2>/dev/null") == 1);  // --n is required
}

TEST_CASE("compute amplitude reproduces the fixture values") {
  const std::string kin = write_fixture_json();
  CHECK(run("compute amplitude -i " + kin + " -o cli_ut_amp.json 2>/dev/null") == 0);
  json j = json::parse(slurp("cli_ut_amp.json"));
  CHECK(j["n"] == 3);
  CHECK(j["orderings"]["123"] == "1");
  CHECK(j["orderings"]["213"] == "-1");
  CHECK(j["full"] == "1");
  CHECK(j["tensor"]["direct"] == "1/2");
  CHECK(j["tensor"]["master"] == "1/2");
  CHECK(j["tensor"]["klt"] == "1/2");
  CHECK(j["tensor"]["sigma"] == 1);
}

TEST_CASE("compute currents emits a word-indexed table") {
  const std::string kin = write_fixture_json();
  CHECK(run("compute currents --theory cs --word 12 --word 1 -i " + kin +
            " -o cli_ut_cur.json 2>/dev/null") == 0);
  json j = json::parse(slurp("cli_ut_cur.json"));
  CHECK(j["1"][1] == "1");
  CHECK(j["12"][2] == "1/2");

  // Colour-dressed currents are only defined on ordered words.
  CHECK(run("compute currents --theory cd --word 21 -i " + kin + " -o - 2>/dev/null >/dev/null") ==
        1);
  // Unknown theory names are usage errors.
  CHECK(run("compute currents --theory xx --word 12 -i " + kin + " -o - 2>/dev/null >/dev/null") ==
        1);
}

TEST_CASE("kinematic degeneracies exit with the s-pole code") {
  KinConfig<ExactScalar> cfg = fixture_k3();
  cfg.particles[1].k = Vec3<ExactScalar>(ExactScalar(0), ExactScalar(1), ExactScalar(0));
  cfg.particles[1].eps = Vec3<ExactScalar>(ExactScalar(1), ExactScalar(0), ExactScalar(0));
  cfg.particles[1].eps_bar = cfg.particles[1].eps;
  cfg.particles[2].k = -(cfg.particles[0].k + cfg.particles[1].k);
  cfg.particles[2].eps = Vec3<ExactScalar>(ExactScalar(1), ExactScalar(-1), ExactScalar(0));
  cfg.particles[2].eps_bar = cfg.particles[2].eps;
  REQUIRE(field_traits<ExactScalar>::is_zero(mandelstam(cfg, Word{1, 2})));
  spit("cli_ut_deg.json", kinconfig_to_json(cfg).dump(2) + "\n");

  CHECK(run("compute amplitude -i cli_ut_deg.json -o - 2>/dev/null >/dev/null") == 3);
  CHECK(run("compute currents --theory cs --word 12 -i cli_ut_deg.json -o - 2>/dev/null >/dev/null") ==
        3);
}

TEST_CASE("IO and usage failures exit with code 1") {
  CHECK(run("compute amplitude -i cli_ut_does_not_exist.json 2>/dev/null") == 1);
  spit("cli_ut_garbage.json", "{ this is not json\n");
  CHECK(run("compute amplitude -i cli_ut_garbage.json 2>/dev/null") == 1);
  CHECK(run("verify --suite bogus 2>/dev/null >/dev/null") == 1);
  CHECK(run("2>/dev/null") == 1);  // a subcommand is required
  CHECK(run("--help >/dev/null") == 0);
}

TEST_CASE("verify writes a structured report") {
  CHECK(run("verify --suite shuffle --nmax 3 --seeds 1 -o cli_ut_rep.json 2>/dev/null") == 0);
  json j = json::parse(slurp("cli_ut_rep.json"));
  CHECK(j["mode"] == "exact");
  CHECK(j["nmax"] == 3);
  CHECK(j["seeds"] == 1);
  CHECK(j["pass"] == true);
  REQUIRE(j["suites"].size() == 1);
  CHECK(j["suites"][0]["name"] == "shuffle");
  CHECK(j["suites"][0]["pass"] == true);
  CHECK(j["suites"][0]["items"].size() > 0);
}

TEST_CASE("BGDC_MODE overrides the command-line mode") {
  CHECK(run_env("BGDC_MODE=float",
                "verify --suite kernel-inverse --nmax 3 --seeds 1 -o cli_ut_repf.json 2>/dev/null") ==
        0);
  json j = json::parse(slurp("cli_ut_repf.json"));
  CHECK(j["mode"] == "float");
  CHECK(j["pass"] == true);
}
