// End-to-end checks of the command line tool. Each test shells out to the
// built binary (path injected by the build) and inspects exit code and
// captured output.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include "cpulse/document.hpp"

namespace {

struct CmdResult {
  int code = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string capture =
      (std::filesystem::temp_directory_path() / ("cpulse_cli_" + std::to_string(counter++)))
          .string();
  const std::string cmd = std::string(CPULSE_CLI_PATH) + " " + args + " >" + capture + " 2>&1";
  const int raw = std::system(cmd.c_str());
  CmdResult r;
  r.code = WEXITSTATUS(raw);
  std::ifstream is(capture);
  std::ostringstream buf;
  buf << is.rdbuf();
  r.out = buf.str();
  std::remove(capture.c_str());
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("generate emits a loadable document") {
  const std::string path = temp_path("cli_asym5.json");
  const CmdResult r = run_cli("generate --family asym --n 5 --out " + path);
  REQUIRE(r.code == 0);
  const cpulse::SequenceDocument doc = cpulse::load_document(path);
  CHECK(doc.sequence.label == "asym-half-pi N=5");
  CHECK(doc.sequence.pulses.size() == 5);
  REQUIRE(doc.metadata.family.has_value());
  CHECK(*doc.metadata.family == "asym");

  // to stdout as well
  const CmdResult s = run_cli("generate --family bb1 --theta-pi 0.5");
  CHECK(s.code == 0);
  CHECK(s.out.find("\"schema_version\": 1") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("profile writes the documented CSV") {
  const std::string path = temp_path("cli_sym3.json");
  REQUIRE(run_cli("generate --family sym --n 3 --out " + path).code == 0);
  const CmdResult r = run_cli("profile --in " + path + " --points 5");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("eps,probability\n", 0) == 0);
  CHECK(r.out.find("\n0,0.5\n") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("series reports the asymptotic coefficient") {
  const std::string path = temp_path("cli_asym2.json");
  REQUIRE(run_cli("generate --family asym --n 2 --out " + path).code == 0);
  const CmdResult r = run_cli("series --in " + path + " --order 3");
  CHECK(r.code == 0);
  // c3 = (pi/2)^3 / 2
  const std::size_t pos = r.out.rfind("3,");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(r.out.substr(pos + 2)) == doctest::Approx(1.9378922925).epsilon(1e-9));
  std::remove(path.c_str());
}

TEST_CASE("solve prints converged branches") {
  const CmdResult r = run_cli("solve --pulses 2 --p-target 0.5 --restarts 8");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# branch order residual phases/pi\n", 0) == 0);
  CHECK(r.out.find("\n0 2 ") != std::string::npos);

  // zero starts cannot converge
  const CmdResult none = run_cli("solve --pulses 2 --p-target 0.5 --restarts 0");
  CHECK(none.code == 3);
}

TEST_CASE("verify-table passes on the shipped catalog") {
  const CmdResult r = run_cli("verify-table --pulses 2 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("table verification passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("window reports closed-form and numeric results") {
  const CmdResult need = run_cli("window --family asym --eps-req 0.2 --tol 1e-4");
  CHECK(need.code == 0);
  CHECK(need.out.find("min_pulses=5") != std::string::npos);

  const std::string path = temp_path("cli_asym5w.json");
  REQUIRE(run_cli("generate --family asym --n 5 --out " + path).code == 0);
  const CmdResult num = run_cli("window --in " + path + " --tol 1e-4");
  CHECK(num.code == 0);
  CHECK(num.out.find("half_width=0.25377382") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("compare ranks sequences by worst-case deviation") {
  const std::string a = temp_path("cli_cmp_a.json");
  const std::string b = temp_path("cli_cmp_b.json");
  REQUIRE(run_cli("generate --family bb1 --theta-pi 0.5 --out " + a).code == 0);
  REQUIRE(run_cli("generate --family asym --n 5 --out " + b).code == 0);
  const CmdResult r = run_cli("compare --in " + a + " --in " + b);
  CHECK(r.code == 0);
  CHECK(r.out.rfind("label,p_center,max_abs_deviation\n", 0) == 0);
  CHECK(r.out.find("bb1") != std::string::npos);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("invalid input maps to exit code 2") {
  CHECK(run_cli("generate --family nope").code == 2);
  CHECK(run_cli("generate").code == 2);                       // missing required flag
  CHECK(run_cli("profile --in /nonexistent.json").code == 2);  // unreadable document
  CHECK(run_cli("").code == 2);                               // missing subcommand
  CHECK(run_cli("generate --family prime3 --p-target 1.7").code == 2);
}
