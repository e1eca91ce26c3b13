#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include "fixtures.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
RunResult run(const std::string& args) {
  std::string cmd = std::string(INSTKIT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 512> buffer;
  while (fgets(buffer.data(), buffer.size(), pipe)) r.out += buffer.data();
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& name) { return fixtures::path(name); }

}  // namespace

TEST_CASE("check commands exit 0 on lawful documents") {
  for (const std::string sub : {"category", "institution", "galois"}) {
    RunResult r = run("check " + sub + " " + fx("twoval.inst.json"));
    CAPTURE(sub);
    CAPTURE(r.out);
    CHECK(r.code == 0);
    CHECK(r.out == "PASS (0 violations)\n");
  }
}

TEST_CASE("apply F then check pi round-trips through files") {
  std::string pi_path = "/tmp/instkit_cli_twoval.pi.json";
  RunResult fr = run("apply F " + fx("twoval.inst.json") + " -o " + pi_path);
  CHECK(fr.code == 0);
  RunResult cr = run("check pi " + pi_path);
  CHECK(cr.code == 0);
  RunResult ar = run("adjunction fg-identity " + pi_path);
  CHECK(ar.code == 0);
  RunResult ur = run("adjunction unit " + pi_path);
  CHECK(ur.code == 0);

  std::string inst_path = "/tmp/instkit_cli_twoval.gf.inst.json";
  RunResult gr = run("apply G " + pi_path + " -o " + inst_path);
  CHECK(gr.code == 0);
  RunResult vr = run("check institution " + inst_path);
  CHECK(vr.code == 0);
}

TEST_CASE("violations exit 1 with a report") {
  RunResult r = run("logic check-morphism " + fx("swap.trans.json") + " " +
                    fx("andnot2.logic.json") + " " + fx("ornot2.logic.json"));
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") == 0);
  CHECK(r.out.find("logic-morphism") != std::string::npos);

  RunResult ok = run("logic check-morphism " + fx("demorgan.trans.json") +
                     " " + fx("cpl1.logic.json") + " " +
                     fx("ornot3.logic.json"));
  CHECK(ok.code == 0);
}

TEST_CASE("usage and parse problems exit 2") {
  CHECK(run("check institution /tmp/instkit_no_such_file.json").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("check institution " + fx("cpl1.logic.json")).code == 2);
}

TEST_CASE("resource bounds exit 3") {
  RunResult r =
      run("apply F " + fx("rename.inst.json") + " --cap 1 -o /tmp/x.json");
  CHECK(r.code == 3);
}

TEST_CASE("reports are byte-identical across runs and respect --format") {
  std::string args = "check galois " + fx("rename.inst.json");
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.out == b.out);

  RunResult j = run(args + " --format json");
  CHECK(j.code == 0);
  CHECK(j.out.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("closure and generate subcommands") {
  std::string pi_path = "/tmp/instkit_cli_closure.pi.json";
  REQUIRE(run("apply F " + fx("twoval.inst.json") + " -o " + pi_path).code ==
          0);
  RunResult r = run("closure " + pi_path + " S0 b");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"a\"") != std::string::npos);
  CHECK(r.out.find("\"b\"") != std::string::npos);

  RunResult lc = run("logic closure " + fx("cpl1.logic.json") + " p");
  CHECK(lc.code == 0);
  CHECK(lc.out.find("and(p,p)") != std::string::npos);

  std::string gen_path = "/tmp/instkit_cli_gen.inst.json";
  REQUIRE(run("generate institution --seed 5 -o " + gen_path).code == 0);
  CHECK(run("check institution " + gen_path).code == 0);
}
