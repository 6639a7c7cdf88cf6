// end-to-end checks against the installed binary; CLASPER_BIN is set by ctest
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("CLASPER_BIN");
  if (!bin) FAIL("CLASPER_BIN is not set");
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) FAIL("popen failed");
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

const char* kLeafGadget =
    "'{\"format\":\"clasper.v1\",\"constituents\":["
    "{\"id\":0,\"kind\":\"disk-leaf\",\"strands\":[1]},"
    "{\"id\":1,\"kind\":\"disk-leaf\",\"strands\":[2]},"
    "{\"id\":2,\"kind\":\"box\",\"output\":0},"
    "{\"id\":3,\"kind\":\"leaf\"}],"
    "\"edges\":[{\"a\":[0,0],\"b\":[2,1],\"half_twists\":1},"
    "{\"a\":[1,0],\"b\":[2,2]},"
    "{\"a\":[2,0],\"b\":[3,0],\"half_twists\":2}]}'";

}  // namespace

TEST_CASE("documented examples print the documented answers") {
  RunResult d0 = run("dim --skeleton circle --degree 0 --relations 1t,stu");
  CHECK(d0.code == 0);
  CHECK(d0.out == "1\n");

  RunResult mu = run(
      "mu --braid '{\"strands\":2,\"word\":[1,1]}' --index 2,1");
  CHECK(mu.code == 0);
  CHECK(mu.out == "1\n");

  RunResult a2 = run("a2 --builtin trefoil-r");
  CHECK(a2.code == 0);
  CHECK(a2.out == "1\n");
  RunResult a2s = run("a2 --builtin trefoil-r --route skein");
  CHECK(a2s.code == 0);
  CHECK(a2s.out == "1\n");
}

TEST_CASE("dimension queries in both presentations") {
  RunResult chords = run("dim --skeleton circle --degree 2 --relations 1t,4t");
  CHECK(chords.code == 0);
  CHECK(chords.out == "1\n");
  RunResult both = run("dim --skeleton circle --degree 2");
  CHECK(both.code == 0);
  CHECK(both.out == "1\n");
  // mixing the presentations is a usage error
  CHECK(run("dim --skeleton circle --degree 2 --relations 1t,stu,4t").code == 2);
  CHECK(run("dim --skeleton nowhere --degree 2").code == 2);

  RunResult basis = run(
      "dim --skeleton circle --degree 2 --relations 1t,4t "
      "--emit-basis /tmp/cwb_cli_basis.txt");
  CHECK(basis.code == 0);
  std::ifstream in("/tmp/cwb_cli_basis.txt");
  REQUIRE(in.good());
  int lines = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++lines;
  CHECK(lines == 2);  // the two 2-chord diagrams span the degree-2 piece
}

TEST_CASE("polynomial and table output formats") {
  RunResult c = run("conway --builtin figure8");
  CHECK(c.code == 0);
  CHECK(c.out == "[1,0,-1]\n");

  RunResult t = run(
      "mu-table --braid '{\"strands\":2,\"word\":[1,1]}' --maxlen 2");
  CHECK(t.code == 0);
  CHECK(t.out.find("1,2: 1") != std::string::npos);
  CHECK(t.out.find("2,1: 1") != std::string::npos);

  RunResult j = run("--json a2 --builtin figure8");
  CHECK(j.code == 0);
  CHECK(j.out.find("\"a2\": -1") != std::string::npos);
}

TEST_CASE("braid subcommands compose") {
  RunResult triv = run(
      "braid-trivial --braid '{\"strands\":3,\"word\":[1,2,1,-2,-1,-2]}'");
  CHECK(triv.code == 0);
  CHECK(triv.out == "true\n");

  RunResult non = run(
      "braid-trivial --braid '{\"strands\":2,\"word\":[1,1]}'");
  CHECK(non.code == 0);
  CHECK(non.out == "false\n");

  RunResult bing = run("bing --k 1");
  CHECK(bing.code == 0);
  CHECK(bing.out.find("\"strands\": 4") != std::string::npos);
}

TEST_CASE("exit codes separate malformed input from domain errors") {
  CHECK(run("a2 --in '{bad'").code == 2);
  CHECK(run("conway --builtin nosuch").code == 1);
  CHECK(run("decide-ck --a trefoil-r --b unknot --k 4").code == 1);
  CHECK(run("decide-ck --a trefoil-r --b unknot --k 3").out == "false\n");
  CHECK(run("decide-ck --a granny --b square --k 3").out == "true\n");
  CHECK(run("--nope").code == 2);
  CHECK(run("").code == 2);
  // braid letters out of range are malformed input, not a domain failure
  CHECK(run("mu --braid '{\"strands\":2,\"word\":[7]}' --index 2,1").code == 2);
}

TEST_CASE("clasper graphs round-trip through zip") {
  std::string gadget = kLeafGadget;
  RunResult ok = run("validate-clasper --in " + gadget);
  CHECK(ok.code == 0);
  CHECK(ok.out == "valid\n");

  // a leaf with an unfilled slot is structurally invalid
  RunResult bad = run(
      "validate-clasper --in '{\"format\":\"clasper.v1\","
      "\"constituents\":[{\"id\":0,\"kind\":\"leaf\"}],\"edges\":[]}'");
  CHECK(bad.code == 1);
  CHECK(!bad.out.empty());

  RunResult zipped = run("zip --in " + gadget + " --marking '[[2,1]]'");
  CHECK(zipped.code == 0);
  {
    std::ofstream out("/tmp/cwb_cli_zip.json");
    REQUIRE(out.good());
    out << zipped.out;
  }
  RunResult revalidated = run("validate-clasper --in /tmp/cwb_cli_zip.json");
  CHECK(revalidated.code == 0);
  CHECK(revalidated.out == "valid\n");

  RunResult marked_wrong = run("zip --in " + gadget + " --marking '[[2,0]]'");
  CHECK(marked_wrong.code == 1);
}

TEST_CASE("the acceptance harness is deterministic per seed") {
  RunResult first = run("verify --seed 7 --budget quick");
  CHECK(first.code == 0);
  CHECK(first.out.find("RESULT: PASS (8/8)") != std::string::npos);
  CHECK(first.out.find("seed=7") != std::string::npos);
  RunResult second = run("verify --seed 7 --budget quick");
  CHECK(second.out == first.out);
}
