// End-to-end tests of the command-line tool: spawns the real binary (path
// injected at compile time), captures stdout and exit codes, and checks
// formats, exit-code conventions, and output determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using json = nlohmann::ordered_json;

#ifndef TRACEFORM_CLI_PATH
#error "TRACEFORM_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs a full shell command and captures its stdout and exit code.
// Commands in this file are fixed strings, never user input.
RunResult run_raw(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), got);
  }
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Runs the CLI binary with the given argument string.
RunResult run(const std::string& args, bool merge_stderr = false) {
  return run_raw(std::string(TRACEFORM_CLI_PATH) + " " + args +
                 (merge_stderr ? " 2>&1" : " 2>/dev/null"));
}

json run_json(const std::string& args, int expect_exit = 0) {
  RunResult r = run(args + " --format json");
  REQUIRE(r.exit_code == expect_exit);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("help exits zero and names every subcommand") {
  RunResult r = run("--help", true);
  CHECK(r.exit_code == 0);
  for (const char* sub : {"rootsys", "index", "irrep", "ng", "eg", "classify",
                          "table1", "verify"}) {
    CAPTURE(sub);
    CHECK(r.out.find(sub) != std::string::npos);
  }
}

TEST_CASE("root system summary") {
  json j = run_json("rootsys G 2");
  CHECK(j["command"] == "rootsys");
  CHECK(j["type"] == "G");
  CHECK(j["roots"] == 12);
  CHECK(j["weyl_order"] == "12");

  RunResult text = run("rootsys E 8");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("roots: 240") != std::string::npos);

  CHECK(run("rootsys Z 3").exit_code == 1);
  CHECK(run("rootsys E 9").exit_code == 1);
}

TEST_CASE("orbit index of a weight") {
  json zero = run_json("index A 1 0");
  CHECK(zero["orbit_index"] == "0");
  CHECK(zero["orbit_size"] == "1");

  json theta = run_json("index A 2 1 1");
  CHECK(theta["orbit_index"] == "6");
  CHECK(theta["orbit_size"] == "6");

  // Bracketed coordinate spellings are tolerated.
  json bracketed = run_json("index A 2 [1,1]");
  CHECK(bracketed["orbit_index"] == "6");

  CHECK(run("index A 2 1").exit_code == 1);       // wrong length
  CHECK(run("index A 2 1 x").exit_code == 1);     // not an integer
  CHECK(run("index A 2 1 1 1").exit_code == 1);   // too long
}

TEST_CASE("irreducible representation data") {
  json adj = run_json("irrep E 8 0 0 0 0 0 0 0 1");
  CHECK(adj["dimension"] == "248");
  CHECK(adj["index"] == "60");

  json nat = run_json("irrep A 3 1 0 0");
  CHECK(nat["dimension"] == "4");
  CHECK(nat["index"] == "1");

  // The environment cap turns large searches into clean failures.
  RunResult capped = run_raw("env TRACEFORM_ORBIT_CAP=10 " TRACEFORM_CLI_PATH
                             " irrep E 8 0 0 0 0 0 0 0 1 2>&1");
  CHECK(capped.exit_code == 1);
  CHECK(capped.out.find("cap") != std::string::npos);

  RunResult badcap = run_raw("env TRACEFORM_ORBIT_CAP=abc " TRACEFORM_CLI_PATH
                             " irrep A 1 2 2>&1");
  CHECK(badcap.exit_code == 1);
}

TEST_CASE("group index with stabilization exit codes") {
  json j = run_json("ng PGL2");
  CHECK(j["group"] == "SL2/mu2");
  CHECK(j["group_index"] == "4");
  CHECK(j["stabilized"] == true);

  // Unstabilized scans exit with the dedicated code but still report.
  RunResult r = run("ng PGL2 --bound 1 --format json");
  CHECK(r.exit_code == 2);
  json partial = json::parse(r.out);
  CHECK(partial["stabilized"] == false);

  CHECK(run("ng Bogus9").exit_code == 1);
}

TEST_CASE("normalization constants") {
  json e = run_json("eg SL4/mu2");
  CHECK(e["E"] == "1");
  json eq = run_json("eg PGL2 --quadratic");
  CHECK(eq["Eq"] == "4");
  json sp = run_json("eg Sp10");
  CHECK(sp["E"] == "1");
}

TEST_CASE("classification of a characteristic") {
  json e8 = run_json("classify E8 --char 5");
  CHECK(e8["exists_nonzero"] == false);
  CHECK(e8["exists_nondegenerate"] == false);
  CHECK(e8["provenance"] == "computed");

  json sp = run_json("classify Sp6 --char 2");
  CHECK(sp["exists_nonzero"] == true);
  CHECK(sp["exists_nondegenerate"] == false);

  json zero = run_json("classify E6ad --char 0");
  CHECK(zero["exists_nonzero"] == true);
  CHECK(zero["exists_nondegenerate"] == true);

  json psp = run_json("classify PSp6 --char 2");
  CHECK(psp["exists_nonzero"] == false);

  CHECK(run("classify G2 --char 4").exit_code == 1);
  CHECK(run("classify G2 --char -3").exit_code == 1);
}

TEST_CASE("twisted classification goes through the published table") {
  json so = run_json("classify SO10 --char 2 --twist 2");
  CHECK(so["twisted_type"] == "2D5");
  CHECK(so["simply_connected"] == false);
  CHECK(so["degenerate_always"] == true);
  CHECK(so["zero_always"] == true);
  CHECK(so["provenance"] == "published-table lookup");

  // Simply connected: the zero question is out of scope (null).
  json spin = run_json("classify Spin10 --char 2 --twist 2");
  CHECK(spin["zero_always"].is_null());
  CHECK(spin["degenerate_always"] == true);

  // Outer type A with n odd: 2 | 2n even though 2 does not divide n.
  json sl5 = run_json("classify SL5 --char 2 --twist 2");
  CHECK(sl5["twisted_type"] == "2A4");
  CHECK(sl5["degenerate_always"] == true);
  CHECK(sl5["zero_always"].is_null());

  // Split marker twist = 1 also answers from the table.
  json e7 = run_json("classify E7ad --char 3 --twist 1");
  CHECK(e7["degenerate_always"] == true);
  CHECK(e7["zero_always"] == true);

  CHECK(run("classify G2 --char 2 --twist 3").exit_code == 1);
}

TEST_CASE("json output round-trips byte-identically") {
  for (const char* args :
       {"rootsys F 4", "index C 3 1 0 2", "irrep A 2 1 1", "ng E6ad",
        "eg HSpin12", "classify Spin7 --char 2", "table1 --max-rank 4",
        "verify --suite appendix"}) {
    CAPTURE(args);
    RunResult r = run(std::string(args) + " --format json");
    REQUIRE(r.exit_code == 0);
    json parsed = json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("classification table output") {
  RunResult csv = run("table1 --max-rank 6 --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.out.rfind(
            "family,params,N,E,ratio_primes,degenerate_primes,zero_primes,"
            "flags\n",
            0) == 0);
  CHECK(csv.out.find("SL,n=4;m=2,2,1,2,2,2,stabilized") != std::string::npos);
  CHECK(csv.out.find("PSp,n=6,4,2,2,2,2,stabilized") != std::string::npos);
  CHECK(csv.out.find("E6,ad,6,3,2,2;3,2,stabilized") != std::string::npos);
  CHECK(csv.out.find("G2,,2,1,2,2;3,2,stabilized") != std::string::npos);

  json wrapped = run_json("table1 --max-rank 6");
  CHECK(wrapped["command"] == "table1");
  REQUIRE(wrapped["rows"].is_array());
  CHECK(wrapped["rows"].size() > 15);
  for (const auto& row : wrapped["rows"]) {
    CHECK(row["stabilized"] == true);
    CHECK(row["ratio_primes"] == row["zero_primes"]);
  }

  // Text format renders one aligned row per record plus a header.
  RunResult text = run("table1 --max-rank 4");
  REQUIRE(text.exit_code == 0);
  CHECK(text.out.find("family") != std::string::npos);
  CHECK(text.out.find("inconclusive") == std::string::npos);
}

TEST_CASE("full table is deterministic across runs") {
  RunResult a = run("table1 --max-rank 12 --format csv");
  RunResult b = run("table1 --max-rank 12 --format csv");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("HSpin,n=12,4,2,2,2,2,stabilized") != std::string::npos);
  CHECK(a.out.find("E8,,60,1,2;3;5,2;3;5,2;3;5,stabilized") !=
        std::string::npos);
  CHECK(a.out.find("Spin,n=7,2,1,2,2,2,stabilized") != std::string::npos);
}

TEST_CASE("verification suites run through the CLI") {
  RunResult trace = run("verify --suite trace");
  CHECK(trace.exit_code == 0);
  CHECK(trace.out.find("PASS sl5_adjoint_gram") != std::string::npos);
  CHECK(trace.out.find("FAIL") == std::string::npos);

  json all = run_json("verify --suite all");
  CHECK(all["passed"] == true);
  CHECK(all["checks"].size() > 30);

  CHECK(run("verify --suite bogus").exit_code == 1);
}

TEST_CASE("invalid invocations exit with code one") {
  CHECK(run("frobnicate", true).exit_code == 1);
  CHECK(run("", true).exit_code == 1);  // a subcommand is required
  CHECK(run("ng", true).exit_code == 1);
  CHECK(run("classify E8", true).exit_code == 1);  // --char is required
  CHECK(run("table1 --max-rank 1", true).exit_code == 1);
  CHECK(run("table1 --max-rank 99", true).exit_code == 1);
  CHECK(run("rootsys G 2 --format yaml", true).exit_code == 1);
}
