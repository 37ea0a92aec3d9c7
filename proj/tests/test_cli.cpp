#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "sgt/generators.hpp"
#include "sgt/signed_graph.hpp"

#ifndef SGT_CLI_PATH
#error "SGT_CLI_PATH must point at the command line binary"
#endif

namespace {

const std::string kCli = std::string("\"") + SGT_CLI_PATH + "\"";

struct CmdResult {
  int exitCode = -1;
  std::string out;
};

CmdResult runCmd(const std::string& cmd) {
  const std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t countSub(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("gen piped into nullity") {
  auto r = runCmd(kCli + " gen cycle n=4 sign=+ | " + kCli + " nullity -");
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("n 4") != std::string::npos);
  CHECK(r.out.find("rank 2") != std::string::npos);
  CHECK(r.out.find("eta 2") != std::string::npos);
}

TEST_CASE("gen piped into bound") {
  auto r = runCmd(kCli + " gen theta p=4 q=4 l=4 signs=++ | " + kCli + " bound -");
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("case p0_shared_cycles") != std::string::npos);
  CHECK(r.out.find("bound 3") != std::string::npos);
  CHECK(r.out.find("eta 3") != std::string::npos);
  CHECK(r.out.find("slack 0") != std::string::npos);
}

TEST_CASE("classify reports the extremal form") {
  auto r = runCmd(kCli + " gen cycle n=4 sign=+ | " + kCli + " classify -");
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("form cycle_union") != std::string::npos);
  CHECK(r.out.find("cycle + 0 1 2 3") != std::string::npos);
}

TEST_CASE("reduce prints the trace and the residual graph") {
  auto r = runCmd(kCli + " gen path n=6 | " + kCli + " reduce -");
  CHECK(r.exitCode == 0);
  CHECK(countSub(r.out, "pendant_pair_delete") == 3);
  CHECK(r.out.find("# reduced graph") != std::string::npos);
  CHECK(r.out.find("n 0") != std::string::npos);
}

TEST_CASE("reduce writes the residual graph to a file") {
  auto r = runCmd(kCli + " gen cycle n=8 sign=+ | " + kCli + " reduce - -o cli_reduced.txt");
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("p6_contract") != std::string::npos);
  CHECK(r.out.find("# reduced graph") == std::string::npos);
  std::ifstream in("cli_reduced.txt");
  REQUIRE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(sgt::parseGraph(text) == sgt::cycleGraph(4, 1));
  std::remove("cli_reduced.txt");
}

TEST_CASE("multiplicity at exact rationals") {
  auto gen = runCmd(kCli + " gen cycle n=4 sign=+ -o cli_c4.txt");
  REQUIRE(gen.exitCode == 0);

  auto zero = runCmd(kCli + " multiplicity cli_c4.txt 0");
  CHECK(zero.exitCode == 0);
  CHECK(zero.out.find("multiplicity 2") != std::string::npos);

  auto two = runCmd(kCli + " multiplicity cli_c4.txt 2");
  CHECK(two.exitCode == 0);
  CHECK(two.out.find("multiplicity 1") != std::string::npos);

  auto half = runCmd(kCli + " multiplicity cli_c4.txt 1/2");
  CHECK(half.exitCode == 0);
  CHECK(half.out.find("multiplicity 0") != std::string::npos);

  auto decimal = runCmd(kCli + " multiplicity cli_c4.txt 0.5");
  CHECK(decimal.exitCode == 2);

  std::remove("cli_c4.txt");
}

TEST_CASE("invariants summary") {
  auto r = runCmd(kCli + " gen infty p=3 q=4 l=2 signs=++ | " + kCli + " invariants -");
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("order 7") != std::string::npos);
  CHECK(r.out.find("components 1") != std::string::npos);
  CHECK(r.out.find("cyclomatic 2") != std::string::npos);
  CHECK(r.out.find("pendants 0") != std::string::npos);
  CHECK(r.out.find("cycle_disjoint true") != std::string::npos);
  CHECK(countSub(r.out, "block cycle") == 2);
  CHECK(countSub(r.out, "block bridge") == 1);
}

TEST_CASE("verify subcommand") {
  auto r = runCmd(kCli + " verify --min-n 2 --max-n 3 --props core,linalg.path-closed-form" +
                  " --key-value");
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("property core.roundtrip") != std::string::npos);
  CHECK(r.out.find("property linalg.path-closed-form") != std::string::npos);
  CHECK(r.out.find("total_violations 0") != std::string::npos);

  auto unknown = runCmd(kCli + " verify --props no.such.property");
  CHECK(unknown.exitCode == 2);
}

TEST_CASE("failure exit codes") {
  CHECK(runCmd(kCli + " nullity /does/not/exist.txt").exitCode == 2);
  CHECK(runCmd(kCli + " bogus").exitCode == 1);
  CHECK(runCmd(kCli).exitCode == 1);
  CHECK(runCmd(kCli + " --help").exitCode == 0);
  CHECK(runCmd(kCli + " gen mystery n=1").exitCode == 2);
  CHECK(runCmd("echo garbage | " + kCli + " nullity -").exitCode == 2);
}
