#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int code;
  std::string out; // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(HLPG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), out};
}

std::string corpus(const std::string& name) {
  return std::string(HLPG_CORPUS_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/" + name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  REQUIRE(out.good());
  out << content;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("check accepts the corpus") {
  auto r = run_cli("check " + corpus("as_sync.hlpg"));
  CHECK(r.code == 0);
  CHECK(r.out == "ok: game 'as_sync', 9 places, 9 transitions\n");

  auto rp = run_cli("check " + corpus("cm.hlpg") + " -P n=3 -P k=2");
  CHECK(rp.code == 0);
  CHECK(rp.out.find("ok: game 'cm'") != std::string::npos);
}

TEST_CASE("check rejects a malformed file with a positioned diagnostic") {
  auto path = write_temp("cli_broken.hlpg",
                         "game broken;\nplace P black kind sys;\n");
  auto r = run_cli("check " + path);
  CHECK(r.code == 1);
  CHECK(r.out.find(path + ":2:") != std::string::npos);
  CHECK(r.out.find("error") != std::string::npos);
}

TEST_CASE("a missing input file is an I/O failure") {
  auto r = run_cli("check /tmp/does_not_exist.hlpg");
  CHECK(r.code == 2);
  CHECK(r.out.find("cannot read") != std::string::npos);
}

TEST_CASE("instantiate prints the native net") {
  auto r = run_cli("instantiate " + corpus("as_sync.hlpg") + " -P n=2");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("petrigame as_sync(n=2)\n", 0) == 0);

  std::size_t places = 0, trans = 0;
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line)) {
    places += line.rfind("place ", 0) == 0;
    trans += line.rfind("trans ", 0) == 0;
  }
  CHECK(places == 17);
  CHECK(trans == 28);
}

TEST_CASE("instantiate writes other formats and files") {
  auto r = run_cli("instantiate " + corpus("as_sync.hlpg") + " -P n=1 -f pnml");
  CHECK(r.code == 0);
  CHECK(r.out.find("<pnml xmlns=") != std::string::npos);

  auto d = run_cli("instantiate " + corpus("as_sync.hlpg") + " -P n=1 -f dot");
  CHECK(d.code == 0);
  CHECK(d.out.rfind("digraph \"as_sync(n=1)\"", 0) == 0);

  auto out1 = run_cli("instantiate " + corpus("sr.hlpg") +
                      " -P n=1 -P k=1 -o /tmp/cli_sr1.net");
  CHECK(out1.code == 0);
  auto out2 = run_cli("instantiate " + corpus("sr.hlpg") +
                      " -P n=1 -P k=1 -o /tmp/cli_sr2.net");
  CHECK(out2.code == 0);
  CHECK(slurp("/tmp/cli_sr1.net") == slurp("/tmp/cli_sr2.net"));
  CHECK(slurp("/tmp/cli_sr1.net").rfind("petrigame sr(n=1,k=1)\n", 0) == 0);
}

TEST_CASE("parameter errors are input errors") {
  auto unbound = run_cli("instantiate " + corpus("as_sync.hlpg"));
  CHECK(unbound.code == 1);
  CHECK(unbound.out.find("not bound") != std::string::npos);

  auto zero = run_cli("instantiate " + corpus("as_sync.hlpg") + " -P n=0");
  CHECK(zero.code == 1);
  CHECK(zero.out.find("at least 1") != std::string::npos);

  auto broken = run_cli("instantiate " + corpus("as_sync.hlpg") + " -P n=two");
  CHECK(broken.code == 1);
  CHECK(broken.out.find("name=value") != std::string::npos);

  auto constr = run_cli("check " + corpus("cm.hlpg") + " -P n=2 -P k=2");
  CHECK(constr.code == 1);
  CHECK(constr.out.find("k < n") != std::string::npos);
}

TEST_CASE("reach reports the reachability figures as json") {
  auto r = run_cli("reach " + corpus("as_sync.hlpg") + " -P n=2 --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["markings"] == 91);
  CHECK(j["edges"] == 220);
  CHECK(j["depth"] == 6);
  CHECK(j["deadlocks"] == 5);
  CHECK(j["bad_reachable"] == true);
  CHECK(j["contact_free"] == true);
  CHECK(!j.contains("contact_witness"));
}

TEST_CASE("reach prints a human summary by default") {
  // minimal(n=2) by hand: Src={1,2}, Keep={{1}}; the six markings are the
  // (Src, Dst, Bad) shapes (12,-,-), (2,1,-), (1,2,-), (-,12,-), (1,-,2),
  // (-,1,2); swap[s={1}] self-loops everywhere, so no deadlock.
  auto r = run_cli("reach " + corpus("minimal.hlpg") + " -P n=2");
  CHECK(r.code == 0);
  CHECK(r.out == "markings: 6\n"
                 "edges: 13\n"
                 "depth: 3\n"
                 "deadlocks: 0\n"
                 "bad reachable: yes\n"
                 "contact free: yes\n");
}

TEST_CASE("limits end exploration with exit code 3") {
  auto r = run_cli("reach " + corpus("as_sync.hlpg") + " -P n=2 --max-states 10");
  CHECK(r.code == 3);
  CHECK(r.out.find("limit exceeded") != std::string::npos);

  auto v = run_cli("verify " + corpus("as_sync.hlpg") +
                   " -P n=2 --max-valuations 4");
  CHECK(v.code == 3);
}

TEST_CASE("verify confirms the correspondence") {
  auto r = run_cli("verify " + corpus("as_sync.hlpg") + " -P n=2 --samples 50");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "correspondence holds: 91 markings, 220 edges, 50 sampled markings\n");
}

TEST_CASE("an injected fault trips verification with exit code 4") {
  auto r = run_cli("verify " + corpus("as_sync.hlpg") +
                   " -P n=2 --samples 10 --inject-fault");
  CHECK(r.code == 4);
  CHECK(r.out.rfind("correspondence violated: ", 0) == 0);
}

TEST_CASE("a contact violation in exploration is an input error") {
  auto path = write_temp("cli_clash.hlpg",
                         "game clash;\n"
                         "place A : black kind env init {.};\n"
                         "place B : black kind sys init {.};\n"
                         "trans t { in A : .; out B : .; }\n");
  auto r = run_cli("reach " + path);
  CHECK(r.code == 1);
  CHECK(r.out.find("contact violation:") != std::string::npos);
}

TEST_CASE("bench reproduces the corpus byte for byte") {
  auto as = run_cli("bench as");
  CHECK(as.code == 0);
  CHECK(as.out == slurp(corpus("as_sync.hlpg")));

  auto seq = run_cli("bench as --variant seq");
  CHECK(seq.out == slurp(corpus("as_seq.hlpg")));

  auto cm = run_cli("bench cm");
  CHECK(cm.out == slurp(corpus("cm.hlpg")));

  auto sr = run_cli("bench sr");
  CHECK(sr.out == slurp(corpus("sr.hlpg")));
}

TEST_CASE("bench validates a binding when given one") {
  CHECK(run_cli("bench cm -P n=3 -P k=2").code == 0);
  auto bad = run_cli("bench cm -P n=2 -P k=2");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("k < n") != std::string::npos);
  CHECK(run_cli("bench xx").code != 0);
}

TEST_CASE("stats summarize and optionally explore") {
  auto r = run_cli("stats " + corpus("sr.hlpg") + " -P n=1 -P k=1 --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["name"] == "sr(n=1,k=1)");
  CHECK(j["places"] == 15);
  CHECK(j["transitions"] == 8);
  CHECK(!j.contains("reachable_markings"));

  auto e = run_cli("stats " + corpus("sr.hlpg") + " -P n=1 -P k=1 --json --reach");
  auto je = nlohmann::json::parse(e.out);
  CHECK(je["reachable_markings"] == 12);
  CHECK(je["one_safe"] == true);
  CHECK(je["contact_free"] == true);
  CHECK(je["bad_reachable"] == true);
}

TEST_CASE("dot renders the parametric game or, with parameters, the net") {
  auto hl = run_cli("dot " + corpus("as_sync.hlpg"));
  CHECK(hl.code == 0);
  CHECK(hl.out.rfind("digraph \"as_sync\"", 0) == 0);
  CHECK(hl.out.find("info -> P [label=\"N\"]") != std::string::npos);

  auto ll = run_cli("dot " + corpus("as_sync.hlpg") + " -P n=2");
  CHECK(ll.code == 0);
  CHECK(ll.out.rfind("digraph \"as_sync(n=2)\"", 0) == 0);
  CHECK(ll.out.find("Sys_1_") != std::string::npos);
}

TEST_CASE("unknown flags and subcommands are rejected") {
  CHECK(run_cli("reach " + corpus("as_sync.hlpg") + " --frobnicate").code != 0);
  CHECK(run_cli("explode").code != 0);
  CHECK(run_cli("").code != 0);
}

} // TEST_SUITE
