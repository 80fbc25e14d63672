#include "doctest.h"

#include "hlpg/benchmarks.hpp"
#include "hlpg/dsl.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace hlpg;

namespace {

std::string corpus_file(const std::string& name) {
  std::ifstream in(std::string(HLPG_CORPUS_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

HighLevelGame parsed(const std::string& source) {
  auto r = parse_game(source);
  for (const auto& d : r.diagnostics) INFO(d.text());
  REQUIRE(r.ok());
  return *r.game;
}

bool any_error_contains(const ParseResult& r, const std::string& fragment) {
  for (const auto& d : r.diagnostics)
    if (d.severity == Severity::Error &&
        d.message.find(fragment) != std::string::npos)
      return true;
  return false;
}

// One game exercising every surface construct in canonical form.
const char* kEverything = R"(game everything;

par n : nat;
par k : nat where k < n;

set N = {1..n};
set K = {1..k};
set E = { q | q in N, q != n };
set NN = N*N;
set D = { (i,i) | i in N };

var x : N;
var y : N;
var s : pow(E);

fun F : N -> pow(N) = x -> { q | q in N, q != x };

place Src : N kind env init all;
place Pair : NN kind sys;
place Store : pow(E) kind sys init {E};
place Sink : N kind sys bad;
place Tick : black kind env init {.};

trans move [x < n or x = n and not x = 1] { in Src : x; out Sink : x; }
trans pair { in Src : x; in Tick : .; out Pair : (x,y); }
trans keep { in Store : s; out Store : s; }
trans grow [(x,y) = (y,x)] { in Pair : (x,y); out Src : F(x); }
trans step [x + 1 = y] { in Src : x; out Src : x + 1; }
)";

} // namespace

TEST_SUITE("dsl") {

TEST_CASE("printing a parsed canonical file reproduces its bytes") {
  for (const char* name : {"as_sync.hlpg", "as_seq.hlpg", "cm.hlpg",
                           "sr.hlpg", "minimal.hlpg"}) {
    auto source = corpus_file(name);
    auto r = parse_game(source);
    REQUIRE(r.ok());
    CHECK(print_game(*r.game) == source);
  }
}

TEST_CASE("parse after print is the identity on games") {
  auto g = parsed(kEverything);
  auto again = parsed(print_game(g));
  CHECK(equal(g, again));
  CHECK(print_game(again) == print_game(g));
}

TEST_CASE("the printer emits canonical text for every declaration kind") {
  auto g = parsed(kEverything);
  auto text = print_game(g);
  CHECK(text.find("par k : nat where k < n;") != std::string::npos);
  CHECK(text.find("set E = { q | q in N, q != n };") != std::string::npos);
  CHECK(text.find("fun F : N -> pow(N) = x -> { q | q in N, q != x };") !=
        std::string::npos);
  CHECK(text.find("place Tick : black kind env init {.};") !=
        std::string::npos);
  CHECK(text.find("trans keep { in Store : s; out Store : s; }") !=
        std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("guards parse into the comparison structure") {
  auto g = parsed(corpus_file("as_sync.hlpg"));
  const auto& bot2 = g.transitions[g.transition_index("bot2")];
  REQUIRE(bot2.guard != nullptr);
  REQUIRE(bot2.guard->kind == Guard::Kind::Cmp);
  CHECK(bot2.guard->op == CmpOp::Ne);
  CHECK(bot2.guard->lhs->kind == Expr::Kind::Var);
  CHECK(bot2.guard->lhs->name == "b");
  CHECK(bot2.guard->rhs->name == "x");
}

TEST_CASE("connective precedence: not binds before and before or") {
  auto g = parsed(kEverything);
  const auto& guard = *g.transitions[g.transition_index("move")].guard;
  // x < n or (x = n and (not x = 1))
  REQUIRE(guard.kind == Guard::Kind::Or);
  CHECK(guard.a->kind == Guard::Kind::Cmp);
  REQUIRE(guard.b->kind == Guard::Kind::And);
  CHECK(guard.b->a->kind == Guard::Kind::Cmp);
  CHECK(guard.b->b->kind == Guard::Kind::Not);
}

TEST_CASE("parenthesized tuples compare, parenthesized guards group") {
  auto g = parsed(kEverything);
  const auto& cmp = *g.transitions[g.transition_index("grow")].guard;
  REQUIRE(cmp.kind == Guard::Kind::Cmp);
  CHECK(cmp.lhs->kind == Expr::Kind::Tuple);

  auto h = parsed(
      "game p; set N = {1..3}; var x : N;\n"
      "place A : N kind env init all;\n"
      "trans t [(x = 1 or x = 2) and not x = 3] { in A : x; }\n");
  const auto& guard = *h.transitions[0].guard;
  REQUIRE(guard.kind == Guard::Kind::And);
  CHECK(guard.a->kind == Guard::Kind::Or);
}

TEST_CASE("a literal true guard is dropped") {
  auto g = parsed(
      "game t; set N = {1..2}; var x : N;\n"
      "place A : N kind env init all;\n"
      "trans t [true] { in A : x; }\n");
  CHECK(g.transitions[0].guard == nullptr);
  CHECK(print_game(g).find("[") == std::string::npos);
}

TEST_CASE("set difference desugars to a fresh-variable comprehension") {
  auto g = parsed(
      "game d; par n : nat; set N = {1..n}; var x : N;\n"
      "place A : N kind env init all; place B : pow(N) kind sys;\n"
      "trans t { in A : x; out B : N \\ {x}; }\n");
  const auto& arc = *g.transitions[0].post[0].expr;
  REQUIRE(arc.kind == Expr::Kind::Comprehension);
  CHECK(text(arc) == "{ q | q in N, q != x }");
  CHECK(equal(arc, *set_minus(set_ref("N"), {mk_var("x")})));

  // Multiple removals chain conjunctions; a clashing name steps to q0.
  auto h = parsed(
      "game d; par n : nat; set N = {1..n}; var q : N;\n"
      "place A : N kind env init all; place B : pow(N) kind sys;\n"
      "trans t { in A : q; out B : N \\ {q, 1}; }\n");
  const auto& arc2 = *h.transitions[0].post[0].expr;
  CHECK(text(arc2) == "{ q0 | q0 in N, q0 != q and q0 != 1 }");
}

TEST_CASE("grouped declarations expand to singles") {
  auto g = parsed(
      "game grp; par n, k : nat where k < n;\n"
      "set N = {1..n};\n"
      "var x, y, z : N;\n"
      "place A : N kind env init all;\n"
      "trans t { in A : x; out A : x; }\n");
  REQUIRE(g.params.size() == 2);
  CHECK(g.params[0].constraint == nullptr);
  REQUIRE(g.params[1].constraint != nullptr); // where binds the whole group
  CHECK(text(*g.params[1].constraint) == "k < n");
  REQUIRE(g.vars.size() == 3);
  CHECK(g.vars[0].name == "x");
  CHECK(g.vars[2].name == "z");
  CHECK(equal(*g.vars[0].type, *g.vars[2].type));

  // The canonical printer writes one declaration per line.
  auto text = print_game(g);
  CHECK(text.find("var x : N;\nvar y : N;\nvar z : N;") != std::string::npos);
}

TEST_CASE("primed identifiers are ordinary names") {
  auto g = parsed(
      "game pr; set N = {1..2}; var x' : N;\n"
      "place A : N kind env init all;\n"
      "trans t { in A : x'; }\n");
  CHECK(g.vars[0].name == "x'");
  CHECK(g.transitions[0].pre[0].expr->name == "x'");
}

TEST_CASE("comments and layout never change the game") {
  auto plain = parsed(
      "game c; set N = {1..2}; var x : N;\n"
      "place A : N kind env init all;\n"
      "trans t { in A : x; }\n");
  auto noisy = parsed(
      "// header comment\n"
      "game c; // trailing\n"
      "set N = {1..2};\n\n\n"
      "var x\n  : N;\n"
      "place A : N kind env\n  init all; // flags\n"
      "trans t {\n  in A : x;\n}\n");
  CHECK(equal(plain, noisy));
}

TEST_CASE("an empty source reports a single missing-game diagnostic") {
  for (const char* src : {"", "   \n\n", "// only a comment\n"}) {
    auto r = parse_game(src);
    CHECK(!r.ok());
    CHECK(any_error_contains(r, "no game declared"));
  }
}

TEST_CASE("syntax errors carry line and column") {
  auto r = parse_game("game g;\nplace P black kind sys init {.};\n");
  CHECK(!r.ok());
  REQUIRE(!r.diagnostics.empty());
  CHECK(r.diagnostics[0].line == 2);
  CHECK(r.diagnostics[0].col > 1);
  CHECK(r.diagnostics[0].text().find("2:") == 0);
  CHECK(r.diagnostics[0].text().find("error:") != std::string::npos);
}

TEST_CASE("the parser recovers and reports several errors at once") {
  auto r = parse_game(
      "game g;\n"
      "set N = {2..5};\n"
      "var x : N;\n"
      "place A : N kind env init 7 8;\n"
      "trans t { in A : x; }\n");
  CHECK(!r.ok());
  CHECK(any_error_contains(r, "range lower bound must be 1"));
  std::size_t errors = 0;
  for (const auto& d : r.diagnostics) errors += d.severity == Severity::Error;
  CHECK(errors >= 2);
}

TEST_CASE("numeric literals beyond 18 digits are rejected") {
  auto r = parse_game(
      "game big; set N = {1..1000000000000000000000};\n"
      "place A : N kind env init all;\n");
  CHECK(!r.ok());
  CHECK(any_error_contains(r, "integer literal too large"));
}

TEST_CASE("stray characters are reported, not skipped silently") {
  auto r = parse_game("game g; set N = {1..2}; ? place A : N kind env init all;\n");
  CHECK(!r.ok());
  CHECK(any_error_contains(r, "'?'"));
}

TEST_CASE("semantic problems surface through the same diagnostics") {
  // Structurally fine, but the arc names an undeclared place.
  auto r = parse_game(
      "game g; set N = {1..2}; var x : N;\n"
      "place A : N kind env init all;\n"
      "trans t { in Q : x; }\n");
  CHECK(r.game.has_value()); // it parsed
  CHECK(!r.ok());
  CHECK(any_error_contains(r, "undeclared place 'Q'"));

  // Type errors are appended after structural validation passes.
  auto t = parse_game(
      "game g; set N = {1..2}; var x : N;\n"
      "place A : N kind env init all;\n"
      "trans t { in A : .; }\n");
  CHECK(!t.ok());
}

TEST_CASE("keywords cannot name declarations") {
  auto r = parse_game("game trans;\n");
  CHECK(!r.ok());

  auto s = parse_game(
      "game g; set in = {1..2}; place A : in kind env init all;\n");
  CHECK(!s.ok());
}

TEST_CASE("positionless diagnostics print without a location prefix") {
  ParseDiagnostic d;
  d.message = "something";
  CHECK(d.text() == "error: something");
  ParseDiagnostic w{3, 7, Severity::Warning, "odd"};
  CHECK(w.text() == "3:7: warning: odd");
}

} // TEST_SUITE
