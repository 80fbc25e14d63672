#include "doctest.h"

#include "hlpg/benchmarks.hpp"
#include "hlpg/semantics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace hlpg;

namespace {

ParamEnv env_n(std::int64_t n) {
  ParamEnv e;
  e.values["n"] = n;
  return e;
}

ParamEnv env_nk(std::int64_t n, std::int64_t k) {
  ParamEnv e;
  e.values["n"] = n;
  e.values["k"] = k;
  return e;
}

// Game with a single marked place and no transitions.
HighLevelGame lone_place() {
  HighLevelGame g;
  g.name = "lone";
  Place p;
  p.name = "P";
  p.kind = PlaceKind::System;
  p.type = set_black();
  p.init = InitSpec{false, {mk_black()}};
  g.places.push_back(p);
  return g;
}

// Two marked black places and one transition moving a token from A onto
// the already-marked B: the canonical contact violation.
HighLevelGame clash_game() {
  HighLevelGame g;
  g.name = "clash";
  Place a;
  a.name = "A";
  a.kind = PlaceKind::Environment;
  a.type = set_black();
  a.init = InitSpec{false, {mk_black()}};
  Place b = a;
  b.name = "B";
  b.kind = PlaceKind::System;
  g.places.push_back(a);
  g.places.push_back(b);
  Transition t;
  t.name = "t";
  t.pre.push_back({"A", mk_black()});
  t.post.push_back({"B", mk_black()});
  g.transitions.push_back(t);
  return g;
}

const GroundFiring& firing_named(const std::vector<GroundFiring>& fs,
                                 const HighLevelGame& game,
                                 const std::string& name) {
  for (const auto& f : fs)
    if (f.name(game) == name) return f;
  REQUIRE(false);
  return fs.front();
}

} // namespace

TEST_SUITE("semantics") {

TEST_CASE("initial marking of the alarm stations") {
  const auto as = alarm_system();
  auto elab = Elaboration::build(as, env_n(2));
  auto m0 = initial_marking(elab);

  REQUIRE(m0.sets.size() == as.places.size());
  CHECK(m0.at(as.place_index("Sys")) ==
        std::vector<Token>{Token::num(1), Token::num(2)});
  CHECK(m0.at(as.place_index("Env")) == std::vector<Token>{Token::black()});
  for (const char* empty : {"C", "I", "D", "P", "Alarm", "Good", "Bad"})
    CHECK(m0.at(as.place_index(empty)).empty());

  CHECK(m0.text(as) == "{Sys={1,2}, Env={.}}");
}

TEST_CASE("initial marking of the robot fleet") {
  const auto sr = self_reconfiguring_robots();
  auto elab = Elaboration::build(sr, env_nk(2, 2));
  auto m0 = initial_marking(elab);

  CHECK(m0.at(sr.place_index("work")) == std::vector<Token>{Token::black()});
  CHECK(m0.at(sr.place_index("RT")) ==
        std::vector<Token>{Token::tup({Token::num(1), Token::num(1)}),
                           Token::tup({Token::num(2), Token::num(2)})});
  CHECK(m0.at(sr.place_index("Tools")) ==
        std::vector<Token>{Token::num(1), Token::num(2)});
  CHECK(m0.at(sr.place_index("Phases")) == std::vector<Token>{Token::num(1)});
  CHECK(m0.at(sr.place_index("Env")) == std::vector<Token>{Token::black()});
  CHECK(m0.at(sr.place_index("RTP")).empty());
}

TEST_CASE("ground firings pair transitions with guard-true valuations") {
  const auto as = alarm_system();
  auto elab = Elaboration::build(as, env_n(2));
  auto fs = ground_firings(elab);
  CHECK(fs.size() == 28);

  // Per-transition counts for n=2, obtained by counting valuations by hand:
  // one variable gives 2, a gives 2*2, bot1 gives 2^3, bot2 keeps the 4 of
  // its 8 valuations satisfying b != x.
  std::map<std::string, int> per;
  for (const auto& f : fs) per[as.transitions[f.trans].name]++;
  CHECK(per["i"] == 2);
  CHECK(per["t"] == 2);
  CHECK(per["fa"] == 2);
  CHECK(per["fr"] == 2);
  CHECK(per["info"] == 2);
  CHECK(per["a"] == 4);
  CHECK(per["g"] == 2);
  CHECK(per["bot1"] == 8);
  CHECK(per["bot2"] == 4);

  for (const auto& f : fs)
    if (f.trans == as.transition_index("bot2"))
      CHECK(f.val.at("b") != f.val.at("x"));

  CHECK(fs[0].name(as) == "i[x=1]");
}

TEST_CASE("enabledness needs every pre-arc token present") {
  const auto as = alarm_system();
  auto elab = Elaboration::build(as, env_n(2));
  auto m0 = initial_marking(elab);

  Valuation x1;
  x1.bindings["x"] = Token::num(1);
  auto t_idx = static_cast<std::size_t>(as.transition_index("t"));
  CHECK(!enabled(m0, t_idx, x1, elab)); // C is empty

  auto i_idx = static_cast<std::size_t>(as.transition_index("i"));
  CHECK(enabled(m0, i_idx, x1, elab));

  auto m1 = fire(m0, i_idx, x1, elab);
  CHECK(enabled(m1, t_idx, x1, elab));
  Valuation x2;
  x2.bindings["x"] = Token::num(2);
  CHECK(!enabled(m1, t_idx, x2, elab)); // C holds 1, not 2
}

TEST_CASE("guard-false valuations are not enabled") {
  const auto as = alarm_system();
  auto elab = Elaboration::build(as, env_n(2));
  auto m0 = initial_marking(elab);
  auto m1 = fire(m0, as.transition_index("i"),
                 [] { Valuation v; v.bindings["x"] = Token::num(1); return v; }(),
                 elab);
  auto m2 = fire(m1, as.transition_index("t"),
                 [] { Valuation v; v.bindings["x"] = Token::num(1); return v; }(),
                 elab);

  // bot2 at I={1}, Alarm empty: guard b != x filters before token checks.
  Valuation same;
  same.bindings["a"] = Token::num(1);
  same.bindings["b"] = Token::num(1);
  same.bindings["x"] = Token::num(1);
  auto bot2 = static_cast<std::size_t>(as.transition_index("bot2"));
  CHECK(!enabled(m2, bot2, same, elab));
}

TEST_CASE("firing moves the chosen tokens") {
  const auto as = alarm_system();
  auto elab = Elaboration::build(as, env_n(2));
  auto m0 = initial_marking(elab);

  Valuation x2;
  x2.bindings["x"] = Token::num(2);
  auto m1 = fire(m0, as.transition_index("i"), x2, elab);
  CHECK(m1.at(as.place_index("Env")).empty());
  CHECK(m1.at(as.place_index("C")) == std::vector<Token>{Token::num(2)});
  CHECK(m1.at(as.place_index("Sys")) ==
        std::vector<Token>{Token::num(1), Token::num(2)});
}

TEST_CASE("the synchronizing information step spreads the position") {
  const auto as = alarm_system();
  auto elab = Elaboration::build(as, env_n(2));
  auto fs = ground_firings(elab);
  auto m = initial_marking(elab);
  m = fire(m, firing_named(fs, as, "i[x=1]"));
  m = fire(m, firing_named(fs, as, "t[x=1]"));
  // now D={1}, Sys={2}, I={1}
  m = fire(m, firing_named(fs, as, "info[x=1]"));
  CHECK(m.at(as.place_index("D")).empty());
  CHECK(m.at(as.place_index("Sys")).empty());
  CHECK(m.at(as.place_index("P")) ==
        std::vector<Token>{Token::num(1), Token::num(2)});
  CHECK(m.at(as.place_index("I")) == std::vector<Token>{Token::num(1)});
}

TEST_CASE("a self-loop arc leaves its place unchanged") {
  const auto cm = concurrent_machines();
  auto elab = Elaboration::build(cm, env_nk(3, 2));
  auto fs = ground_firings(elab);
  auto m = initial_marking(elab);
  m = fire(m, firing_named(fs, cm, "d[m=1]"));
  CHECK(m.at(cm.place_index("ERR")) == std::vector<Token>{Token::num(1)});
  CHECK(m.at(cm.place_index("OK")) ==
        std::vector<Token>{Token::num(2), Token::num(3)});

  auto before = m.at(cm.place_index("Sys"));
  m = fire(m, firing_named(fs, cm, "test[m=1]"));
  CHECK(m.at(cm.place_index("Sys")) == before);
  CHECK(m.at(cm.place_index("ERR")).empty());
}

TEST_CASE("firing a disabled transition is an error") {
  const auto as = alarm_system();
  auto elab = Elaboration::build(as, env_n(2));
  auto m0 = initial_marking(elab);
  Valuation x1;
  x1.bindings["x"] = Token::num(1);
  CHECK_THROWS_AS(fire(m0, as.transition_index("t"), x1, elab), Error);
}

TEST_CASE("contact: producing a token the place still holds throws") {
  auto elab = Elaboration::build(clash_game(), ParamEnv{});
  auto fs = ground_firings(elab);
  REQUIRE(fs.size() == 1);
  auto m0 = initial_marking(elab);
  CHECK(enabled(m0, fs[0]));
  CHECK_THROWS_AS(fire(m0, fs[0]), ContactViolation);

  // fire_plain applies the union without the check.
  auto m1 = fire_plain(m0, fs[0]);
  CHECK(m1.at(0).empty());
  CHECK(m1.at(1) == std::vector<Token>{Token::black()});

  CHECK_THROWS_AS(explore(elab), ContactViolation);
  try {
    explore(elab);
  } catch (const ContactViolation& e) {
    std::string msg = e.what();
    CHECK(msg.find("token . produced") != std::string::npos);
    CHECK(msg.find("by firing t[]") != std::string::npos);
  }
}

TEST_CASE("exploration of a transition-free net") {
  auto elab = Elaboration::build(lone_place(), ParamEnv{});
  auto g = explore(elab);
  CHECK(g.nodes.size() == 1);
  CHECK(g.edges.empty());
  CHECK(g.depth == 0);
  CHECK(g.deadlock_count() == 1);
  CHECK(!g.marks_bad(elab.game()));
}

TEST_CASE("alarm-station reachability, n=2") {
  auto elab = Elaboration::build(alarm_system(), env_n(2));
  auto g = explore(elab);
  CHECK(g.nodes.size() == 91);
  CHECK(g.edges.size() == 220);
  CHECK(g.depth == 6);
  CHECK(g.deadlock_count() == 5);
  CHECK(g.marks_bad(elab.game())); // a false alarm is always reachable
  CHECK(g.nodes[0] == initial_marking(elab));

  // Every edge is a real firing: enabled at its source, firing reproduces
  // its destination.
  for (const auto& e : g.edges) {
    CHECK(enabled(g.nodes[e.src], g.firings[e.firing]));
    CHECK(fire(g.nodes[e.src], g.firings[e.firing]) == g.nodes[e.dst]);
  }
}

TEST_CASE("machine runs always park every order, n=3 k=2") {
  const auto cm = concurrent_machines();
  auto elab = Elaboration::build(cm, env_nk(3, 2));
  auto g = explore(elab);
  CHECK(g.nodes.size() == 523);
  CHECK(g.edges.size() == 1074);

  std::vector<char> has_out(g.nodes.size(), 0);
  for (const auto& e : g.edges) has_out[e.src] = 1;

  auto gp = cm.place_index("G");
  auto bp = cm.place_index("B");
  std::size_t deadlocks = 0;
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    if (has_out[n]) continue;
    ++deadlocks;
    // all k orders sit in G or B: their first components cover O
    std::set<std::int64_t> parked;
    for (auto p : {gp, bp})
      for (const auto& tok : g.nodes[n].at(p))
        parked.insert(tok.parts()[0].value());
    CHECK(parked == std::set<std::int64_t>{1, 2});
  }
  CHECK(deadlocks == g.deadlock_count());
  CHECK(deadlocks == 138);
}

TEST_CASE("exploration respects the state cap") {
  Limits tight;
  tight.max_states = 10;
  auto elab = Elaboration::build(alarm_system(), env_n(2), tight);
  CHECK_THROWS_AS(explore(elab), LimitError);
}

TEST_CASE("the benchmarks are contact-free at reference sizes") {
  CHECK(check_contact_free(Elaboration::build(alarm_system(), env_n(2))).ok);
  CHECK(check_contact_free(
            Elaboration::build(concurrent_machines(), env_nk(3, 2)))
            .ok);
  CHECK(check_contact_free(
            Elaboration::build(self_reconfiguring_robots(), env_nk(2, 2)))
            .ok);
}

TEST_CASE("contact check reports a witness on a constructed violation") {
  auto elab = Elaboration::build(clash_game(), ParamEnv{});

  auto v = check_contact_free(elab);
  CHECK(!v.ok);
  CHECK(v.message.find("token .") != std::string::npos);

  // The sweep form pinpoints node, transition and place.
  ReachGraph g;
  g.firings = ground_firings(elab);
  g.nodes.push_back(initial_marking(elab));
  auto w = check_contact_free(elab, g);
  CHECK(!w.ok);
  CHECK(w.node == 0);
  CHECK(w.transition == "t");
  CHECK(w.place == "B");
  CHECK(w.message.find("produces token .") != std::string::npos);
}

TEST_CASE("a transition-free net is trivially contact-free") {
  auto elab = Elaboration::build(lone_place(), ParamEnv{});
  CHECK(check_contact_free(elab).ok);
  CHECK(check_contact_free(elab, explore(elab)).ok);
}

} // TEST_SUITE
