#include "hlpg/benchmarks.hpp"

namespace hlpg {

namespace {

Place place(std::string name, PlaceKind kind, SetExprPtr type,
            bool bad = false, std::optional<InitSpec> init = {}) {
  Place p;
  p.name = std::move(name);
  p.kind = kind;
  p.type = std::move(type);
  p.bad = bad;
  p.init = std::move(init);
  return p;
}

InitSpec init_all() { return InitSpec{true, {}}; }

InitSpec init_of(std::vector<ExprPtr> entries) {
  return InitSpec{false, std::move(entries)};
}

Transition trans(std::string name, GuardPtr guard, std::vector<Arc> pre,
                 std::vector<Arc> post) {
  Transition t;
  t.name = std::move(name);
  t.guard = std::move(guard);
  t.pre = std::move(pre);
  t.post = std::move(post);
  return t;
}

} // namespace

HighLevelGame alarm_system(InfoVariant variant) {
  HighLevelGame g;
  g.name = variant == InfoVariant::Sync ? "as_sync" : "as_seq";
  g.params.push_back({"n", nullptr});
  g.consts.push_back({"N", set_range_param("n")});
  for (const char* v : {"x", "y", "z", "v", "a", "b"})
    g.vars.push_back({v, set_ref("N")});

  // F x: the stations other than x; G x: the alarms naming position x.
  g.funs.push_back({"F", set_ref("N"), set_power(set_ref("N")), "x",
                    set_minus(set_ref("N"), {mk_var("x")})});
  g.funs.push_back({"G", set_ref("N"),
                    set_power(set_product({set_ref("N"), set_ref("N")})), "x",
                    mk_compr("z", mk_tuple({mk_var("z"), mk_var("x")}),
                             set_ref("N"))});

  auto NN = set_product({set_ref("N"), set_ref("N")});
  g.places.push_back(place("Sys", PlaceKind::System, set_ref("N"), false,
                           init_all()));
  g.places.push_back(place("C", PlaceKind::Environment, set_ref("N")));
  g.places.push_back(place("I", PlaceKind::Environment, set_ref("N")));
  g.places.push_back(place("D", PlaceKind::System, set_ref("N")));
  g.places.push_back(place("P", PlaceKind::System, set_ref("N")));
  g.places.push_back(place("Alarm", PlaceKind::System, NN));
  g.places.push_back(place("Good", PlaceKind::System, set_black()));
  g.places.push_back(place("Bad", PlaceKind::System, set_black(), true));
  g.places.push_back(place("Env", PlaceKind::Environment, set_black(), false,
                           init_of({mk_black()})));

  g.transitions.push_back(trans("i", nullptr, {{"Env", mk_black()}},
                                {{"C", mk_var("x")}}));
  g.transitions.push_back(trans("t", nullptr,
                                {{"C", mk_var("x")}, {"Sys", mk_var("x")}},
                                {{"I", mk_var("x")}, {"D", mk_var("x")}}));
  g.transitions.push_back(trans("fa", nullptr, {{"Sys", mk_var("y")}},
                                {{"P", mk_var("y")}}));
  g.transitions.push_back(trans("fr", nullptr, {{"D", mk_var("x")}},
                                {{"P", mk_var("x")}}));
  if (variant == InfoVariant::Sync) {
    g.transitions.push_back(
        trans("info", nullptr,
              {{"D", mk_var("x")}, {"Sys", mk_funapp("F", mk_var("x"))}},
              {{"P", mk_const("N")}}));
  } else {
    g.transitions.push_back(
        trans("info", g_cmp(mk_var("x"), CmpOp::Ne, mk_var("y")),
              {{"D", mk_var("x")}, {"Sys", mk_var("y")}},
              {{"D", mk_var("y")}, {"P", mk_var("x")}}));
  }
  g.transitions.push_back(trans("a", nullptr, {{"P", mk_var("z")}},
                                {{"Alarm", mk_tuple({mk_var("z"), mk_var("v")})}}));
  g.transitions.push_back(trans("g", nullptr,
                                {{"I", mk_var("x")},
                                 {"Alarm", mk_funapp("G", mk_var("x"))}},
                                {{"Good", mk_black()}}));
  g.transitions.push_back(trans("bot1", nullptr,
                                {{"C", mk_var("x")},
                                 {"Alarm", mk_tuple({mk_var("a"), mk_var("b")})}},
                                {{"Bad", mk_black()}}));
  g.transitions.push_back(trans("bot2",
                                g_cmp(mk_var("b"), CmpOp::Ne, mk_var("x")),
                                {{"I", mk_var("x")},
                                 {"Alarm", mk_tuple({mk_var("a"), mk_var("b")})}},
                                {{"Bad", mk_black()}}));
  return g;
}

HighLevelGame concurrent_machines() {
  HighLevelGame g;
  g.name = "cm";
  g.params.push_back({"n", nullptr});
  g.params.push_back({"k", g_cmp(mk_param("k"), CmpOp::Lt, mk_param("n"))});
  g.consts.push_back({"M", set_range_param("n")});
  g.consts.push_back({"O", set_range_param("k")});
  g.vars.push_back({"m", set_ref("M")});
  g.vars.push_back({"o", set_ref("O")});

  // F m: the machines that stay operational when m breaks.
  g.funs.push_back({"F", set_ref("M"), set_power(set_ref("M")), "m",
                    set_minus(set_ref("M"), {mk_var("m")})});

  auto OM = set_product({set_ref("O"), set_ref("M")});
  g.places.push_back(place("Env", PlaceKind::Environment, set_black(), false,
                           init_of({mk_black()})));
  g.places.push_back(place("ERR", PlaceKind::System, set_ref("M")));
  g.places.push_back(place("OK", PlaceKind::System, set_ref("M")));
  g.places.push_back(place("Sys", PlaceKind::System, set_ref("O"), false,
                           init_all()));
  g.places.push_back(place("M", PlaceKind::System, OM));
  g.places.push_back(place("G", PlaceKind::System, OM));
  g.places.push_back(place("B", PlaceKind::System, OM, true));

  auto om = mk_tuple({mk_var("o"), mk_var("m")});
  g.transitions.push_back(trans("d", nullptr, {{"Env", mk_black()}},
                                {{"ERR", mk_var("m")},
                                 {"OK", mk_funapp("F", mk_var("m"))}}));
  g.transitions.push_back(trans("test", nullptr,
                                {{"ERR", mk_var("m")}, {"Sys", mk_const("O")}},
                                {{"Sys", mk_const("O")}}));
  g.transitions.push_back(trans("p", nullptr, {{"Sys", mk_var("o")}},
                                {{"M", om}}));
  g.transitions.push_back(trans("g", nullptr,
                                {{"M", om}, {"OK", mk_var("m")}},
                                {{"G", om}}));
  g.transitions.push_back(trans("b", nullptr, {{"M", om}}, {{"B", om}}));
  return g;
}

HighLevelGame self_reconfiguring_robots() {
  HighLevelGame g;
  g.name = "sr";
  g.params.push_back({"n", nullptr});
  g.params.push_back({"k", nullptr});
  g.consts.push_back({"R", set_range_param("n")});
  g.consts.push_back({"T", set_range_param("n")});
  g.consts.push_back({"P", set_range_param("k")});
  // the diagonal: robot i starts holding tool i
  g.consts.push_back({"I", set_compr("i", mk_tuple({mk_var("i"), mk_var("i")}),
                                     set_ref("R"))});
  g.vars.push_back({"r", set_ref("R")});
  g.vars.push_back({"t", set_ref("T")});
  g.vars.push_back({"t'", set_ref("T")});
  g.vars.push_back({"p", set_ref("P")});
  g.vars.push_back({"p'", set_ref("P")});

  // F p: every robot paired with phase p.
  g.funs.push_back({"F", set_ref("P"),
                    set_power(set_product({set_ref("R"), set_ref("P")})), "p",
                    mk_compr("r", mk_tuple({mk_var("r"), mk_var("p")}),
                             set_ref("R"))});

  auto RP = set_product({set_ref("R"), set_ref("P")});
  auto RT = set_product({set_ref("R"), set_ref("T")});
  auto RTP = set_product({set_ref("R"), set_ref("T"), set_ref("P")});
  g.places.push_back(place("Phases", PlaceKind::System, set_ref("P"), false,
                           init_of({mk_lit(1)})));
  g.places.push_back(place("Env", PlaceKind::Environment, set_black(), false,
                           init_of({mk_black()})));
  g.places.push_back(place("S", PlaceKind::Environment, set_ref("P")));
  g.places.push_back(place("W", PlaceKind::Environment, set_ref("P")));
  g.places.push_back(place("C", PlaceKind::Environment, set_black()));
  g.places.push_back(place("work", PlaceKind::System, set_black(), false,
                           init_of({mk_black()})));
  g.places.push_back(place("RP", PlaceKind::System, RP));
  g.places.push_back(place("RT", PlaceKind::System, RT, false,
                           init_of({mk_const("I")})));
  g.places.push_back(place("RTP", PlaceKind::System, RTP));
  g.places.push_back(place("R'T'P'", PlaceKind::System, RTP));
  g.places.push_back(place("check", PlaceKind::System, RT));
  g.places.push_back(place("Tools", PlaceKind::System, set_ref("T"), false,
                           init_all()));
  g.places.push_back(place("restart", PlaceKind::System, set_ref("R")));
  g.places.push_back(place("Bad1", PlaceKind::System, RP, true));
  g.places.push_back(place("Bad2", PlaceKind::System, set_ref("R"), true));

  auto rtp = mk_tuple({mk_var("r"), mk_var("t"), mk_var("p")});
  g.transitions.push_back(trans("i1",
                                g_cmp(mk_var("p"), CmpOp::Lt, mk_param("k")),
                                {{"Phases", mk_var("p")}, {"Env", mk_black()}},
                                {{"S", mk_var("p")},
                                 {"Phases", mk_arith(mk_var("p"), '+', mk_lit(1))}}));
  g.transitions.push_back(trans("i2", nullptr,
                                {{"Phases", mk_param("k")}, {"Env", mk_black()}},
                                {{"S", mk_param("k")}}));
  g.transitions.push_back(trans("des", nullptr, {{"S", mk_var("p")}},
                                {{"RTP", rtp}, {"W", mk_var("p")}}));
  g.transitions.push_back(trans("t_w", nullptr,
                                {{"W", mk_var("p")}, {"work", mk_black()}},
                                {{"C", mk_black()},
                                 {"RP", mk_funapp("F", mk_var("p"))}}));
  g.transitions.push_back(trans("chg", nullptr,
                                {{"RP", mk_tuple({mk_var("r"), mk_var("p")})},
                                 {"RT", mk_tuple({mk_var("r"), mk_var("t")})}},
                                {{"RT", mk_tuple({mk_var("r"), mk_var("t'")})},
                                 {"R'T'P'", mk_tuple({mk_var("r"), mk_var("t'"),
                                                      mk_var("p")})},
                                 {"check", mk_tuple({mk_var("r"), mk_var("t'")})}}));
  g.transitions.push_back(trans("c", nullptr,
                                {{"check", mk_tuple({mk_var("r"), mk_var("t")})},
                                 {"Tools", mk_var("t")}},
                                {{"restart", mk_var("r")}}));
  g.transitions.push_back(trans("nxt", nullptr,
                                {{"C", mk_black()}, {"restart", mk_const("R")}},
                                {{"Tools", mk_const("T")}, {"Env", mk_black()},
                                 {"work", mk_black()}}));
  g.transitions.push_back(trans("bot1",
                                g_cmp(mk_var("p"), CmpOp::Le, mk_var("p'")),
                                {{"RTP", rtp},
                                 {"R'T'P'", mk_tuple({mk_var("r"), mk_var("t"),
                                                      mk_var("p'")})}},
                                {{"Bad1", mk_tuple({mk_var("r"), mk_var("p'")})}}));
  g.transitions.push_back(trans("bot2", nullptr,
                                {{"check", mk_tuple({mk_var("r"), mk_var("t")})}},
                                {{"Bad2", mk_var("r")}}));
  return g;
}

} // namespace hlpg
