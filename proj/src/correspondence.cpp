#include "hlpg/correspondence.hpp"

#include "hlpg/errors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace hlpg {

namespace {

bool ll_enabled(const LowLevelMarking& m, const LowLevelTransition& t) {
  return std::includes(m.marked.begin(), m.marked.end(), t.pre.begin(),
                       t.pre.end());
}

LowLevelMarking ll_fire_plain(const LowLevelMarking& m,
                              const LowLevelTransition& t) {
  std::vector<int> rest;
  std::set_difference(m.marked.begin(), m.marked.end(), t.pre.begin(),
                      t.pre.end(), std::back_inserter(rest));
  LowLevelMarking out;
  std::set_union(rest.begin(), rest.end(), t.post.begin(), t.post.end(),
                 std::back_inserter(out.marked));
  return out;
}

} // namespace

LowLevelMarking rho(const Marking& m, const Instantiation& inst,
                    const Elaboration& elab) {
  LowLevelMarking out;
  for (std::size_t p = 0; p < m.sets.size(); ++p)
    for (const auto& tok : m.sets[p])
      out.marked.push_back(inst.place_base[p] +
                           static_cast<int>(elab.place_type(p).index_of(tok)));
  std::sort(out.marked.begin(), out.marked.end());
  return out;
}

CorrespondenceReport check_correspondence(const HighLevelGame& game,
                                          const ParamEnv& env,
                                          const Limits& limits,
                                          const CorrespondenceOptions& opts) {
  CorrespondenceReport r;
  auto fail = [&](const std::string& msg) {
    r.passed = false;
    r.witness = msg;
    return r;
  };

  Elaboration elab = Elaboration::build(game, env, limits);
  Instantiation inst = instantiate(elab);
  if (opts.mutate) opts.mutate(inst.net);
  const auto& net = inst.net;

  auto firings = ground_firings(elab);
  if (firings.size() != net.transitions.size())
    return fail("the net has " + std::to_string(net.transitions.size()) +
                " transitions but " + std::to_string(firings.size()) +
                " guard-true (t, v) pairs exist");

  ReachGraph hl = explore(elab);
  LowLevelReachGraph ll = lowlevel_reach(net, limits);
  r.hl_nodes = hl.nodes.size();
  r.hl_edges = hl.edges.size();
  r.ll_nodes = ll.nodes.size();
  r.ll_edges = ll.edges.size();

  std::vector<LowLevelMarking> image(hl.nodes.size());
  for (std::size_t i = 0; i < hl.nodes.size(); ++i)
    image[i] = rho(hl.nodes[i], inst, elab);

  if (image[0] != ll.nodes[0])
    return fail("rho of the initial marking " + hl.nodes[0].text(game) +
                " is " + image[0].text(net) +
                ", the net starts at " + ll.nodes[0].text(net));

  std::map<LowLevelMarking, int> ll_index;
  for (std::size_t i = 0; i < ll.nodes.size(); ++i)
    ll_index.emplace(ll.nodes[i], static_cast<int>(i));

  std::vector<int> hl2ll(hl.nodes.size());
  for (std::size_t i = 0; i < hl.nodes.size(); ++i) {
    auto it = ll_index.find(image[i]);
    if (it == ll_index.end())
      return fail("reachable marking " + hl.nodes[i].text(game) +
                  " maps to " + image[i].text(net) +
                  " which the net does not reach");
    hl2ll[i] = it->second;
  }
  if (hl.nodes.size() != ll.nodes.size()) {
    std::set<LowLevelMarking> hit(image.begin(), image.end());
    for (const auto& n : ll.nodes)
      if (!hit.count(n))
        return fail("the net reaches " + n.text(net) +
                    " which no reachable marking maps to");
    return fail("node counts differ: " + std::to_string(hl.nodes.size()) +
                " reachable markings, " + std::to_string(ll.nodes.size()) +
                " in the net");
  }

  std::set<std::tuple<int, int, int>> ll_edges;
  for (const auto& e : ll.edges) ll_edges.insert({e.src, e.trans, e.dst});
  for (const auto& e : hl.edges) {
    if (!ll_edges.count({hl2ll[e.src], e.firing, hl2ll[e.dst]}))
      return fail("firing " + hl.firings[e.firing].name(game) + " from " +
                  hl.nodes[e.src].text(game) + " has no matching net edge");
  }
  if (hl.edges.size() != ll.edges.size())
    return fail("edge counts differ: " + std::to_string(hl.edges.size()) +
                " firings, " + std::to_string(ll.edges.size()) +
                " in the net");

  auto check_point = [&](const Marking& m, const LowLevelMarking& lm,
                         bool also_fire) -> std::string {
    for (std::size_t fi = 0; fi < firings.size(); ++fi) {
      bool hl_en = enabled(m, firings[fi]);
      bool ll_en = ll_enabled(lm, net.transitions[fi]);
      if (hl_en != ll_en)
        return "transition " + firings[fi].name(game) + " is " +
               (hl_en ? "enabled in the token game but not in the net"
                      : "enabled in the net but not in the token game") +
               " at " + m.text(game);
      if (hl_en && also_fire) {
        auto hl_next = rho(fire_plain(m, firings[fi]), inst, elab);
        auto ll_next = ll_fire_plain(lm, net.transitions[fi]);
        if (hl_next != ll_next)
          return "plain firing of " + firings[fi].name(game) + " at " +
                 m.text(game) + " yields " + hl_next.text(net) +
                 " under rho but " + ll_next.text(net) + " in the net";
      }
    }
    return "";
  };

  for (std::size_t i = 0; i < hl.nodes.size(); ++i)
    if (auto w = check_point(hl.nodes[i], image[i], false); !w.empty())
      return fail(w);

  std::mt19937_64 rng(opts.seed);
  for (std::size_t s = 0; s < opts.samples; ++s) {
    Marking m;
    m.sets.resize(game.places.size());
    for (std::size_t p = 0; p < game.places.size(); ++p)
      for (const auto& tok : elab.place_type(p).elements)
        if (rng() & 1) m.sets[p].push_back(tok);
    if (auto w = check_point(m, rho(m, inst, elab), true); !w.empty())
      return fail(w);
    ++r.samples_checked;
  }

  r.passed = true;
  return r;
}

} // namespace hlpg
