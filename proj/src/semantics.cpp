#include "hlpg/semantics.hpp"

#include "hlpg/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace hlpg {

namespace {

bool subset_of(const std::vector<Token>& a, const std::vector<Token>& b) {
  // both sorted
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Token> set_minus(const std::vector<Token>& a,
                             const std::vector<Token>& b) {
  std::vector<Token> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<Token> set_union(const std::vector<Token>& a,
                             const std::vector<Token>& b) {
  std::vector<Token> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

GroundFiring make_firing(std::size_t trans_idx, const Valuation& v,
                         const Elaboration& elab) {
  const auto& game = elab.game();
  const auto& t = game.transitions.at(trans_idx);
  GroundFiring f;
  f.trans = static_cast<int>(trans_idx);
  f.val = v;
  for (std::size_t a = 0; a < t.pre.size(); ++a) {
    int p = static_cast<int>(game.place_index(t.pre[a].place));
    f.pre.emplace_back(p, eval_arc(t.pre[a], elab.pre_mode(trans_idx, a), v, elab));
  }
  for (std::size_t a = 0; a < t.post.size(); ++a) {
    int p = static_cast<int>(game.place_index(t.post[a].place));
    f.post.emplace_back(p, eval_arc(t.post[a], elab.post_mode(trans_idx, a), v, elab));
  }
  return f;
}

} // namespace

bool Marking::holds(std::size_t place_idx, const Token& t) const {
  const auto& s = sets.at(place_idx);
  return std::binary_search(s.begin(), s.end(), t);
}

std::string Marking::text(const HighLevelGame& game) const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::size_t p = 0; p < sets.size(); ++p) {
    if (sets[p].empty()) continue;
    if (!first) out << ", ";
    first = false;
    out << game.places[p].name << "={";
    for (std::size_t i = 0; i < sets[p].size(); ++i) {
      if (i > 0) out << ',';
      out << sets[p][i];
    }
    out << '}';
  }
  out << '}';
  return out.str();
}

std::string GroundFiring::name(const HighLevelGame& game) const {
  return game.transitions.at(trans).name + "[" + val.text() + "]";
}

std::vector<GroundFiring> ground_firings(const Elaboration& elab) {
  std::vector<GroundFiring> out;
  const auto& game = elab.game();
  for (std::size_t t = 0; t < game.transitions.size(); ++t) {
    for (const auto& v : enumerate_valuations(game.transitions[t], elab)) {
      if (!eval_guard(game.transitions[t].guard, v, elab)) continue;
      out.push_back(make_firing(t, v, elab));
    }
  }
  return out;
}

Marking initial_marking(const Elaboration& elab) {
  Marking m;
  const auto& game = elab.game();
  m.sets.resize(game.places.size());
  for (std::size_t p = 0; p < game.places.size(); ++p)
    m.sets[p] = elab.init_tokens(p);
  return m;
}

bool enabled(const Marking& m, const GroundFiring& f) {
  for (const auto& [p, toks] : f.pre)
    if (!subset_of(toks, m.sets.at(p))) return false;
  return true;
}

bool enabled(const Marking& m, std::size_t trans_idx, const Valuation& v,
             const Elaboration& elab) {
  if (!eval_guard(elab.game().transitions.at(trans_idx).guard, v, elab))
    return false;
  return enabled(m, make_firing(trans_idx, v, elab));
}

Marking fire(const Marking& m, const GroundFiring& f) {
  if (!enabled(m, f))
    throw Error("transition '" +
                std::to_string(f.trans) + "' fired while not enabled");
  Marking out = m;
  for (const auto& [p, toks] : f.pre)
    out.sets[p] = set_minus(out.sets[p], toks);
  for (const auto& [p, toks] : f.post) {
    for (const auto& tok : toks)
      if (std::binary_search(out.sets[p].begin(), out.sets[p].end(), tok))
        throw ContactViolation("token " + tok.text() +
                               " produced on place already holding it");
    out.sets[p] = set_union(out.sets[p], toks);
  }
  return out;
}

Marking fire(const Marking& m, std::size_t trans_idx, const Valuation& v,
             const Elaboration& elab) {
  if (!eval_guard(elab.game().transitions.at(trans_idx).guard, v, elab))
    throw Error("transition '" + elab.game().transitions.at(trans_idx).name +
                "' fired with a false guard");
  auto f = make_firing(trans_idx, v, elab);
  try {
    return fire(m, f);
  } catch (const ContactViolation& e) {
    throw ContactViolation(std::string(e.what()) + " by firing " +
                           f.name(elab.game()));
  } catch (const Error&) {
    throw Error("transition '" + elab.game().transitions.at(trans_idx).name +
                "' fired while not enabled");
  }
}

Marking fire_plain(const Marking& m, const GroundFiring& f) {
  Marking out = m;
  for (const auto& [p, toks] : f.pre)
    out.sets[p] = set_minus(out.sets[p], toks);
  for (const auto& [p, toks] : f.post)
    out.sets[p] = set_union(out.sets[p], toks);
  return out;
}

std::size_t ReachGraph::deadlock_count() const {
  std::vector<char> has_out(nodes.size(), 0);
  for (const auto& e : edges) has_out[e.src] = 1;
  return static_cast<std::size_t>(
      std::count(has_out.begin(), has_out.end(), 0));
}

bool ReachGraph::marks_bad(const HighLevelGame& game) const {
  for (const auto& m : nodes)
    for (std::size_t p = 0; p < game.places.size(); ++p)
      if (game.places[p].bad && !m.sets[p].empty()) return true;
  return false;
}

ReachGraph explore(const Elaboration& elab) {
  ReachGraph g;
  g.firings = ground_firings(elab);

  std::map<Marking, int> seen;
  std::deque<int> queue;
  std::vector<int> level;
  // parent edge index per node, -1 for the root: witness paths
  std::vector<int> parent;

  auto add_node = [&](Marking&& m, int via_edge, int lvl) {
    auto [it, fresh] = seen.emplace(std::move(m), static_cast<int>(g.nodes.size()));
    if (fresh) {
      if (g.nodes.size() >= elab.limits().max_states)
        throw LimitError("exploration exceeds the state limit of " +
                         std::to_string(elab.limits().max_states));
      g.nodes.push_back(it->first);
      parent.push_back(via_edge);
      level.push_back(lvl);
      g.depth = std::max<std::size_t>(g.depth, static_cast<std::size_t>(lvl));
      queue.push_back(it->second);
    }
    return it->second;
  };

  auto path_to = [&](int node) {
    std::vector<std::string> names;
    while (parent[node] != -1) {
      const auto& e = g.edges[parent[node]];
      names.push_back(g.firings[e.firing].name(elab.game()));
      node = e.src;
    }
    std::reverse(names.begin(), names.end());
    std::string out;
    for (const auto& n : names) out += (out.empty() ? "" : " ") + n;
    return out;
  };

  add_node(initial_marking(elab), -1, 0);
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (std::size_t fi = 0; fi < g.firings.size(); ++fi) {
      const auto& f = g.firings[fi];
      if (!enabled(g.nodes[cur], f)) continue;
      Marking next;
      try {
        next = fire(g.nodes[cur], f);
      } catch (const ContactViolation& e) {
        std::string prefix = path_to(cur);
        throw ContactViolation(std::string(e.what()) + " by firing " +
                               f.name(elab.game()) +
                               (prefix.empty() ? "" : " after " + prefix));
      }
      int dst = add_node(std::move(next), static_cast<int>(g.edges.size()),
                         level[cur] + 1);
      g.edges.push_back({cur, static_cast<int>(fi), dst});
    }
  }
  return g;
}

// Contact-freeness here is the disjoint-union requirement of the firing
// rule at token granularity: no enabled firing may produce a token that
// the marking retains. The coarser all-places form (marked input places
// imply unmarked or consumed output places) rejects set-valued games
// whose tokens never actually collide, so it is not what is checked.
Verdict check_contact_free(const Elaboration& elab, const ReachGraph& graph) {
  const auto& game = elab.game();
  for (std::size_t n = 0; n < graph.nodes.size(); ++n) {
    const auto& m = graph.nodes[n];
    for (const auto& f : graph.firings) {
      if (!enabled(m, f)) continue;
      for (const auto& [p, toks] : f.post) {
        const std::vector<Token>* consumed = nullptr;
        for (const auto& [q, pre_toks] : f.pre)
          if (q == p) { consumed = &pre_toks; break; }
        for (const auto& tok : toks) {
          if (!m.holds(p, tok)) continue;
          if (consumed && std::binary_search(consumed->begin(),
                                             consumed->end(), tok))
            continue;
          Verdict v;
          v.ok = false;
          v.node = static_cast<int>(n);
          v.transition = game.transitions[f.trans].name;
          v.place = game.places[p].name;
          v.message = "firing " + f.name(game) + " at " + m.text(game) +
                      " produces token " + tok.text() + " on place '" +
                      v.place + "' which still holds it";
          return v;
        }
      }
    }
  }
  return {};
}

Verdict check_contact_free(const Elaboration& elab) {
  ReachGraph graph;
  try {
    graph = explore(elab);
  } catch (const ContactViolation& e) {
    Verdict v;
    v.ok = false;
    v.message = e.what();
    return v;
  }
  return check_contact_free(elab, graph);
}

} // namespace hlpg
