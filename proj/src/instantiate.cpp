#include "hlpg/instantiate.hpp"

#include "hlpg/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace hlpg {

std::size_t LowLevelGame::arc_count() const {
  std::size_t n = 0;
  for (const auto& t : transitions) n += t.pre.size() + t.post.size();
  return n;
}

std::size_t LowLevelGame::init_count() const {
  std::size_t n = 0;
  for (const auto& p : places)
    if (p.init) ++n;
  return n;
}

int LowLevelGame::place_index(const std::string& pname) const {
  for (std::size_t i = 0; i < places.size(); ++i)
    if (places[i].name == pname) return static_cast<int>(i);
  return -1;
}

int LowLevelGame::transition_index(const std::string& tname) const {
  for (std::size_t i = 0; i < transitions.size(); ++i)
    if (transitions[i].name == tname) return static_cast<int>(i);
  return -1;
}

Instantiation instantiate(const Elaboration& elab) {
  const auto& game = elab.game();
  Instantiation inst;

  std::ostringstream name;
  name << game.name;
  if (!game.params.empty()) {
    name << '(';
    for (std::size_t i = 0; i < game.params.size(); ++i) {
      if (i > 0) name << ',';
      name << game.params[i].name << '=' << elab.env().at(game.params[i].name);
    }
    name << ')';
  }
  inst.net.name = name.str();

  inst.place_base.resize(game.places.size());
  for (std::size_t p = 0; p < game.places.size(); ++p) {
    inst.place_base[p] = static_cast<int>(inst.net.places.size());
    const auto& init = elab.init_tokens(p);
    for (const auto& d : elab.place_type(p).elements) {
      LowLevelPlace lp;
      lp.name = game.places[p].name + "[" + d.text() + "]";
      lp.kind = game.places[p].kind;
      lp.bad = game.places[p].bad;
      lp.init = std::binary_search(init.begin(), init.end(), d);
      inst.net.places.push_back(std::move(lp));
    }
  }

  auto ll_index = [&](int p, const Token& d) {
    return inst.place_base[p] + static_cast<int>(elab.place_type(p).index_of(d));
  };

  for (const auto& f : ground_firings(elab)) {
    LowLevelTransition lt;
    lt.name = f.name(game);
    for (const auto& [p, toks] : f.pre)
      for (const auto& d : toks) lt.pre.push_back(ll_index(p, d));
    for (const auto& [p, toks] : f.post)
      for (const auto& d : toks) lt.post.push_back(ll_index(p, d));
    std::sort(lt.pre.begin(), lt.pre.end());
    std::sort(lt.post.begin(), lt.post.end());
    inst.net.transitions.push_back(std::move(lt));
    inst.origin.emplace_back(f.trans, f.val);
  }
  return inst;
}

LowLevelGame dedup_transitions(const LowLevelGame& g) {
  LowLevelGame out;
  out.name = g.name;
  out.places = g.places;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> seen;
  for (const auto& t : g.transitions) {
    auto key = std::make_pair(t.pre, t.post);
    if (seen.emplace(std::move(key), 1).second) out.transitions.push_back(t);
  }
  return out;
}

LowLevelGame prune_isolated_places(const LowLevelGame& g) {
  std::vector<char> keep(g.places.size(), 0);
  for (std::size_t i = 0; i < g.places.size(); ++i)
    if (g.places[i].init || g.places[i].bad) keep[i] = 1;
  for (const auto& t : g.transitions) {
    for (int p : t.pre) keep[p] = 1;
    for (int p : t.post) keep[p] = 1;
  }
  std::vector<int> remap(g.places.size(), -1);
  LowLevelGame out;
  out.name = g.name;
  for (std::size_t i = 0; i < g.places.size(); ++i) {
    if (!keep[i]) continue;
    remap[i] = static_cast<int>(out.places.size());
    out.places.push_back(g.places[i]);
  }
  out.transitions = g.transitions;
  for (auto& t : out.transitions) {
    for (int& p : t.pre) p = remap[p];
    for (int& p : t.post) p = remap[p];
  }
  return out;
}

std::string LowLevelMarking::text(const LowLevelGame& g) const {
  std::string out = "{";
  for (std::size_t i = 0; i < marked.size(); ++i) {
    if (i > 0) out += ", ";
    out += g.places[marked[i]].name;
  }
  return out + "}";
}

std::size_t LowLevelReachGraph::deadlock_count() const {
  std::vector<char> has_out(nodes.size(), 0);
  for (const auto& e : edges) has_out[e.src] = 1;
  return static_cast<std::size_t>(
      std::count(has_out.begin(), has_out.end(), 0));
}

bool LowLevelReachGraph::marks_bad(const LowLevelGame& g) const {
  for (const auto& m : nodes)
    for (int p : m.marked)
      if (g.places[p].bad) return true;
  return false;
}

LowLevelMarking lowlevel_initial(const LowLevelGame& g) {
  LowLevelMarking m;
  for (std::size_t i = 0; i < g.places.size(); ++i)
    if (g.places[i].init) m.marked.push_back(static_cast<int>(i));
  return m;
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const LowLevelMarking& m, std::size_t words) {
  Bits b(words, 0);
  for (int p : m.marked) b[p / 64] |= std::uint64_t{1} << (p % 64);
  return b;
}

LowLevelMarking from_bits(const Bits& b) {
  LowLevelMarking m;
  for (std::size_t w = 0; w < b.size(); ++w)
    for (int i = 0; i < 64; ++i)
      if (b[w] >> i & 1) m.marked.push_back(static_cast<int>(w * 64 + i));
  return m;
}

bool covers(const Bits& m, const Bits& sub) {
  for (std::size_t w = 0; w < m.size(); ++w)
    if ((m[w] & sub[w]) != sub[w]) return false;
  return true;
}

// BFS over set-firing semantics; when safety is given, stops at the first
// firing that produces a token on a marked, unconsumed place.
LowLevelReachGraph reach_impl(const LowLevelGame& g, const Limits& limits,
                              Verdict* safety) {
  LowLevelReachGraph out;
  const std::size_t words = (g.places.size() + 63) / 64;

  std::vector<Bits> pre(g.transitions.size()), post(g.transitions.size());
  for (std::size_t t = 0; t < g.transitions.size(); ++t) {
    pre[t] = to_bits(LowLevelMarking{g.transitions[t].pre}, words);
    post[t] = to_bits(LowLevelMarking{g.transitions[t].post}, words);
  }

  std::map<Bits, int> seen;
  std::deque<Bits> queue;
  auto add_node = [&](const Bits& b) {
    auto [it, fresh] = seen.emplace(b, static_cast<int>(out.nodes.size()));
    if (fresh) {
      if (out.nodes.size() >= limits.max_states)
        throw LimitError("exploration exceeds the state limit of " +
                         std::to_string(limits.max_states));
      out.nodes.push_back(from_bits(b));
      queue.push_back(b);
    }
    return it->second;
  };

  add_node(to_bits(lowlevel_initial(g), words));
  while (!queue.empty()) {
    Bits cur = queue.front();
    queue.pop_front();
    int cur_id = seen.at(cur);
    for (std::size_t t = 0; t < g.transitions.size(); ++t) {
      if (!covers(cur, pre[t])) continue;
      Bits next(words);
      bool clash = false;
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t rest = cur[w] & ~pre[t][w];
        if (rest & post[t][w]) clash = true;
        next[w] = rest | post[t][w];
      }
      if (clash && safety) {
        Bits rest(words);
        for (std::size_t w = 0; w < words; ++w)
          rest[w] = cur[w] & ~pre[t][w] & post[t][w];
        auto witness = from_bits(rest);
        safety->ok = false;
        safety->node = cur_id;
        safety->transition = g.transitions[t].name;
        safety->place = g.places[witness.marked.front()].name;
        safety->message =
            "transition '" + safety->transition +
            "' produces a token on marked place '" + safety->place +
            "' at " + from_bits(cur).text(g);
        return out;
      }
      int dst = add_node(next);
      out.edges.push_back({cur_id, static_cast<int>(t), dst});
    }
  }
  return out;
}

} // namespace

LowLevelReachGraph lowlevel_reach(const LowLevelGame& g, const Limits& limits) {
  return reach_impl(g, limits, nullptr);
}

Verdict check_one_safe(const LowLevelGame& g, const Limits& limits) {
  Verdict v;
  reach_impl(g, limits, &v);
  return v;
}

} // namespace hlpg
