#include "hlpg/export.hpp"

#include "hlpg/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace hlpg {

namespace {

// Dot/XML-friendly identifier: alphanumerics kept, '.' spelled out, the
// rest collapsed to '_'; numbered on collision.
std::string mangle(const std::string& name,
                   std::map<std::string, int>& used) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) out += c;
    else if (c == '.') out += "dot";
    else out += '_';
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0])))
    out.insert(out.begin(), 'n');
  int& count = used[out];
  ++count;
  if (count > 1) out += "_" + std::to_string(count);
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

} // namespace

std::string export_native(const LowLevelGame& g) {
  std::ostringstream out;
  out << "petrigame " << g.name << "\n";
  for (const auto& p : g.places) {
    out << "place " << p.name << " kind "
        << (p.kind == PlaceKind::System ? "sys" : "env");
    if (p.bad) out << " bad";
    if (p.init) out << " init";
    out << "\n";
  }
  for (const auto& t : g.transitions) out << "trans " << t.name << "\n";
  for (const auto& t : g.transitions) {
    for (int p : t.pre)
      out << "arc " << g.places[p].name << " -> " << t.name << "\n";
    for (int p : t.post)
      out << "arc " << t.name << " -> " << g.places[p].name << "\n";
  }
  return out.str();
}

LowLevelGame read_native(std::string_view text) {
  LowLevelGame g;
  std::map<std::string, int> place_ids, trans_ids;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool named = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    auto fail = [&](const std::string& msg) {
      throw Error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (word == "petrigame") {
      if (named) fail("repeated petrigame line");
      if (!(ls >> g.name)) fail("petrigame line without a name");
      named = true;
    } else if (word == "place") {
      LowLevelPlace p;
      std::string kw;
      if (!(ls >> p.name >> kw) || kw != "kind") fail("malformed place line");
      if (!(ls >> kw) || (kw != "sys" && kw != "env"))
        fail("place kind must be sys or env");
      p.kind = kw == "sys" ? PlaceKind::System : PlaceKind::Environment;
      while (ls >> kw) {
        if (kw == "bad") p.bad = true;
        else if (kw == "init") p.init = true;
        else fail("unknown place flag '" + kw + "'");
      }
      if (!place_ids.emplace(p.name, g.places.size()).second)
        fail("duplicate place '" + p.name + "'");
      g.places.push_back(std::move(p));
    } else if (word == "trans") {
      LowLevelTransition t;
      if (!(ls >> t.name)) fail("trans line without a name");
      if (!trans_ids.emplace(t.name, g.transitions.size()).second)
        fail("duplicate transition '" + t.name + "'");
      g.transitions.push_back(std::move(t));
    } else if (word == "arc") {
      std::string src, arrow, dst;
      if (!(ls >> src >> arrow >> dst) || arrow != "->")
        fail("malformed arc line");
      auto ps = place_ids.find(src);
      if (ps != place_ids.end()) {
        auto td = trans_ids.find(dst);
        if (td == trans_ids.end())
          fail("arc target '" + dst + "' is not a transition");
        g.transitions[td->second].pre.push_back(ps->second);
      } else {
        auto ts = trans_ids.find(src);
        if (ts == trans_ids.end()) fail("arc source '" + src + "' is unknown");
        auto pd = place_ids.find(dst);
        if (pd == place_ids.end())
          fail("arc target '" + dst + "' is not a place");
        g.transitions[ts->second].post.push_back(pd->second);
      }
    } else {
      fail("unknown directive '" + word + "'");
    }
  }
  if (!named) throw Error("missing petrigame line");
  for (auto& t : g.transitions) {
    std::sort(t.pre.begin(), t.pre.end());
    std::sort(t.post.begin(), t.post.end());
  }
  return g;
}

std::string export_pnml(const LowLevelGame& g) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<pnml xmlns=\"http://www.pnml.org/version-2009/grammar/pnml\">\n";
  out << "  <net id=\"net1\" type=\"http://www.pnml.org/version-2009/grammar/"
         "ptnet\">\n";
  out << "    <name><text>" << xml_escape(g.name) << "</text></name>\n";
  out << "    <page id=\"page1\">\n";
  for (std::size_t i = 0; i < g.places.size(); ++i) {
    const auto& p = g.places[i];
    out << "      <place id=\"p" << i << "\">\n";
    out << "        <name><text>" << xml_escape(p.name) << "</text></name>\n";
    if (p.init)
      out << "        <initialMarking><text>1</text></initialMarking>\n";
    out << "        <toolspecific tool=\"hlpg\" version=\"1\"><kind>"
        << (p.kind == PlaceKind::System ? "sys" : "env") << "</kind>";
    if (p.bad) out << "<bad>true</bad>";
    out << "</toolspecific>\n";
    out << "      </place>\n";
  }
  for (std::size_t i = 0; i < g.transitions.size(); ++i) {
    out << "      <transition id=\"t" << i << "\">\n";
    out << "        <name><text>" << xml_escape(g.transitions[i].name)
        << "</text></name>\n";
    out << "      </transition>\n";
  }
  std::size_t arc = 0;
  for (std::size_t i = 0; i < g.transitions.size(); ++i) {
    for (int p : g.transitions[i].pre)
      out << "      <arc id=\"a" << arc++ << "\" source=\"p" << p
          << "\" target=\"t" << i << "\"/>\n";
    for (int p : g.transitions[i].post)
      out << "      <arc id=\"a" << arc++ << "\" source=\"t" << i
          << "\" target=\"p" << p << "\"/>\n";
  }
  out << "    </page>\n  </net>\n</pnml>\n";
  return out.str();
}

namespace {

std::string place_attrs(PlaceKind kind, bool bad, bool init) {
  std::string shape = bad ? "doublecircle" : "circle";
  std::vector<std::string> styles;
  if (kind == PlaceKind::Environment) styles.push_back("filled");
  if (init) styles.push_back("bold");
  std::string out = "shape=" + shape;
  if (!styles.empty()) {
    out += ", style=\"";
    for (std::size_t i = 0; i < styles.size(); ++i)
      out += std::string(i ? "," : "") + styles[i];
    out += "\"";
  }
  if (kind == PlaceKind::Environment) out += ", fillcolor=lightgray";
  return out;
}

} // namespace

std::string export_dot(const LowLevelGame& g) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(g.name) << "\" {\n";
  out << "  rankdir=LR;\n";
  std::map<std::string, int> used;
  std::vector<std::string> pid(g.places.size()), tid(g.transitions.size());
  for (std::size_t i = 0; i < g.places.size(); ++i) {
    const auto& p = g.places[i];
    pid[i] = mangle(p.name, used);
    out << "  " << pid[i] << " [label=\"" << dot_escape(p.name) << "\", "
        << place_attrs(p.kind, p.bad, p.init) << "];\n";
  }
  for (std::size_t i = 0; i < g.transitions.size(); ++i) {
    tid[i] = mangle(g.transitions[i].name, used);
    out << "  " << tid[i] << " [label=\""
        << dot_escape(g.transitions[i].name) << "\", shape=box];\n";
  }
  for (std::size_t i = 0; i < g.transitions.size(); ++i) {
    for (int p : g.transitions[i].pre)
      out << "  " << pid[p] << " -> " << tid[i] << ";\n";
    for (int p : g.transitions[i].post)
      out << "  " << tid[i] << " -> " << pid[p] << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_hl_dot(const HighLevelGame& g) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(g.name) << "\" {\n";
  out << "  rankdir=LR;\n";
  std::map<std::string, int> used;
  std::map<std::string, std::string> pid;
  for (const auto& p : g.places) {
    std::string id = mangle(p.name, used);
    pid[p.name] = id;
    out << "  " << id << " [label=\"" << dot_escape(p.name) << " : "
        << dot_escape(text(*p.type)) << "\", "
        << place_attrs(p.kind, p.bad, p.init.has_value()) << "];\n";
  }
  for (const auto& t : g.transitions) {
    std::string id = mangle(t.name, used);
    out << "  " << id << " [label=\"" << dot_escape(t.name)
        << "\", shape=box];\n";
    if (t.guard && t.guard->kind != Guard::Kind::True) {
      std::string gid = mangle(t.name + "_guard", used);
      out << "  " << gid << " [label=\"" << dot_escape(text(*t.guard))
          << "\", shape=note, style=dashed];\n";
      out << "  " << gid << " -> " << id
          << " [style=dashed, arrowhead=none];\n";
    }
    for (const auto& a : t.pre)
      out << "  " << pid[a.place] << " -> " << id << " [label=\""
          << dot_escape(text(*a.expr)) << "\"];\n";
    for (const auto& a : t.post)
      out << "  " << id << " -> " << pid[a.place] << " [label=\""
          << dot_escape(text(*a.expr)) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

StatsReport stats(const LowLevelGame& g) {
  StatsReport r;
  r.name = g.name;
  r.place_count = g.places.size();
  r.transition_count = g.transitions.size();
  r.arc_count = g.arc_count();
  r.init_size = g.init_count();
  for (const auto& p : g.places)
    if (p.bad) ++r.bad_count;
  return r;
}

std::string stats_json(const StatsReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["places"] = r.place_count;
  j["transitions"] = r.transition_count;
  j["arcs"] = r.arc_count;
  j["initial_tokens"] = r.init_size;
  j["bad_places"] = r.bad_count;
  if (r.reach_nodes) j["reachable_markings"] = *r.reach_nodes;
  if (r.reach_edges) j["reachable_edges"] = *r.reach_edges;
  if (r.deadlocks) j["deadlocks"] = *r.deadlocks;
  if (r.bad_reachable) j["bad_reachable"] = *r.bad_reachable;
  if (r.contact_free) j["contact_free"] = *r.contact_free;
  if (r.one_safe) j["one_safe"] = *r.one_safe;
  return j.dump(2) + "\n";
}

} // namespace hlpg
