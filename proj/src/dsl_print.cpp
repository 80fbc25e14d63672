#include "hlpg/dsl.hpp"

#include <sstream>

namespace hlpg {

namespace {

void print_init(std::ostream& out, const InitSpec& init) {
  out << " init ";
  if (init.all) {
    out << "all";
    return;
  }
  out << '{';
  for (std::size_t i = 0; i < init.entries.size(); ++i) {
    if (i > 0) out << ", ";
    out << text(*init.entries[i]);
  }
  out << '}';
}

void print_trans(std::ostream& out, const Transition& t) {
  out << "trans " << t.name;
  if (t.guard && t.guard->kind != Guard::Kind::True)
    out << " [" << text(*t.guard) << ']';
  out << " {";
  for (const auto& a : t.pre)
    out << " in " << a.place << " : " << text(*a.expr) << ';';
  for (const auto& a : t.post)
    out << " out " << a.place << " : " << text(*a.expr) << ';';
  out << " }";
}

} // namespace

std::string print_game(const HighLevelGame& game) {
  std::ostringstream out;
  out << "game " << game.name << ";\n";

  if (!game.params.empty()) {
    out << '\n';
    for (const auto& p : game.params) {
      out << "par " << p.name << " : nat";
      if (p.constraint && p.constraint->kind != Guard::Kind::True)
        out << " where " << text(*p.constraint);
      out << ";\n";
    }
  }
  if (!game.consts.empty()) {
    out << '\n';
    for (const auto& c : game.consts)
      out << "set " << c.name << " = " << text(*c.body) << ";\n";
  }
  if (!game.vars.empty()) {
    out << '\n';
    for (const auto& v : game.vars)
      out << "var " << v.name << " : " << text(*v.type) << ";\n";
  }
  if (!game.funs.empty()) {
    out << '\n';
    for (const auto& f : game.funs)
      out << "fun " << f.name << " : " << text(*f.domain) << " -> "
          << text(*f.codomain) << " = " << f.bound << " -> " << text(*f.body)
          << ";\n";
  }
  if (!game.places.empty()) {
    out << '\n';
    for (const auto& p : game.places) {
      out << "place " << p.name << " : " << text(*p.type) << " kind "
          << (p.kind == PlaceKind::System ? "sys" : "env");
      if (p.bad) out << " bad";
      if (p.init) print_init(out, *p.init);
      out << ";\n";
    }
  }
  if (!game.transitions.empty()) {
    out << '\n';
    for (const auto& t : game.transitions) {
      print_trans(out, t);
      out << '\n';
    }
  }
  return out.str();
}

} // namespace hlpg
