#include "hlpg/dsl.hpp"

#include "hlpg/eval.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace hlpg {

std::string ParseDiagnostic::text() const {
  std::ostringstream out;
  if (line > 0) out << line << ':' << col << ": ";
  out << (severity == Severity::Error ? "error: " : "warning: ") << message;
  return out.str();
}

bool ParseResult::ok() const {
  if (!game) return false;
  for (const auto& d : diagnostics)
    if (d.severity == Severity::Error) return false;
  return true;
}

namespace {

const std::set<std::string> kKeywords = {
    "game", "par",  "set",  "var", "fun",   "place", "trans", "in",
    "out",  "kind", "sys",  "env", "bad",   "init",  "all",   "where",
    "nat",  "black", "pow", "and", "or",    "not",   "true"};

struct Tok {
  enum class Kind { Ident, Keyword, Int, Punct, End };
  Kind kind = Kind::End;
  std::string s;
  std::int64_t i = 0;
  int line = 1, col = 1;

  bool is(const char* punct) const {
    return kind == Kind::Punct && s == punct;
  }
  bool is_kw(const char* kw) const {
    return kind == Kind::Keyword && s == kw;
  }
  std::string show() const {
    switch (kind) {
      case Kind::End: return "end of input";
      case Kind::Int: return "'" + std::to_string(i) + "'";
      default: return "'" + s + "'";
    }
  }
};

std::vector<Tok> lex(std::string_view src, std::vector<ParseDiagnostic>& diags) {
  std::vector<Tok> toks;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto step = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i + k] == '\n') { ++line; col = 1; } else ++col;
    }
    i += n;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { step(1); continue; }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') step(1);
      continue;
    }
    Tok t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) ||
              src[j] == '_' || src[j] == '\''))
        ++j;
      t.s = std::string(src.substr(i, j - i));
      t.kind = kKeywords.count(t.s) ? Tok::Kind::Keyword : Tok::Kind::Ident;
      step(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      if (j - i > 18) {
        diags.push_back({line, col, Severity::Error, "integer literal too large"});
        t.i = 0;
      } else {
        t.i = std::stoll(std::string(src.substr(i, j - i)));
      }
      t.kind = Tok::Kind::Int;
      step(j - i);
    } else {
      auto two = i + 1 < src.size() ? src.substr(i, 2) : std::string_view();
      if (two == "->" || two == ".." || two == "!=" || two == "<=" ||
          two == ">=") {
        t.kind = Tok::Kind::Punct;
        t.s = std::string(two);
        step(2);
      } else if (std::string(";:,=<>(){}[]*+-.|\\").find(c) != std::string::npos) {
        t.kind = Tok::Kind::Punct;
        t.s = std::string(1, c);
        step(1);
      } else {
        diags.push_back({line, col, Severity::Error,
                         std::string("stray character '") + c + "'"});
        step(1);
        continue;
      }
    }
    toks.push_back(std::move(t));
  }
  Tok end;
  end.kind = Tok::Kind::End;
  end.line = line;
  end.col = col;
  toks.push_back(end);
  return toks;
}

struct Parser {
  const std::vector<Tok>& toks;
  std::vector<ParseDiagnostic>& diags;
  std::size_t pos = 0;
  HighLevelGame game{};
  std::vector<std::string> bound{}; // comprehension binders, innermost last

  const Tok& peek(std::size_t ahead = 0) const {
    return toks[std::min(pos + ahead, toks.size() - 1)];
  }
  const Tok& next() { return toks[std::min(pos++, toks.size() - 1)]; }
  bool done() const { return peek().kind == Tok::Kind::End; }

  void error(const Tok& at, const std::string& msg) {
    diags.push_back({at.line, at.col, Severity::Error, msg});
  }

  bool expect_punct(const char* p) {
    if (peek().is(p)) { ++pos; return true; }
    error(peek(), std::string("expected '") + p + "', found " + peek().show());
    return false;
  }
  bool expect_kw(const char* kw) {
    if (peek().is_kw(kw)) { ++pos; return true; }
    error(peek(), std::string("expected '") + kw + "', found " + peek().show());
    return false;
  }
  std::string expect_ident(const char* what) {
    if (peek().kind == Tok::Kind::Ident) return next().s;
    error(peek(), std::string("expected ") + what + ", found " + peek().show());
    return "";
  }

  // ---- symbol lookup ----
  enum class Sym { None, Param, Const, Var, Fun };
  Sym lookup(const std::string& name) const {
    if (game.has_param(name)) return Sym::Param;
    if (game.find_const(name)) return Sym::Const;
    if (game.find_var(name)) return Sym::Var;
    if (game.find_fun(name)) return Sym::Fun;
    return Sym::None;
  }
  bool is_bound(const std::string& name) const {
    return std::find(bound.rbegin(), bound.rend(), name) != bound.rend();
  }

  // skip ahead to the next plausible declaration start
  void sync() {
    while (!done()) {
      if (peek().is(";")) { ++pos; return; }
      if (peek().is("}")) { ++pos; return; }
      if (peek().kind == Tok::Kind::Keyword) {
        const std::string& s = peek().s;
        if (s == "game" || s == "par" || s == "set" || s == "var" ||
            s == "fun" || s == "place" || s == "trans")
          return;
      }
      ++pos;
    }
  }

  // ---- scanning helpers ----

  // From an opening "{" at pos: true if a "|" occurs at its top level.
  bool brace_is_comprehension() const {
    int depth = 0;
    for (std::size_t j = pos; j < toks.size(); ++j) {
      const Tok& t = toks[j];
      if (t.is("{")) ++depth;
      else if (t.is("}")) { if (--depth == 0) return false; }
      else if (t.is("|") && depth == 1) return true;
      else if (t.kind == Tok::Kind::End) return false;
    }
    return false;
  }

  // Binder name of the comprehension opening at pos (the ident after the
  // top-level "|"), empty if ill-formed.
  std::string comprehension_binder() const {
    int depth = 0;
    for (std::size_t j = pos; j < toks.size(); ++j) {
      const Tok& t = toks[j];
      if (t.is("{")) ++depth;
      else if (t.is("}")) { if (--depth == 0) return ""; }
      else if (t.is("|") && depth == 1) {
        if (toks[j + 1].kind == Tok::Kind::Ident) return toks[j + 1].s;
        return "";
      } else if (t.kind == Tok::Kind::End) return "";
    }
    return "";
  }

  // Token index just past the parenthesized group opening at pos.
  std::size_t after_paren_group() const {
    int depth = 0;
    for (std::size_t j = pos; j < toks.size(); ++j) {
      if (toks[j].is("(")) ++depth;
      else if (toks[j].is(")")) { if (--depth == 0) return j + 1; }
      else if (toks[j].kind == Tok::Kind::End) return j;
    }
    return toks.size() - 1;
  }

  static bool is_cmp(const Tok& t) {
    return t.is("=") || t.is("!=") || t.is("<") || t.is("<=") || t.is(">") ||
           t.is(">=");
  }

  // ---- expressions ----

  ExprPtr parse_expr() {
    ExprPtr e = parse_atom();
    if (!e) return nullptr;
    for (;;) {
      if (peek().is("\\")) {
        const Tok& at = peek();
        ++pos;
        if (e->kind != Expr::Kind::ConstSet) {
          error(at, "left side of '\\' must be a set");
          return nullptr;
        }
        auto removed = parse_brace_list();
        if (removed.empty()) return nullptr;
        e = set_minus(e->set, std::move(removed));
      } else if (peek().is("+") || peek().is("-")) {
        char op = next().s[0];
        ExprPtr rhs = parse_offset_operand();
        if (!rhs) return nullptr;
        e = mk_arith(std::move(e), op, std::move(rhs));
      } else {
        break;
      }
    }
    return e;
  }

  // "{" expr { "," expr } "}"
  std::vector<ExprPtr> parse_brace_list() {
    if (!expect_punct("{")) return {};
    std::vector<ExprPtr> out;
    for (;;) {
      ExprPtr e = parse_expr();
      if (!e) return {};
      out.push_back(std::move(e));
      if (peek().is(",")) { ++pos; continue; }
      break;
    }
    if (!expect_punct("}")) return {};
    return out;
  }

  ExprPtr parse_offset_operand() {
    if (peek().kind == Tok::Kind::Int) return mk_lit(next().i);
    if (peek().kind == Tok::Kind::Ident && lookup(peek().s) == Sym::Param &&
        !is_bound(peek().s))
      return mk_param(next().s);
    error(peek(), "arithmetic offset must be a literal or a parameter");
    return nullptr;
  }

  ExprPtr parse_atom() {
    const Tok& t = peek();
    if (t.kind == Tok::Kind::Int) return mk_lit(next().i);
    if (t.is(".")) { ++pos; return mk_black(); }
    if (t.is("(")) {
      ++pos;
      std::vector<ExprPtr> items;
      for (;;) {
        ExprPtr e = parse_expr();
        if (!e) return nullptr;
        items.push_back(std::move(e));
        if (peek().is(",")) { ++pos; continue; }
        break;
      }
      if (!expect_punct(")")) return nullptr;
      if (items.size() == 1) return items[0];
      return mk_tuple(std::move(items));
    }
    if (t.is("{")) {
      if (brace_is_comprehension()) return parse_comprehension_expr();
      return parse_range_value();
    }
    if (t.is_kw("pow")) {
      ++pos;
      if (!expect_punct("(")) return nullptr;
      SetExprPtr inner = parse_setexpr();
      if (!inner) return nullptr;
      if (!expect_punct(")")) return nullptr;
      return mk_set_value(set_power(std::move(inner)));
    }
    if (t.is_kw("black")) { ++pos; return mk_set_value(set_black()); }
    if (t.kind == Tok::Kind::Ident) {
      std::string name = next().s;
      if (peek().is("(")) {
        if (lookup(name) != Sym::Fun) {
          error(t, "'" + name + "' is not a function");
          return nullptr;
        }
        ++pos;
        ExprPtr arg = parse_expr();
        if (!arg) return nullptr;
        if (!expect_punct(")")) return nullptr;
        return mk_funapp(name, std::move(arg));
      }
      if (is_bound(name)) return mk_var(name);
      switch (lookup(name)) {
        case Sym::Var: return mk_var(name);
        case Sym::Param: return mk_param(name);
        case Sym::Const: return mk_const(name);
        case Sym::Fun:
          error(t, "function '" + name + "' needs an argument");
          return nullptr;
        case Sym::None: break;
      }
      error(t, "undeclared name '" + name + "'");
      return nullptr;
    }
    error(t, "expected an expression, found " + t.show());
    return nullptr;
  }

  // "{" expr "|" IDENT "in" setexpr [ "," guard ] "}", binder pre-scanned
  ExprPtr parse_comprehension_expr() {
    std::string binder = comprehension_binder();
    const Tok& open = peek();
    if (binder.empty()) {
      error(open, "malformed comprehension");
      ++pos;
      return nullptr;
    }
    ++pos; // "{"
    bound.push_back(binder);
    ExprPtr element = parse_expr();
    bound.pop_back();
    if (!element) return nullptr;
    if (!expect_punct("|")) return nullptr;
    std::string b2 = expect_ident("the bound variable");
    if (b2.empty()) return nullptr;
    if (!expect_kw("in")) return nullptr;
    SetExprPtr source = parse_setexpr();
    if (!source) return nullptr;
    GuardPtr filter;
    if (peek().is(",")) {
      ++pos;
      bound.push_back(binder);
      filter = parse_guard();
      bound.pop_back();
      if (!filter) return nullptr;
    }
    if (!expect_punct("}")) return nullptr;
    return mk_compr(binder, std::move(element), std::move(source),
                    std::move(filter));
  }

  // "{" "1" ".." intterm "}" as a value
  ExprPtr parse_range_value() {
    SetExprPtr r = parse_range_set();
    if (!r) return nullptr;
    return mk_set_value(std::move(r));
  }

  SetExprPtr parse_range_set() {
    if (!expect_punct("{")) return nullptr;
    const Tok& lo = peek();
    if (lo.kind != Tok::Kind::Int || lo.i != 1) {
      error(lo, "range lower bound must be 1");
      return nullptr;
    }
    ++pos;
    if (!expect_punct("..")) return nullptr;
    auto upper = parse_intterm();
    if (!upper) return nullptr;
    if (!expect_punct("}")) return nullptr;
    return set_range(*upper);
  }

  std::optional<IntTerm> parse_intterm() {
    if (peek().kind == Tok::Kind::Int) return IntTerm{"", next().i};
    if (peek().kind == Tok::Kind::Ident) {
      const Tok& at = peek();
      std::string name = next().s;
      if (lookup(name) != Sym::Param) {
        error(at, "range bound must be a literal or a parameter");
        return std::nullopt;
      }
      std::int64_t off = 0;
      if (peek().is("+") || peek().is("-")) {
        char op = next().s[0];
        if (peek().kind != Tok::Kind::Int) {
          error(peek(), "expected a literal offset");
          return std::nullopt;
        }
        off = next().i * (op == '-' ? -1 : 1);
      }
      return IntTerm{name, off};
    }
    error(peek(), "expected a range bound, found " + peek().show());
    return std::nullopt;
  }

  // ---- set expressions ----

  SetExprPtr parse_setterm() {
    const Tok& t = peek();
    if (t.is_kw("black")) { ++pos; return set_black(); }
    if (t.is_kw("pow")) {
      ++pos;
      if (!expect_punct("(")) return nullptr;
      SetExprPtr inner = parse_setexpr();
      if (!inner) return nullptr;
      if (!expect_punct(")")) return nullptr;
      return set_power(std::move(inner));
    }
    if (t.is("{")) {
      if (brace_is_comprehension()) return parse_comprehension_set();
      return parse_range_set();
    }
    if (t.is("(")) {
      ++pos;
      SetExprPtr inner = parse_setexpr();
      if (!inner) return nullptr;
      if (!expect_punct(")")) return nullptr;
      return inner;
    }
    if (t.kind == Tok::Kind::Ident) {
      std::string name = next().s;
      if (lookup(name) == Sym::Const) return set_ref(name);
      error(t, "undeclared set '" + name + "'");
      return nullptr;
    }
    error(t, "expected a set, found " + t.show());
    return nullptr;
  }

  SetExprPtr parse_comprehension_set() {
    std::string binder = comprehension_binder();
    const Tok& open = peek();
    if (binder.empty()) {
      error(open, "malformed comprehension");
      ++pos;
      return nullptr;
    }
    ++pos; // "{"
    bound.push_back(binder);
    ExprPtr element = parse_expr();
    bound.pop_back();
    if (!element) return nullptr;
    if (!expect_punct("|")) return nullptr;
    std::string b2 = expect_ident("the bound variable");
    if (b2.empty()) return nullptr;
    if (!expect_kw("in")) return nullptr;
    SetExprPtr source = parse_setexpr();
    if (!source) return nullptr;
    GuardPtr filter;
    if (peek().is(",")) {
      ++pos;
      bound.push_back(binder);
      filter = parse_guard();
      bound.pop_back();
      if (!filter) return nullptr;
    }
    if (!expect_punct("}")) return nullptr;
    return set_compr(binder, std::move(element), std::move(source),
                     std::move(filter));
  }

  SetExprPtr parse_setexpr() {
    SetExprPtr first = parse_setterm();
    if (!first) return nullptr;
    std::vector<SetExprPtr> factors{first};
    while (peek().is("*")) {
      ++pos;
      SetExprPtr f = parse_setterm();
      if (!f) return nullptr;
      factors.push_back(std::move(f));
    }
    SetExprPtr out =
        factors.size() == 1 ? factors[0] : set_product(std::move(factors));
    if (peek().is("\\")) {
      ++pos;
      auto removed = parse_brace_list();
      if (removed.empty()) return nullptr;
      out = minus_set(std::move(out), std::move(removed));
    }
    return out;
  }

  // S \ {e...} in type position: a filtering comprehension over a fresh
  // variable, same fresh-name rule as set_minus.
  SetExprPtr minus_set(SetExprPtr source, std::vector<ExprPtr> removed) {
    std::set<std::string> used;
    for (const auto& e : removed)
      for (const auto& v : free_vars(*e)) used.insert(v);
    std::string fresh = "q";
    for (int i = 0; used.count(fresh); ++i) fresh = "q" + std::to_string(i);
    GuardPtr filter;
    for (const auto& e : removed) {
      GuardPtr ne = g_cmp(mk_var(fresh), CmpOp::Ne, e);
      filter = filter ? g_and(std::move(filter), std::move(ne)) : std::move(ne);
    }
    return set_compr(fresh, mk_var(fresh), std::move(source),
                     std::move(filter));
  }

  // ---- guards ----

  GuardPtr parse_guard() { return parse_or(); }

  GuardPtr parse_or() {
    GuardPtr a = parse_and();
    if (!a) return nullptr;
    while (peek().is_kw("or")) {
      ++pos;
      GuardPtr b = parse_and();
      if (!b) return nullptr;
      a = g_or(std::move(a), std::move(b));
    }
    return a;
  }

  GuardPtr parse_and() {
    GuardPtr a = parse_not();
    if (!a) return nullptr;
    while (peek().is_kw("and")) {
      ++pos;
      GuardPtr b = parse_not();
      if (!b) return nullptr;
      a = g_and(std::move(a), std::move(b));
    }
    return a;
  }

  GuardPtr parse_not() {
    if (peek().is_kw("not")) {
      ++pos;
      GuardPtr a = parse_not();
      if (!a) return nullptr;
      return g_not(std::move(a));
    }
    if (peek().is_kw("true")) { ++pos; return g_true(); }
    if (peek().is("(")) {
      // parenthesized guard, unless a comparison follows the group
      std::size_t after = after_paren_group();
      if (!is_cmp(toks[std::min(after, toks.size() - 1)])) {
        ++pos;
        GuardPtr a = parse_guard();
        if (!a) return nullptr;
        if (!expect_punct(")")) return nullptr;
        return a;
      }
    }
    return parse_cmp();
  }

  GuardPtr parse_cmp() {
    ExprPtr lhs = parse_expr();
    if (!lhs) return nullptr;
    const Tok& op = peek();
    if (!is_cmp(op)) {
      error(op, "expected a comparison, found " + op.show());
      return nullptr;
    }
    ++pos;
    ExprPtr rhs = parse_expr();
    if (!rhs) return nullptr;
    CmpOp c = op.s == "=" ? CmpOp::Eq
              : op.s == "!=" ? CmpOp::Ne
              : op.s == "<" ? CmpOp::Lt
              : op.s == "<=" ? CmpOp::Le
              : op.s == ">" ? CmpOp::Gt
                            : CmpOp::Ge;
    return g_cmp(std::move(lhs), c, std::move(rhs));
  }

  // ---- declarations ----

  std::vector<std::string> parse_ident_list(const char* what) {
    std::vector<std::string> names;
    for (;;) {
      std::string n = expect_ident(what);
      if (n.empty()) return {};
      names.push_back(std::move(n));
      if (peek().is(",")) { ++pos; continue; }
      return names;
    }
  }

  bool parse_par() {
    ++pos; // "par"
    auto names = parse_ident_list("a parameter name");
    if (names.empty()) return false;
    if (!expect_punct(":")) return false;
    if (!expect_kw("nat")) return false;
    for (const auto& n : names) game.params.push_back({n, nullptr});
    if (peek().is_kw("where")) {
      ++pos;
      GuardPtr g = parse_guard();
      if (!g) return false;
      game.params.back().constraint = std::move(g);
    }
    return expect_punct(";");
  }

  bool parse_set() {
    ++pos; // "set"
    std::string name = expect_ident("a set name");
    if (name.empty()) return false;
    if (!expect_punct("=")) return false;
    SetExprPtr body = parse_setexpr();
    if (!body) return false;
    if (!expect_punct(";")) return false;
    game.consts.push_back({name, std::move(body)});
    return true;
  }

  bool parse_var() {
    ++pos; // "var"
    auto names = parse_ident_list("a variable name");
    if (names.empty()) return false;
    if (!expect_punct(":")) return false;
    SetExprPtr type = parse_setexpr();
    if (!type) return false;
    if (!expect_punct(";")) return false;
    for (const auto& n : names) game.vars.push_back({n, type});
    return true;
  }

  bool parse_fun() {
    ++pos; // "fun"
    FunDecl f;
    f.name = expect_ident("a function name");
    if (f.name.empty()) return false;
    if (!expect_punct(":")) return false;
    f.domain = parse_setexpr();
    if (!f.domain) return false;
    if (!expect_punct("->")) return false;
    f.codomain = parse_setexpr();
    if (!f.codomain) return false;
    if (!expect_punct("=")) return false;
    f.bound = expect_ident("the maplet variable");
    if (f.bound.empty()) return false;
    if (!expect_punct("->")) return false;
    bound.push_back(f.bound);
    f.body = parse_expr();
    bound.pop_back();
    if (!f.body) return false;
    if (!expect_punct(";")) return false;
    game.funs.push_back(std::move(f));
    return true;
  }

  bool parse_place() {
    ++pos; // "place"
    Place p;
    p.name = expect_ident("a place name");
    if (p.name.empty()) return false;
    if (!expect_punct(":")) return false;
    p.type = parse_setexpr();
    if (!p.type) return false;
    if (!expect_kw("kind")) return false;
    if (peek().is_kw("sys")) { ++pos; p.kind = PlaceKind::System; }
    else if (peek().is_kw("env")) { ++pos; p.kind = PlaceKind::Environment; }
    else {
      error(peek(), "expected 'sys' or 'env', found " + peek().show());
      return false;
    }
    if (peek().is_kw("bad")) { ++pos; p.bad = true; }
    if (peek().is_kw("init")) {
      ++pos;
      InitSpec spec;
      if (peek().is_kw("all")) {
        ++pos;
        spec.all = true;
      } else if (peek().is("{") && !brace_is_comprehension()) {
        // a braced list of tokens, unless it reads as a range
        std::size_t save = pos;
        std::size_t save_diags = diags.size();
        ++pos;
        if (peek().kind == Tok::Kind::Int && peek(1).is("..")) {
          pos = save;
          ExprPtr e = parse_expr();
          if (!e) return false;
          spec.entries.push_back(std::move(e));
        } else {
          pos = save;
          diags.resize(save_diags);
          spec.entries = parse_brace_list();
          if (spec.entries.empty()) return false;
        }
      } else {
        ExprPtr e = parse_expr();
        if (!e) return false;
        spec.entries.push_back(std::move(e));
      }
      p.init = std::move(spec);
    }
    if (!expect_punct(";")) return false;
    game.places.push_back(std::move(p));
    return true;
  }

  bool parse_trans() {
    ++pos; // "trans"
    Transition t;
    t.name = expect_ident("a transition name");
    if (t.name.empty()) return false;
    if (peek().is("[")) {
      ++pos;
      GuardPtr g = parse_guard();
      if (!g) return false;
      if (!expect_punct("]")) return false;
      if (g->kind != Guard::Kind::True) t.guard = std::move(g);
    }
    if (!expect_punct("{")) return false;
    while (!peek().is("}")) {
      bool in;
      if (peek().is_kw("in")) { in = true; ++pos; }
      else if (peek().is_kw("out")) { in = false; ++pos; }
      else {
        error(peek(), "expected 'in', 'out' or '}', found " + peek().show());
        return false;
      }
      Arc a;
      a.place = expect_ident("a place name");
      if (a.place.empty()) return false;
      if (!expect_punct(":")) return false;
      a.expr = parse_expr();
      if (!a.expr) return false;
      if (!expect_punct(";")) return false;
      (in ? t.pre : t.post).push_back(std::move(a));
    }
    ++pos; // "}"
    game.transitions.push_back(std::move(t));
    return true;
  }

  bool parse_file() {
    if (done()) {
      error(peek(), "no game declared");
      return false;
    }
    if (!expect_kw("game")) return false;
    game.name = expect_ident("the game name");
    if (game.name.empty()) return false;
    if (!expect_punct(";")) return false;
    while (!done()) {
      bool ok;
      if (peek().is_kw("par")) ok = parse_par();
      else if (peek().is_kw("set")) ok = parse_set();
      else if (peek().is_kw("var")) ok = parse_var();
      else if (peek().is_kw("fun")) ok = parse_fun();
      else if (peek().is_kw("place")) ok = parse_place();
      else if (peek().is_kw("trans")) ok = parse_trans();
      else {
        error(peek(), "expected a declaration, found " + peek().show());
        ok = false;
      }
      if (!ok) sync();
    }
    return true;
  }
};

} // namespace

ParseResult parse_game(std::string_view source) {
  ParseResult result;
  auto toks = lex(source, result.diagnostics);
  Parser parser{toks, result.diagnostics};
  bool parsed = parser.parse_file();

  bool clean = true;
  for (const auto& d : result.diagnostics)
    if (d.severity == Severity::Error) clean = false;
  if (!parsed || !clean) return result;

  result.game = std::move(parser.game);
  auto semantic = validate(*result.game);
  bool structurally_ok = true;
  for (const auto& d : semantic)
    if (d.severity == Severity::Error) structurally_ok = false;
  if (structurally_ok) {
    auto typing = typecheck_game(*result.game);
    semantic.insert(semantic.end(), typing.begin(), typing.end());
  }
  for (const auto& d : semantic)
    result.diagnostics.push_back(
        {0, 0, d.severity,
         d.where.empty() ? d.message : d.where + ": " + d.message});
  return result;
}

} // namespace hlpg
