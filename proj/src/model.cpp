#include "hlpg/model.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace hlpg {

static bool equal_ptr(const SetExprPtr& x, const SetExprPtr& y) {
  if (!x || !y) return !x && !y;
  return equal(*x, *y);
}
static bool equal_ptr(const ExprPtr& x, const ExprPtr& y) {
  if (!x || !y) return !x && !y;
  return equal(*x, *y);
}

static bool is_true_guard(const GuardPtr& g) {
  return !g || g->kind == Guard::Kind::True;
}

bool equal(const GuardPtr& x, const GuardPtr& y) {
  if (is_true_guard(x) || is_true_guard(y))
    return is_true_guard(x) && is_true_guard(y);
  return equal(*x, *y);
}

bool equal(const SetExpr& x, const SetExpr& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
  case SetExpr::Kind::Range:
    return x.upper == y.upper;
  case SetExpr::Kind::Black:
    return true;
  case SetExpr::Kind::Product:
    return std::equal(
        x.factors.begin(), x.factors.end(), y.factors.begin(),
        y.factors.end(),
        [](const SetExprPtr& a, const SetExprPtr& b) { return equal_ptr(a, b); });
  case SetExpr::Kind::Power:
    return equal_ptr(x.inner, y.inner);
  case SetExpr::Kind::ConstRef:
    return x.name == y.name;
  case SetExpr::Kind::Comprehension:
    return x.bound == y.bound && equal_ptr(x.element, y.element) &&
           equal_ptr(x.source, y.source) && equal(x.filter, y.filter);
  }
  return false;
}

bool equal(const Expr& x, const Expr& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
  case Expr::Kind::Lit:
    return x.lit == y.lit;
  case Expr::Kind::Param:
  case Expr::Kind::Var:
    return x.name == y.name;
  case Expr::Kind::Black:
    return true;
  case Expr::Kind::Tuple:
    return std::equal(
        x.items.begin(), x.items.end(), y.items.begin(), y.items.end(),
        [](const ExprPtr& a, const ExprPtr& b) { return equal_ptr(a, b); });
  case Expr::Kind::Arith:
    return x.op == y.op && equal_ptr(x.lhs, y.lhs) && equal_ptr(x.rhs, y.rhs);
  case Expr::Kind::ConstSet:
    return equal_ptr(x.set, y.set);
  case Expr::Kind::FunApp:
    return x.name == y.name && equal_ptr(x.arg, y.arg);
  case Expr::Kind::Comprehension:
    return x.bound == y.bound && equal_ptr(x.element, y.element) &&
           equal_ptr(x.set, y.set) && equal(x.filter, y.filter);
  }
  return false;
}

bool equal(const Guard& x, const Guard& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
  case Guard::Kind::True:
    return true;
  case Guard::Kind::Cmp:
    return x.op == y.op && equal_ptr(x.lhs, y.lhs) && equal_ptr(x.rhs, y.rhs);
  case Guard::Kind::And:
  case Guard::Kind::Or:
    return equal(x.a, y.a) && equal(x.b, y.b);
  case Guard::Kind::Not:
    return equal(x.a, y.a);
  }
  return false;
}

// ---- canonical text ----

std::string text(const IntTerm& t) {
  std::ostringstream os;
  if (t.is_literal()) {
    os << t.offset;
  } else {
    os << t.param;
    if (t.offset > 0) os << '+' << t.offset;
    if (t.offset < 0) os << '-' << -t.offset;
  }
  return os.str();
}

static const char* cmp_text(CmpOp op) {
  switch (op) {
  case CmpOp::Eq: return "=";
  case CmpOp::Ne: return "!=";
  case CmpOp::Lt: return "<";
  case CmpOp::Le: return "<=";
  case CmpOp::Gt: return ">";
  case CmpOp::Ge: return ">=";
  }
  return "?";
}

std::string text(const SetExpr& s) {
  std::ostringstream os;
  switch (s.kind) {
  case SetExpr::Kind::Range:
    os << "{1.." << text(s.upper) << '}';
    break;
  case SetExpr::Kind::Black:
    os << "black";
    break;
  case SetExpr::Kind::Product: {
    bool first = true;
    for (const auto& f : s.factors) {
      if (!first) os << '*';
      first = false;
      const bool paren = f->kind == SetExpr::Kind::Product;
      if (paren) os << '(';
      os << text(*f);
      if (paren) os << ')';
    }
    break;
  }
  case SetExpr::Kind::Power:
    os << "pow(" << text(*s.inner) << ')';
    break;
  case SetExpr::Kind::ConstRef:
    os << s.name;
    break;
  case SetExpr::Kind::Comprehension:
    os << "{ " << text(*s.element) << " | " << s.bound << " in "
       << text(*s.source);
    if (!is_true_guard(s.filter)) os << ", " << text(*s.filter);
    os << " }";
    break;
  }
  return os.str();
}

std::string text(const Expr& e) {
  std::ostringstream os;
  switch (e.kind) {
  case Expr::Kind::Lit:
    os << e.lit;
    break;
  case Expr::Kind::Param:
  case Expr::Kind::Var:
    os << e.name;
    break;
  case Expr::Kind::Black:
    os << '.';
    break;
  case Expr::Kind::Tuple: {
    os << '(';
    bool first = true;
    for (const auto& it : e.items) {
      if (!first) os << ',';
      first = false;
      os << text(*it);
    }
    os << ')';
    break;
  }
  case Expr::Kind::Arith:
    os << text(*e.lhs) << ' ' << e.op << ' ' << text(*e.rhs);
    break;
  case Expr::Kind::ConstSet:
    os << text(*e.set);
    break;
  case Expr::Kind::FunApp:
    os << e.name << '(' << text(*e.arg) << ')';
    break;
  case Expr::Kind::Comprehension:
    os << "{ " << text(*e.element) << " | " << e.bound << " in "
       << text(*e.set);
    if (!is_true_guard(e.filter)) os << ", " << text(*e.filter);
    os << " }";
    break;
  }
  return os.str();
}

// Precedence: cmp/true atoms bind tightest, then not, and, or.
static int guard_prec(const Guard& g) {
  switch (g.kind) {
  case Guard::Kind::True:
  case Guard::Kind::Cmp:
    return 3;
  case Guard::Kind::Not:
    return 2;
  case Guard::Kind::And:
    return 1;
  case Guard::Kind::Or:
    return 0;
  }
  return 3;
}

static void guard_text(std::ostringstream& os, const Guard& g, int min_prec) {
  const int p = guard_prec(g);
  const bool paren = p < min_prec;
  if (paren) os << '(';
  switch (g.kind) {
  case Guard::Kind::True:
    os << "true";
    break;
  case Guard::Kind::Cmp:
    os << text(*g.lhs) << ' ' << cmp_text(g.op) << ' ' << text(*g.rhs);
    break;
  case Guard::Kind::Not:
    os << "not ";
    guard_text(os, *g.a, 3);
    break;
  case Guard::Kind::And:
    guard_text(os, *g.a, 1);
    os << " and ";
    guard_text(os, *g.b, 2);
    break;
  case Guard::Kind::Or:
    guard_text(os, *g.a, 0);
    os << " or ";
    guard_text(os, *g.b, 1);
    break;
  }
  if (paren) os << ')';
}

std::string text(const Guard& g) {
  std::ostringstream os;
  guard_text(os, g, 0);
  return os.str();
}

// ---- game lookups ----

int HighLevelGame::place_index(const std::string& n) const {
  for (std::size_t i = 0; i < places.size(); ++i)
    if (places[i].name == n) return static_cast<int>(i);
  return -1;
}

int HighLevelGame::transition_index(const std::string& n) const {
  for (std::size_t i = 0; i < transitions.size(); ++i)
    if (transitions[i].name == n) return static_cast<int>(i);
  return -1;
}

const ConstDecl* HighLevelGame::find_const(const std::string& n) const {
  for (const auto& c : consts)
    if (c.name == n) return &c;
  return nullptr;
}

const VarDecl* HighLevelGame::find_var(const std::string& n) const {
  for (const auto& v : vars)
    if (v.name == n) return &v;
  return nullptr;
}

const FunDecl* HighLevelGame::find_fun(const std::string& n) const {
  for (const auto& f : funs)
    if (f.name == n) return &f;
  return nullptr;
}

bool HighLevelGame::has_param(const std::string& n) const {
  for (const auto& p : params)
    if (p.name == n) return true;
  return false;
}

bool equal(const HighLevelGame& x, const HighLevelGame& y) {
  if (x.name != y.name) return false;
  if (x.params.size() != y.params.size() || x.consts.size() != y.consts.size() ||
      x.vars.size() != y.vars.size() || x.funs.size() != y.funs.size() ||
      x.places.size() != y.places.size() ||
      x.transitions.size() != y.transitions.size())
    return false;
  for (std::size_t i = 0; i < x.params.size(); ++i) {
    if (x.params[i].name != y.params[i].name) return false;
    if (!equal(x.params[i].constraint, y.params[i].constraint)) return false;
  }
  for (std::size_t i = 0; i < x.consts.size(); ++i) {
    if (x.consts[i].name != y.consts[i].name) return false;
    if (!equal_ptr(x.consts[i].body, y.consts[i].body)) return false;
  }
  for (std::size_t i = 0; i < x.vars.size(); ++i) {
    if (x.vars[i].name != y.vars[i].name) return false;
    if (!equal_ptr(x.vars[i].type, y.vars[i].type)) return false;
  }
  for (std::size_t i = 0; i < x.funs.size(); ++i) {
    const auto& a = x.funs[i];
    const auto& b = y.funs[i];
    if (a.name != b.name || a.bound != b.bound) return false;
    if (!equal_ptr(a.domain, b.domain) || !equal_ptr(a.codomain, b.codomain))
      return false;
    if (!equal_ptr(a.body, b.body)) return false;
  }
  for (std::size_t i = 0; i < x.places.size(); ++i) {
    const auto& a = x.places[i];
    const auto& b = y.places[i];
    if (a.name != b.name || a.kind != b.kind || a.bad != b.bad) return false;
    if (!equal_ptr(a.type, b.type)) return false;
    if (a.init.has_value() != b.init.has_value()) return false;
    if (a.init) {
      if (a.init->all != b.init->all) return false;
      if (!std::equal(a.init->entries.begin(), a.init->entries.end(),
                      b.init->entries.begin(), b.init->entries.end(),
                      [](const ExprPtr& u, const ExprPtr& v) {
                        return equal_ptr(u, v);
                      }))
        return false;
    }
  }
  for (std::size_t i = 0; i < x.transitions.size(); ++i) {
    const auto& a = x.transitions[i];
    const auto& b = y.transitions[i];
    if (a.name != b.name) return false;
    if (!equal(a.guard, b.guard)) return false;
    auto arcs_equal = [](const std::vector<Arc>& u, const std::vector<Arc>& v) {
      return std::equal(u.begin(), u.end(), v.begin(), v.end(),
                        [](const Arc& p, const Arc& q) {
                          return p.place == q.place && equal_ptr(p.expr, q.expr);
                        });
    };
    if (a.pre.size() != b.pre.size() || a.post.size() != b.post.size())
      return false;
    if (!arcs_equal(a.pre, b.pre) || !arcs_equal(a.post, b.post)) return false;
  }
  return true;
}

// ---- free variables ----

namespace {

struct VarCollector {
  std::vector<std::string> bound;
  std::set<std::string> free;

  bool is_bound(const std::string& n) const {
    return std::find(bound.begin(), bound.end(), n) != bound.end();
  }

  void walk(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Lit:
    case Expr::Kind::Param:
    case Expr::Kind::Black:
      break;
    case Expr::Kind::Var:
      if (!is_bound(e.name)) free.insert(e.name);
      break;
    case Expr::Kind::Tuple:
      for (const auto& it : e.items) walk(*it);
      break;
    case Expr::Kind::Arith:
      walk(*e.lhs);
      walk(*e.rhs);
      break;
    case Expr::Kind::ConstSet:
      walk(*e.set);
      break;
    case Expr::Kind::FunApp:
      walk(*e.arg);
      break;
    case Expr::Kind::Comprehension:
      walk(*e.set);
      bound.push_back(e.bound);
      walk(*e.element);
      if (e.filter) walk(*e.filter);
      bound.pop_back();
      break;
    }
  }

  void walk(const SetExpr& s) {
    switch (s.kind) {
    case SetExpr::Kind::Range:
    case SetExpr::Kind::Black:
    case SetExpr::Kind::ConstRef:
      break;
    case SetExpr::Kind::Product:
      for (const auto& f : s.factors) walk(*f);
      break;
    case SetExpr::Kind::Power:
      walk(*s.inner);
      break;
    case SetExpr::Kind::Comprehension:
      walk(*s.source);
      bound.push_back(s.bound);
      walk(*s.element);
      if (s.filter) walk(*s.filter);
      bound.pop_back();
      break;
    }
  }

  void walk(const Guard& g) {
    switch (g.kind) {
    case Guard::Kind::True:
      break;
    case Guard::Kind::Cmp:
      walk(*g.lhs);
      walk(*g.rhs);
      break;
    case Guard::Kind::And:
    case Guard::Kind::Or:
      walk(*g.a);
      walk(*g.b);
      break;
    case Guard::Kind::Not:
      walk(*g.a);
      break;
    }
  }
};

} // namespace

std::vector<std::string> free_vars(const Expr& e) {
  VarCollector c;
  c.walk(e);
  return {c.free.begin(), c.free.end()};
}

std::vector<std::string> free_vars(const Transition& t) {
  VarCollector c;
  if (t.guard) c.walk(*t.guard);
  for (const auto& a : t.pre) c.walk(*a.expr);
  for (const auto& a : t.post) c.walk(*a.expr);
  return {c.free.begin(), c.free.end()};
}

// ---- validation ----

namespace {

// Well-formedness walker: reference resolution and shape restrictions,
// independent of types.
struct Validator {
  const HighLevelGame& game;
  std::vector<Diagnostic>& out;
  std::string where;
  std::vector<std::string> scope; // comprehension / maplet binders

  void error(const std::string& msg) {
    out.push_back({Severity::Error, where, msg});
  }

  bool in_scope(const std::string& n) const {
    return std::find(scope.begin(), scope.end(), n) != scope.end();
  }

  void check(const SetExpr& s) {
    switch (s.kind) {
    case SetExpr::Kind::Range:
      if (s.upper.is_literal() && s.upper.offset < 1)
        error("range upper bound must be at least 1");
      if (!s.upper.is_literal() && !game.has_param(s.upper.param))
        error("range bound references undeclared parameter '" + s.upper.param +
              "'");
      break;
    case SetExpr::Kind::Black:
      break;
    case SetExpr::Kind::Product:
      if (s.factors.size() < 2) error("product needs at least two factors");
      for (const auto& f : s.factors) check(*f);
      break;
    case SetExpr::Kind::Power:
      check(*s.inner);
      break;
    case SetExpr::Kind::ConstRef:
      if (!game.find_const(s.name))
        error("reference to undeclared constant '" + s.name + "'");
      break;
    case SetExpr::Kind::Comprehension:
      check(*s.source);
      scope.push_back(s.bound);
      check(*s.element);
      if (s.filter) check(*s.filter);
      scope.pop_back();
      break;
    }
  }

  void check(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Lit:
    case Expr::Kind::Black:
      break;
    case Expr::Kind::Param:
      if (!game.has_param(e.name))
        error("reference to undeclared parameter '" + e.name + "'");
      break;
    case Expr::Kind::Var:
      if (!in_scope(e.name) && !game.find_var(e.name))
        error("reference to undeclared variable '" + e.name + "'");
      break;
    case Expr::Kind::Tuple:
      if (e.items.size() < 2) error("tuples need at least two components");
      for (const auto& it : e.items) check(*it);
      break;
    case Expr::Kind::Arith:
      check(*e.lhs);
      if (e.op != '+' && e.op != '-') error("arithmetic supports only + and -");
      if (e.rhs->kind != Expr::Kind::Lit && e.rhs->kind != Expr::Kind::Param)
        error("right operand of arithmetic must be a literal or parameter");
      check(*e.rhs);
      break;
    case Expr::Kind::ConstSet:
      check(*e.set);
      break;
    case Expr::Kind::FunApp:
      if (!game.find_fun(e.name))
        error("application of undeclared function '" + e.name + "'");
      check(*e.arg);
      break;
    case Expr::Kind::Comprehension:
      check(*e.set);
      scope.push_back(e.bound);
      check(*e.element);
      if (e.filter) check(*e.filter);
      scope.pop_back();
      break;
    }
  }

  void check(const Guard& g) {
    switch (g.kind) {
    case Guard::Kind::True:
      break;
    case Guard::Kind::Cmp:
      check(*g.lhs);
      check(*g.rhs);
      break;
    case Guard::Kind::And:
    case Guard::Kind::Or:
      check(*g.a);
      check(*g.b);
      break;
    case Guard::Kind::Not:
      check(*g.a);
      break;
    }
  }

  // Parameter constraints may mention parameters and literals only.
  void check_param_only(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Lit:
      break;
    case Expr::Kind::Param:
      if (!game.has_param(e.name))
        error("constraint references undeclared parameter '" + e.name + "'");
      break;
    case Expr::Kind::Arith:
      check_param_only(*e.lhs);
      check_param_only(*e.rhs);
      break;
    default:
      error("parameter constraints may only use parameters and literals");
    }
  }

  void check_param_only(const Guard& g) {
    switch (g.kind) {
    case Guard::Kind::True:
      break;
    case Guard::Kind::Cmp:
      check_param_only(*g.lhs);
      check_param_only(*g.rhs);
      break;
    case Guard::Kind::And:
    case Guard::Kind::Or:
      check_param_only(*g.a);
      check_param_only(*g.b);
      break;
    case Guard::Kind::Not:
      check_param_only(*g.a);
      break;
    }
  }
};

// Constants a set expression depends on, for cycle detection.
void const_deps(const SetExpr& s, std::set<std::string>& out);
void const_deps(const Guard& g, std::set<std::string>& out);

void const_deps(const Expr& e, std::set<std::string>& out) {
  switch (e.kind) {
  case Expr::Kind::Tuple:
    for (const auto& it : e.items) const_deps(*it, out);
    break;
  case Expr::Kind::Arith:
    const_deps(*e.lhs, out);
    const_deps(*e.rhs, out);
    break;
  case Expr::Kind::ConstSet:
    const_deps(*e.set, out);
    break;
  case Expr::Kind::FunApp:
    const_deps(*e.arg, out);
    break;
  case Expr::Kind::Comprehension:
    const_deps(*e.set, out);
    const_deps(*e.element, out);
    if (e.filter) const_deps(*e.filter, out);
    break;
  default:
    break;
  }
}

void const_deps(const Guard& g, std::set<std::string>& out) {
  switch (g.kind) {
  case Guard::Kind::Cmp:
    const_deps(*g.lhs, out);
    const_deps(*g.rhs, out);
    break;
  case Guard::Kind::And:
  case Guard::Kind::Or:
    const_deps(*g.a, out);
    const_deps(*g.b, out);
    break;
  case Guard::Kind::Not:
    const_deps(*g.a, out);
    break;
  case Guard::Kind::True:
    break;
  }
}

void const_deps(const SetExpr& s, std::set<std::string>& out) {
  switch (s.kind) {
  case SetExpr::Kind::ConstRef:
    out.insert(s.name);
    break;
  case SetExpr::Kind::Product:
    for (const auto& f : s.factors) const_deps(*f, out);
    break;
  case SetExpr::Kind::Power:
    const_deps(*s.inner, out);
    break;
  case SetExpr::Kind::Comprehension:
    const_deps(*s.source, out);
    const_deps(*s.element, out);
    if (s.filter) const_deps(*s.filter, out);
    break;
  default:
    break;
  }
}

} // namespace

std::vector<Diagnostic> validate(const HighLevelGame& game) {
  std::vector<Diagnostic> out;
  auto error = [&](const std::string& where, const std::string& msg) {
    out.push_back({Severity::Error, where, msg});
  };

  // Declarations referenced from expressions share one namespace.
  {
    std::map<std::string, std::string> seen;
    auto declare = [&](const std::string& name, const std::string& what) {
      auto [it, fresh] = seen.emplace(name, what);
      if (!fresh)
        error(name, "name already used by a " + it->second);
    };
    for (const auto& p : game.params) declare(p.name, "parameter");
    for (const auto& c : game.consts) declare(c.name, "constant");
    for (const auto& v : game.vars) declare(v.name, "variable");
    for (const auto& f : game.funs) declare(f.name, "function");
  }
  {
    std::set<std::string> seen;
    for (const auto& p : game.places)
      if (!seen.insert(p.name).second)
        error(p.name, "duplicate place name");
  }
  {
    std::set<std::string> seen;
    for (const auto& t : game.transitions)
      if (!seen.insert(t.name).second)
        error(t.name, "duplicate transition name");
  }

  Validator v{game, out, "", {}};

  for (const auto& p : game.params) {
    if (p.constraint) {
      v.where = p.name;
      v.check_param_only(*p.constraint);
    }
  }

  // Type-position set expressions must be closed: comprehension binders
  // only, no transition variables.
  auto check_closed = [&](const SetExpr& s, const std::string& where,
                          const char* what) {
    VarCollector fc;
    fc.walk(s);
    for (const auto& n : fc.free)
      error(where, std::string(what) + " references variable '" + n + "'");
  };

  for (const auto& c : game.consts) {
    v.where = c.name;
    v.scope.clear();
    v.check(*c.body);
    check_closed(*c.body, c.name, "constant body");
  }

  // Constant definitions must be acyclic.
  {
    std::map<std::string, int> state; // 0 new, 1 active, 2 done
    std::function<void(const std::string&)> visit = [&](const std::string& n) {
      auto& st = state[n];
      if (st == 1) {
        error(n, "constant definition is cyclic");
        st = 2;
        return;
      }
      if (st == 2) return;
      st = 1;
      if (const ConstDecl* c = game.find_const(n)) {
        std::set<std::string> deps;
        const_deps(*c->body, deps);
        for (const auto& d : deps)
          if (game.find_const(d)) visit(d);
      }
      state[n] = 2;
    };
    for (const auto& c : game.consts) visit(c.name);
  }

  for (const auto& vd : game.vars) {
    v.where = vd.name;
    v.scope.clear();
    v.check(*vd.type);
    check_closed(*vd.type, vd.name, "variable type");
  }

  for (const auto& f : game.funs) {
    v.where = f.name;
    v.scope.clear();
    v.check(*f.domain);
    v.check(*f.codomain);
    check_closed(*f.domain, f.name, "function domain");
    check_closed(*f.codomain, f.name, "function codomain");
    v.scope = {f.bound};
    v.check(*f.body);
    v.scope.clear();
    // The maplet body may use only its own bound variable.
    for (const auto& fv : free_vars(*f.body))
      if (fv != f.bound)
        error(f.name, "function body uses variable '" + fv +
                          "' other than its bound variable");
  }

  bool any_init = false;
  for (const auto& p : game.places) {
    v.where = p.name;
    v.scope.clear();
    v.check(*p.type);
    check_closed(*p.type, p.name, "place type");
    if (p.init) {
      any_init = true;
      if (!p.init->all && p.init->entries.empty())
        error(p.name, "init list is empty");
      for (const auto& e : p.init->entries) {
        v.check(*e);
        auto fv = free_vars(*e);
        if (!fv.empty())
          error(p.name, "init entry '" + text(*e) + "' is not ground");
      }
      for (std::size_t i = 0; i < p.init->entries.size(); ++i)
        for (std::size_t j = i + 1; j < p.init->entries.size(); ++j)
          if (equal(*p.init->entries[i], *p.init->entries[j]))
            error(p.name,
                  "duplicate init entry '" + text(*p.init->entries[i]) + "'");
    }
  }
  if (!any_init)
    error(game.name.empty() ? "game" : game.name,
          "no place is initially marked");

  for (const auto& t : game.transitions) {
    v.where = t.name;
    v.scope.clear();
    if (t.guard) v.check(*t.guard);
    auto check_side = [&](const std::vector<Arc>& arcs, const char* side) {
      std::set<std::string> seen;
      for (const auto& a : arcs) {
        if (game.place_index(a.place) < 0)
          error(t.name, std::string(side) + " arc references undeclared place '" +
                            a.place + "'");
        if (!seen.insert(a.place).second)
          error(t.name, std::string("duplicate ") + side + " arc for place '" +
                            a.place + "'");
        v.check(*a.expr);
      }
    };
    check_side(t.pre, "input");
    check_side(t.post, "output");
  }

  return out;
}

// ---- construction helpers ----

ExprPtr mk_lit(std::int64_t v) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Lit;
  e->lit = v;
  return e;
}

ExprPtr mk_param(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Param;
  e->name = std::move(name);
  return e;
}

ExprPtr mk_black() {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Black;
  return e;
}

ExprPtr mk_var(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Var;
  e->name = std::move(name);
  return e;
}

ExprPtr mk_tuple(std::vector<ExprPtr> items) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Tuple;
  e->items = std::move(items);
  return e;
}

ExprPtr mk_arith(ExprPtr lhs, char op, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Arith;
  e->lhs = std::move(lhs);
  e->op = op;
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr mk_const(std::string constant_name) {
  return mk_set_value(set_ref(std::move(constant_name)));
}

ExprPtr mk_set_value(SetExprPtr set) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::ConstSet;
  e->set = std::move(set);
  return e;
}

ExprPtr mk_funapp(std::string fun, ExprPtr arg) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::FunApp;
  e->name = std::move(fun);
  e->arg = std::move(arg);
  return e;
}

ExprPtr mk_compr(std::string bound, ExprPtr element, SetExprPtr source,
                 GuardPtr filter) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Comprehension;
  e->bound = std::move(bound);
  e->element = std::move(element);
  e->set = std::move(source);
  e->filter = std::move(filter);
  return e;
}

SetExprPtr set_range(IntTerm upper) {
  auto s = std::make_shared<SetExpr>();
  s->kind = SetExpr::Kind::Range;
  s->upper = std::move(upper);
  return s;
}

SetExprPtr set_range_lit(std::int64_t upper) {
  return set_range(IntTerm{"", upper});
}

SetExprPtr set_range_param(std::string param, std::int64_t offset) {
  return set_range(IntTerm{std::move(param), offset});
}

SetExprPtr set_black() {
  auto s = std::make_shared<SetExpr>();
  s->kind = SetExpr::Kind::Black;
  return s;
}

SetExprPtr set_product(std::vector<SetExprPtr> factors) {
  auto s = std::make_shared<SetExpr>();
  s->kind = SetExpr::Kind::Product;
  s->factors = std::move(factors);
  return s;
}

SetExprPtr set_power(SetExprPtr inner) {
  auto s = std::make_shared<SetExpr>();
  s->kind = SetExpr::Kind::Power;
  s->inner = std::move(inner);
  return s;
}

SetExprPtr set_ref(std::string constant_name) {
  auto s = std::make_shared<SetExpr>();
  s->kind = SetExpr::Kind::ConstRef;
  s->name = std::move(constant_name);
  return s;
}

SetExprPtr set_compr(std::string bound, ExprPtr element, SetExprPtr source,
                     GuardPtr filter) {
  auto s = std::make_shared<SetExpr>();
  s->kind = SetExpr::Kind::Comprehension;
  s->bound = std::move(bound);
  s->element = std::move(element);
  s->source = std::move(source);
  s->filter = std::move(filter);
  return s;
}

GuardPtr g_true() {
  auto g = std::make_shared<Guard>();
  g->kind = Guard::Kind::True;
  return g;
}

GuardPtr g_cmp(ExprPtr lhs, CmpOp op, ExprPtr rhs) {
  auto g = std::make_shared<Guard>();
  g->kind = Guard::Kind::Cmp;
  g->op = op;
  g->lhs = std::move(lhs);
  g->rhs = std::move(rhs);
  return g;
}

GuardPtr g_and(GuardPtr a, GuardPtr b) {
  auto g = std::make_shared<Guard>();
  g->kind = Guard::Kind::And;
  g->a = std::move(a);
  g->b = std::move(b);
  return g;
}

GuardPtr g_or(GuardPtr a, GuardPtr b) {
  auto g = std::make_shared<Guard>();
  g->kind = Guard::Kind::Or;
  g->a = std::move(a);
  g->b = std::move(b);
  return g;
}

GuardPtr g_not(GuardPtr a) {
  auto g = std::make_shared<Guard>();
  g->kind = Guard::Kind::Not;
  g->a = std::move(a);
  return g;
}

ExprPtr set_minus(SetExprPtr source, std::vector<ExprPtr> removed) {
  std::set<std::string> avoid;
  for (const auto& r : removed)
    for (const auto& fv : free_vars(*r)) avoid.insert(fv);
  std::string fresh = "q";
  for (int i = 0; avoid.count(fresh); ++i) fresh = "q" + std::to_string(i);

  GuardPtr filter;
  for (const auto& r : removed) {
    GuardPtr ne = g_cmp(mk_var(fresh), CmpOp::Ne, r);
    filter = filter ? g_and(std::move(filter), std::move(ne)) : std::move(ne);
  }
  return mk_compr(fresh, mk_var(fresh), std::move(source), std::move(filter));
}

} // namespace hlpg
