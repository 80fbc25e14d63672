#include "hlpg/eval.hpp"

#include <algorithm>
#include <sstream>

namespace hlpg {

// ---- small accessors ----

std::int64_t ParamEnv::at(const std::string& name) const {
  auto it = values.find(name);
  if (it == values.end())
    throw EvalError("parameter '" + name + "' is not bound");
  return it->second;
}

bool ConcreteType::contains(const Token& t) const {
  return std::binary_search(elements.begin(), elements.end(), t);
}

int ConcreteType::index_of(const Token& t) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), t);
  if (it == elements.end() || !(*it == t)) return -1;
  return static_cast<int>(it - elements.begin());
}

bool Type::operator==(const Type& other) const {
  if (kind != other.kind) return false;
  if (items.size() != other.items.size()) return false;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (!(items[i] == other.items[i])) return false;
  return true;
}

std::string text(const Type& t) {
  switch (t.kind) {
  case Type::Kind::Num:
    return "num";
  case Type::Kind::Black:
    return "black";
  case Type::Kind::Tuple: {
    std::string s = "(";
    for (std::size_t i = 0; i < t.items.size(); ++i) {
      if (i) s += "*";
      s += text(t.items[i]);
    }
    return s + ")";
  }
  case Type::Kind::Set:
    return "pow(" + text(t.items[0]) + ")";
  }
  return "?";
}

const Token& Valuation::at(const std::string& name) const {
  auto it = bindings.find(name);
  if (it == bindings.end())
    throw EvalError("variable '" + name + "' is not bound");
  return it->second;
}

std::string Valuation::text() const {
  std::string s;
  for (const auto& [name, tok] : bindings) {
    if (!s.empty()) s += ",";
    s += name + "=" + tok.text();
  }
  return s;
}

// ---- parameter binding checks ----

namespace {

// Constraints are restricted to parameters and literals (validate
// enforces this), so they evaluate without an Elaboration.
std::int64_t eval_param_expr(const Expr& e, const ParamEnv& env) {
  switch (e.kind) {
  case Expr::Kind::Lit:
    return e.lit;
  case Expr::Kind::Param:
    return env.at(e.name);
  case Expr::Kind::Arith: {
    std::int64_t l = eval_param_expr(*e.lhs, env);
    std::int64_t r = eval_param_expr(*e.rhs, env);
    return e.op == '+' ? l + r : l - r;
  }
  default:
    throw EvalError("parameter constraint contains a non-parameter term");
  }
}

bool eval_param_guard(const Guard& g, const ParamEnv& env) {
  switch (g.kind) {
  case Guard::Kind::True:
    return true;
  case Guard::Kind::Cmp: {
    std::int64_t l = eval_param_expr(*g.lhs, env);
    std::int64_t r = eval_param_expr(*g.rhs, env);
    switch (g.op) {
    case CmpOp::Eq: return l == r;
    case CmpOp::Ne: return l != r;
    case CmpOp::Lt: return l < r;
    case CmpOp::Le: return l <= r;
    case CmpOp::Gt: return l > r;
    case CmpOp::Ge: return l >= r;
    }
    return false;
  }
  case Guard::Kind::And:
    return eval_param_guard(*g.a, env) && eval_param_guard(*g.b, env);
  case Guard::Kind::Or:
    return eval_param_guard(*g.a, env) || eval_param_guard(*g.b, env);
  case Guard::Kind::Not:
    return !eval_param_guard(*g.a, env);
  }
  return false;
}

} // namespace

std::vector<Diagnostic> check_params(const HighLevelGame& game,
                                     const ParamEnv& env) {
  std::vector<Diagnostic> out;
  for (const auto& p : game.params) {
    if (!env.has(p.name)) {
      out.push_back({Severity::Error, p.name,
                     "parameter '" + p.name + "' is not bound"});
      continue;
    }
    if (env.values.at(p.name) < 1)
      out.push_back({Severity::Error, p.name,
                     "parameter '" + p.name + "' must be at least 1"});
  }
  for (const auto& [name, value] : env.values) {
    (void)value;
    if (!game.has_param(name))
      out.push_back({Severity::Error, name, "unknown parameter '" + name + "'"});
  }
  if (!out.empty()) return out;
  for (const auto& p : game.params) {
    if (p.constraint && !eval_param_guard(*p.constraint, env))
      out.push_back({Severity::Error, p.name,
                     "parameter constraint '" + text(*p.constraint) +
                         "' violated"});
  }
  return out;
}

// ---- static typing ----

namespace {

struct Typechecker {
  const HighLevelGame& game;
  std::vector<Diagnostic>& diags;

  void error(const std::string& where, const std::string& msg) {
    diags.push_back({Severity::Error, where, msg});
  }

  std::optional<Type> set_elem(const SetExpr& s,
                               const std::map<std::string, Type>& locals,
                               const std::string& where, int depth = 0) {
    if (depth > 64) {
      error(where, "constant definitions nest too deeply");
      return std::nullopt;
    }
    switch (s.kind) {
    case SetExpr::Kind::Range:
      return Type::num();
    case SetExpr::Kind::Black:
      return Type::black();
    case SetExpr::Kind::Product: {
      std::vector<Type> parts;
      for (const auto& f : s.factors) {
        auto t = set_elem(*f, locals, where, depth + 1);
        if (!t) return std::nullopt;
        parts.push_back(std::move(*t));
      }
      return Type::tuple(std::move(parts));
    }
    case SetExpr::Kind::Power: {
      auto t = set_elem(*s.inner, locals, where, depth + 1);
      if (!t) return std::nullopt;
      return Type::set(std::move(*t));
    }
    case SetExpr::Kind::ConstRef: {
      const ConstDecl* c = game.find_const(s.name);
      if (!c) {
        error(where, "reference to undeclared constant '" + s.name + "'");
        return std::nullopt;
      }
      return set_elem(*c->body, {}, where, depth + 1);
    }
    case SetExpr::Kind::Comprehension: {
      auto src = set_elem(*s.source, locals, where, depth + 1);
      if (!src) return std::nullopt;
      auto inner = locals;
      inner[s.bound] = *src;
      if (s.filter && !guard_ok(*s.filter, inner, where)) return std::nullopt;
      return expr_type(*s.element, inner, where, depth + 1);
    }
    }
    return std::nullopt;
  }

  std::optional<Type> expr_type(const Expr& e,
                                const std::map<std::string, Type>& locals,
                                const std::string& where, int depth = 0) {
    switch (e.kind) {
    case Expr::Kind::Lit:
    case Expr::Kind::Param:
      return Type::num();
    case Expr::Kind::Black:
      return Type::black();
    case Expr::Kind::Var: {
      auto it = locals.find(e.name);
      if (it != locals.end()) return it->second;
      if (const VarDecl* v = game.find_var(e.name))
        return set_elem(*v->type, {}, where, depth + 1);
      error(where, "reference to undeclared variable '" + e.name + "'");
      return std::nullopt;
    }
    case Expr::Kind::Tuple: {
      std::vector<Type> parts;
      for (const auto& it : e.items) {
        auto t = expr_type(*it, locals, where, depth + 1);
        if (!t) return std::nullopt;
        parts.push_back(std::move(*t));
      }
      return Type::tuple(std::move(parts));
    }
    case Expr::Kind::Arith: {
      auto l = expr_type(*e.lhs, locals, where, depth + 1);
      auto r = expr_type(*e.rhs, locals, where, depth + 1);
      if (!l || !r) return std::nullopt;
      if (l->kind != Type::Kind::Num || r->kind != Type::Kind::Num) {
        error(where, "arithmetic needs number operands");
        return std::nullopt;
      }
      return Type::num();
    }
    case Expr::Kind::ConstSet: {
      auto t = set_elem(*e.set, locals, where, depth + 1);
      if (!t) return std::nullopt;
      return Type::set(std::move(*t));
    }
    case Expr::Kind::FunApp: {
      const FunDecl* f = game.find_fun(e.name);
      if (!f) {
        error(where, "application of undeclared function '" + e.name + "'");
        return std::nullopt;
      }
      auto at = expr_type(*e.arg, locals, where, depth + 1);
      auto dom = set_elem(*f->domain, {}, where, depth + 1);
      auto cod = set_elem(*f->codomain, {}, where, depth + 1);
      if (!at || !dom || !cod) return std::nullopt;
      if (!(*at == *dom)) {
        error(where, "argument of '" + e.name + "' has type " + text(*at) +
                         ", expected " + text(*dom));
        return std::nullopt;
      }
      return cod;
    }
    case Expr::Kind::Comprehension: {
      auto src = set_elem(*e.set, locals, where, depth + 1);
      if (!src) return std::nullopt;
      auto inner = locals;
      inner[e.bound] = *src;
      if (e.filter && !guard_ok(*e.filter, inner, where)) return std::nullopt;
      auto el = expr_type(*e.element, inner, where, depth + 1);
      if (!el) return std::nullopt;
      return Type::set(std::move(*el));
    }
    }
    return std::nullopt;
  }

  bool guard_ok(const Guard& g, const std::map<std::string, Type>& locals,
                const std::string& where) {
    switch (g.kind) {
    case Guard::Kind::True:
      return true;
    case Guard::Kind::Cmp: {
      auto l = expr_type(*g.lhs, locals, where);
      auto r = expr_type(*g.rhs, locals, where);
      if (!l || !r) return false;
      if (!(*l == *r)) {
        error(where, "comparison operands have types " + text(*l) + " and " +
                         text(*r));
        return false;
      }
      if (g.op != CmpOp::Eq && g.op != CmpOp::Ne &&
          l->kind != Type::Kind::Num) {
        error(where, "order comparison needs number operands");
        return false;
      }
      return true;
    }
    case Guard::Kind::And:
    case Guard::Kind::Or:
      return guard_ok(*g.a, locals, where) & guard_ok(*g.b, locals, where);
    case Guard::Kind::Not:
      return guard_ok(*g.a, locals, where);
    }
    return false;
  }
};

std::optional<ArcMode> mode_for(const Type& expr_type, const Type& place_type) {
  if (expr_type == place_type) return ArcMode::Element;
  if (expr_type.kind == Type::Kind::Set && expr_type.items[0] == place_type)
    return ArcMode::SetValued;
  return std::nullopt;
}

} // namespace

std::optional<Type> elem_type(const SetExpr& s, const HighLevelGame& game,
                              std::vector<Diagnostic>& diags,
                              const std::map<std::string, Type>& locals,
                              const std::string& where) {
  Typechecker tc{game, diags};
  return tc.set_elem(s, locals, where);
}

std::optional<Type> type_of(const Expr& e, const HighLevelGame& game,
                            std::vector<Diagnostic>& diags,
                            const std::map<std::string, Type>& locals,
                            const std::string& where) {
  Typechecker tc{game, diags};
  return tc.expr_type(e, locals, where);
}

std::vector<Diagnostic> typecheck_game(const HighLevelGame& game) {
  std::vector<Diagnostic> diags;
  Typechecker tc{game, diags};

  for (const auto& f : game.funs) {
    auto dom = tc.set_elem(*f.domain, {}, f.name);
    auto cod = tc.set_elem(*f.codomain, {}, f.name);
    if (!dom || !cod) continue;
    std::map<std::string, Type> locals{{f.bound, *dom}};
    auto body = tc.expr_type(*f.body, locals, f.name);
    if (body && !(*body == *cod))
      tc.error(f.name, "function body has type " + text(*body) +
                           ", codomain expects " + text(*cod));
  }

  auto arc_check = [&](const Transition& t, const Arc& a) {
    int pi = game.place_index(a.place);
    if (pi < 0) return; // validate reports this
    auto pt = tc.set_elem(*game.places[pi].type, {}, a.place);
    auto et = tc.expr_type(*a.expr, {}, t.name);
    if (!pt || !et) return;
    if (!mode_for(*et, *pt))
      tc.error(t.name, "arc expression '" + text(*a.expr) + "' has type " +
                           text(*et) + ", place '" + a.place + "' holds " +
                           text(*pt));
  };

  for (const auto& t : game.transitions) {
    if (t.guard) tc.guard_ok(*t.guard, {}, t.name);
    for (const auto& a : t.pre) arc_check(t, a);
    for (const auto& a : t.post) arc_check(t, a);
  }

  for (const auto& p : game.places) {
    if (!p.init || p.init->all) continue;
    auto pt = tc.set_elem(*p.type, {}, p.name);
    if (!pt) continue;
    for (const auto& e : p.init->entries) {
      auto et = tc.expr_type(*e, {}, p.name);
      if (et && !mode_for(*et, *pt))
        tc.error(p.name, "init entry '" + text(*e) + "' has type " + text(*et) +
                             ", place holds " + text(*pt));
    }
  }

  return diags;
}

// ---- evaluation ----

namespace {

constexpr std::size_t kTypeSizeCap = std::size_t{1} << 20;

struct Ctx {
  const HighLevelGame& game;
  const ParamEnv& env;
  const Limits& limits;
  const std::map<std::string, ConcreteType>* cache; // constant lookups
  std::map<std::string, ConcreteType>* fill;        // miss target, may be null
  std::vector<std::string> active;                  // constants being elaborated

  ConcreteType elab(const SetExpr& s, const Valuation& v);
  Token eval(const Expr& e, const Valuation& v);
  bool evalg(const Guard& g, const Valuation& v);
};

ConcreteType Ctx::elab(const SetExpr& s, const Valuation& v) {
  switch (s.kind) {
  case SetExpr::Kind::Range: {
    std::int64_t hi = s.upper.is_literal()
                          ? s.upper.offset
                          : env.at(s.upper.param) + s.upper.offset;
    if (hi < 1)
      throw EvalError("range {1.." + text(s.upper) + "} is empty");
    if (static_cast<std::size_t>(hi) > kTypeSizeCap)
      throw LimitError("range {1.." + text(s.upper) + "} is too large");
    ConcreteType t;
    t.elements.reserve(static_cast<std::size_t>(hi));
    for (std::int64_t i = 1; i <= hi; ++i) t.elements.push_back(Token::num(i));
    return t;
  }
  case SetExpr::Kind::Black:
    return ConcreteType{{Token::black()}};
  case SetExpr::Kind::Product: {
    std::vector<ConcreteType> factors;
    std::size_t total = 1;
    for (const auto& f : s.factors) {
      factors.push_back(elab(*f, v));
      total *= std::max<std::size_t>(factors.back().size(), 1);
      if (total > kTypeSizeCap)
        throw LimitError("product type '" + text(s) + "' is too large");
    }
    ConcreteType out;
    for (const auto& f : factors)
      if (f.size() == 0) return out; // empty factor, empty product
    std::vector<std::size_t> idx(factors.size(), 0);
    for (;;) {
      std::vector<Token> parts;
      parts.reserve(factors.size());
      for (std::size_t i = 0; i < factors.size(); ++i)
        parts.push_back(factors[i].elements[idx[i]]);
      out.elements.push_back(Token::tup(std::move(parts)));
      // odometer, last factor fastest: yields canonical (sorted) order
      std::size_t k = factors.size();
      while (k > 0 && ++idx[k - 1] == factors[k - 1].size()) {
        idx[k - 1] = 0;
        --k;
      }
      if (k == 0) return out;
    }
  }
  case SetExpr::Kind::Power: {
    ConcreteType base = elab(*s.inner, v);
    if (base.size() > limits.powerset_bound)
      throw LimitError("powerset base '" + text(*s.inner) + "' has " +
                       std::to_string(base.size()) + " elements, bound is " +
                       std::to_string(limits.powerset_bound));
    ConcreteType out;
    const std::size_t n = base.size();
    out.elements.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Token> elems;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) elems.push_back(base.elements[i]);
      out.elements.push_back(Token::set(std::move(elems)));
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
  }
  case SetExpr::Kind::ConstRef: {
    if (cache) {
      auto it = cache->find(s.name);
      if (it != cache->end()) return it->second;
    }
    const ConstDecl* c = game.find_const(s.name);
    if (!c) throw EvalError("undeclared constant '" + s.name + "'");
    if (std::find(active.begin(), active.end(), s.name) != active.end())
      throw EvalError("constant '" + s.name + "' is defined cyclically");
    active.push_back(s.name);
    ConcreteType t = elab(*c->body, Valuation{});
    active.pop_back();
    if (fill) fill->emplace(s.name, t);
    return t;
  }
  case SetExpr::Kind::Comprehension: {
    ConcreteType src = elab(*s.source, v);
    std::vector<Token> elems;
    for (const auto& d : src.elements) {
      Valuation inner = v;
      inner.bindings[s.bound] = d;
      if (s.filter && !evalg(*s.filter, inner)) continue;
      elems.push_back(eval(*s.element, inner));
    }
    ConcreteType out;
    Token as_set = Token::set(std::move(elems)); // sorts and dedups
    out.elements = as_set.elements();
    return out;
  }
  }
  throw EvalError("malformed set expression");
}

Token Ctx::eval(const Expr& e, const Valuation& v) {
  switch (e.kind) {
  case Expr::Kind::Lit:
    return Token::num(e.lit);
  case Expr::Kind::Param:
    return Token::num(env.at(e.name));
  case Expr::Kind::Black:
    return Token::black();
  case Expr::Kind::Var:
    return v.at(e.name);
  case Expr::Kind::Tuple: {
    std::vector<Token> parts;
    parts.reserve(e.items.size());
    for (const auto& it : e.items) parts.push_back(eval(*it, v));
    return Token::tup(std::move(parts));
  }
  case Expr::Kind::Arith: {
    Token l = eval(*e.lhs, v);
    Token r = eval(*e.rhs, v);
    if (!l.is_num() || !r.is_num())
      throw EvalError("arithmetic on non-number in '" + text(e) + "'");
    std::int64_t res =
        e.op == '+' ? l.value() + r.value() : l.value() - r.value();
    if (res < 1)
      throw EvalError("arithmetic result " + std::to_string(res) + " of '" +
                      text(e) + "' is below 1");
    return Token::num(res);
  }
  case Expr::Kind::ConstSet: {
    ConcreteType t = elab(*e.set, v);
    return Token::set(t.elements);
  }
  case Expr::Kind::FunApp: {
    const FunDecl* f = game.find_fun(e.name);
    if (!f) throw EvalError("undeclared function '" + e.name + "'");
    Token arg = eval(*e.arg, v);
    ConcreteType dom = elab(*f->domain, Valuation{});
    if (!dom.contains(arg))
      throw EvalError("argument " + arg.text() + " of '" + e.name +
                      "' is outside its domain");
    Valuation inner;
    inner.bindings[f->bound] = std::move(arg);
    return eval(*f->body, inner);
  }
  case Expr::Kind::Comprehension: {
    ConcreteType src = elab(*e.set, v);
    std::vector<Token> elems;
    for (const auto& d : src.elements) {
      Valuation inner = v;
      inner.bindings[e.bound] = d;
      if (e.filter && !evalg(*e.filter, inner)) continue;
      elems.push_back(eval(*e.element, inner));
    }
    return Token::set(std::move(elems));
  }
  }
  throw EvalError("malformed expression");
}

bool Ctx::evalg(const Guard& g, const Valuation& v) {
  switch (g.kind) {
  case Guard::Kind::True:
    return true;
  case Guard::Kind::Cmp: {
    Token l = eval(*g.lhs, v);
    Token r = eval(*g.rhs, v);
    switch (g.op) {
    case CmpOp::Eq:
      return l == r;
    case CmpOp::Ne:
      return !(l == r);
    default:
      break;
    }
    if (!l.is_num() || !r.is_num())
      throw EvalError("order comparison on non-numbers in '" + text(g) + "'");
    switch (g.op) {
    case CmpOp::Lt: return l.value() < r.value();
    case CmpOp::Le: return l.value() <= r.value();
    case CmpOp::Gt: return l.value() > r.value();
    case CmpOp::Ge: return l.value() >= r.value();
    default: return false;
    }
  }
  case Guard::Kind::And:
    return evalg(*g.a, v) && evalg(*g.b, v);
  case Guard::Kind::Or:
    return evalg(*g.a, v) || evalg(*g.b, v);
  case Guard::Kind::Not:
    return !evalg(*g.a, v);
  }
  return false;
}

} // namespace

// ---- Elaboration ----

Elaboration Elaboration::build(const HighLevelGame& game, const ParamEnv& env,
                               const Limits& limits) {
  auto fail_on = [](const std::vector<Diagnostic>& diags, const char* what) {
    for (const auto& d : diags)
      if (d.severity == Severity::Error)
        throw EvalError(std::string(what) + ": " + d.where + ": " + d.message);
  };
  fail_on(validate(game), "invalid game");
  fail_on(check_params(game, env), "bad parameter binding");
  fail_on(typecheck_game(game), "type error");

  Elaboration out;
  out.game_ = game;
  out.env_ = env;
  out.limits_ = limits;

  Ctx ctx{out.game_, out.env_, out.limits_, &out.consts_, &out.consts_, {}};
  for (const auto& c : game.consts)
    ctx.elab(*set_ref(c.name), Valuation{}); // fills the memo

  for (const auto& v : game.vars)
    out.var_types_.emplace(v.name, ctx.elab(*v.type, Valuation{}));

  std::vector<Diagnostic> scratch;
  Typechecker tc{game, scratch};

  out.place_types_.reserve(game.places.size());
  for (const auto& p : game.places)
    out.place_types_.push_back(ctx.elab(*p.type, Valuation{}));

  out.init_tokens_.resize(game.places.size());
  for (std::size_t i = 0; i < game.places.size(); ++i) {
    const Place& p = game.places[i];
    if (!p.init) continue;
    const ConcreteType& pt = out.place_types_[i];
    if (p.init->all) {
      out.init_tokens_[i] = pt.elements;
      continue;
    }
    auto place_ty = tc.set_elem(*p.type, {}, p.name);
    std::vector<Token> acc;
    for (const auto& entry : p.init->entries) {
      auto et = tc.expr_type(*entry, {}, p.name);
      auto mode = (et && place_ty) ? mode_for(*et, *place_ty) : std::nullopt;
      if (!mode) throw EvalError("init entry of '" + p.name + "' is ill-typed");
      Token val = ctx.eval(*entry, Valuation{});
      std::vector<Token> toks = *mode == ArcMode::Element
                                    ? std::vector<Token>{std::move(val)}
                                    : val.elements();
      for (auto& tok : toks) {
        if (!pt.contains(tok))
          throw EvalError("initial token " + tok.text() +
                          " is outside the type of place '" + p.name + "'");
        if (std::find(acc.begin(), acc.end(), tok) != acc.end())
          throw EvalError("duplicate initial token " + tok.text() +
                          " on place '" + p.name + "'");
        acc.push_back(std::move(tok));
      }
    }
    std::sort(acc.begin(), acc.end());
    out.init_tokens_[i] = std::move(acc);
  }

  out.pre_modes_.resize(game.transitions.size());
  out.post_modes_.resize(game.transitions.size());
  for (std::size_t ti = 0; ti < game.transitions.size(); ++ti) {
    const Transition& t = game.transitions[ti];
    auto modes_of = [&](const std::vector<Arc>& arcs) {
      std::vector<ArcMode> modes;
      for (const auto& a : arcs) {
        int pi = game.place_index(a.place);
        auto pt = tc.set_elem(*game.places[pi].type, {}, a.place);
        auto et = tc.expr_type(*a.expr, {}, t.name);
        auto mode = (et && pt) ? mode_for(*et, *pt) : std::nullopt;
        if (!mode)
          throw EvalError("arc of '" + t.name + "' to place '" + a.place +
                          "' is ill-typed");
        modes.push_back(*mode);
      }
      return modes;
    };
    out.pre_modes_[ti] = modes_of(t.pre);
    out.post_modes_[ti] = modes_of(t.post);
  }

  return out;
}

const ConcreteType& Elaboration::const_type(const std::string& name) const {
  auto it = consts_.find(name);
  if (it == consts_.end())
    throw EvalError("undeclared constant '" + name + "'");
  return it->second;
}

const ConcreteType& Elaboration::var_type(const std::string& name) const {
  auto it = var_types_.find(name);
  if (it == var_types_.end())
    throw EvalError("undeclared variable '" + name + "'");
  return it->second;
}

const ConcreteType& Elaboration::place_type(std::size_t place_idx) const {
  return place_types_.at(place_idx);
}

const std::vector<Token>& Elaboration::init_tokens(std::size_t place_idx) const {
  return init_tokens_.at(place_idx);
}

ArcMode Elaboration::pre_mode(std::size_t trans_idx, std::size_t arc_idx) const {
  return pre_modes_.at(trans_idx).at(arc_idx);
}

ArcMode Elaboration::post_mode(std::size_t trans_idx,
                               std::size_t arc_idx) const {
  return post_modes_.at(trans_idx).at(arc_idx);
}

ConcreteType elaborate_type(const SetExpr& s, const Elaboration& e) {
  Ctx ctx{e.game_, e.env_, e.limits_, &e.consts_, nullptr, {}};
  return ctx.elab(s, Valuation{});
}

ConcreteType elaborate_type(const SetExpr& s, const HighLevelGame& game,
                            const ParamEnv& env, const Limits& limits) {
  std::map<std::string, ConcreteType> memo;
  Ctx ctx{game, env, limits, &memo, &memo, {}};
  return ctx.elab(s, Valuation{});
}

Token eval_expr(const Expr& e, const Valuation& v, const Elaboration& elab) {
  Ctx ctx{elab.game(), elab.env(), elab.limits(), &elab.consts_, nullptr, {}};
  return ctx.eval(e, v);
}

bool eval_guard(const Guard& g, const Valuation& v, const Elaboration& elab) {
  Ctx ctx{elab.game(), elab.env(), elab.limits(), &elab.consts_, nullptr, {}};
  return ctx.evalg(g, v);
}

bool eval_guard(const GuardPtr& g, const Valuation& v,
                const Elaboration& elab) {
  if (!g) return true;
  return eval_guard(*g, v, elab);
}

std::vector<Token> eval_arc(const Arc& arc, ArcMode mode, const Valuation& v,
                            const Elaboration& ctx) {
  int pi = ctx.game().place_index(arc.place);
  if (pi < 0) throw EvalError("arc references undeclared place '" + arc.place + "'");
  const ConcreteType& pt = ctx.place_type(static_cast<std::size_t>(pi));

  Token val = eval_expr(*arc.expr, v, ctx);
  std::vector<Token> toks;
  if (mode == ArcMode::Element) {
    toks.push_back(std::move(val));
  } else {
    if (!val.is_set())
      throw EvalError("set-typed arc '" + text(*arc.expr) +
                      "' evaluated to a non-set");
    toks = val.elements();
  }
  for (const auto& t : toks)
    if (!pt.contains(t))
      throw EvalError("token " + t.text() + " from arc '" + text(*arc.expr) +
                      "' is outside the type of place '" + arc.place + "'");
  std::sort(toks.begin(), toks.end());
  return toks;
}

std::vector<Valuation> enumerate_valuations(const Transition& t,
                                            const Elaboration& ctx) {
  const std::vector<std::string> vars = free_vars(t);
  std::vector<const ConcreteType*> domains;
  domains.reserve(vars.size());
  std::size_t count = 1;
  for (const auto& name : vars) {
    const ConcreteType& d = ctx.var_type(name);
    if (d.size() == 0) return {}; // empty domain: no valuations
    count *= d.size();            // bounded by max_valuations * kTypeSizeCap
    if (count > ctx.limits().max_valuations)
      throw LimitError("transition '" + t.name +
                       "' exceeds the valuation limit of " +
                       std::to_string(ctx.limits().max_valuations));
    domains.push_back(&d);
  }

  std::vector<Valuation> out;
  out.reserve(count);
  std::vector<std::size_t> idx(vars.size(), 0);
  for (;;) {
    Valuation v;
    for (std::size_t i = 0; i < vars.size(); ++i)
      v.bindings.emplace(vars[i], domains[i]->elements[idx[i]]);
    out.push_back(std::move(v));
    std::size_t k = vars.size();
    while (k > 0 && ++idx[k - 1] == domains[k - 1]->size()) {
      idx[k - 1] = 0;
      --k;
    }
    if (k == 0) return out;
  }
}

} // namespace hlpg
