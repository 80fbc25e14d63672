#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hlpg {

struct SetExpr;
struct Expr;
struct Guard;
using SetExprPtr = std::shared_ptr<const SetExpr>;
using ExprPtr = std::shared_ptr<const Expr>;
using GuardPtr = std::shared_ptr<const Guard>;

// Integer term usable where a range bound is expected: a literal, a
// parameter, or parameter plus a constant offset. value() needs the
// parameter environment.
struct IntTerm {
  std::string param;       // empty for a pure literal
  std::int64_t offset = 0; // the literal itself, or the offset added to param

  bool is_literal() const { return param.empty(); }
  bool operator==(const IntTerm&) const = default;
};

// A set expression: the type language. Ranges {1..b}, the black singleton,
// finite products, powersets, references to declared constants, and
// comprehensions { e | x in S, g }.
struct SetExpr {
  enum class Kind { Range, Black, Product, Power, ConstRef, Comprehension };

  Kind kind;
  IntTerm upper;                   // Range
  std::vector<SetExprPtr> factors; // Product, size >= 2
  SetExprPtr inner;                // Power
  std::string name;                // ConstRef
  std::string bound;               // Comprehension
  ExprPtr element;                 // Comprehension
  SetExprPtr source;               // Comprehension
  GuardPtr filter;                 // Comprehension, may be null
};

// A token expression appearing on arcs, in init lists, guards and
// function bodies.
struct Expr {
  enum class Kind {
    Lit,          // integer literal
    Param,        // parameter used as a literal
    Black,        // the black token
    Var,          // variable reference (free or comprehension-bound)
    Tuple,        // (e1,...,ek), k >= 2
    Arith,        // e + c or e - c with c a literal or parameter
    ConstSet,     // a whole set as a value: constant name or inline set expr
    FunApp,       // F(e)
    Comprehension // { e | x in S, g }
  };

  Kind kind;
  std::int64_t lit = 0;        // Lit
  std::string name;            // Param, Var, FunApp (function name)
  std::vector<ExprPtr> items;  // Tuple
  char op = '+';               // Arith
  ExprPtr lhs, rhs;            // Arith (rhs restricted to Lit/Param)
  SetExprPtr set;              // ConstSet, Comprehension source
  ExprPtr arg;                 // FunApp
  std::string bound;           // Comprehension
  ExprPtr element;             // Comprehension
  GuardPtr filter;             // Comprehension, may be null
};

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

struct Guard {
  enum class Kind { True, Cmp, And, Or, Not };

  Kind kind;
  CmpOp op = CmpOp::Eq; // Cmp
  ExprPtr lhs, rhs;     // Cmp
  GuardPtr a, b;        // And/Or both, Not only a
};

// Deep structural equality.
bool equal(const SetExpr& x, const SetExpr& y);
bool equal(const Expr& x, const Expr& y);
bool equal(const Guard& x, const Guard& y);
bool equal(const GuardPtr& x, const GuardPtr& y); // null == null == True? no: pointer-aware, null only equals null

// Canonical source text, shared by the DSL printer, diagnostics and the
// dot exporters.
std::string text(const IntTerm& t);
std::string text(const SetExpr& s);
std::string text(const Expr& e);
std::string text(const Guard& g);

// ---- declarations ----

struct ParamDecl {
  std::string name;
  GuardPtr constraint; // over parameters only; may be null
};

struct ConstDecl {
  std::string name;
  SetExprPtr body;
};

struct VarDecl {
  std::string name;
  SetExprPtr type;
};

// F : domain -> codomain defined by a single maplet  bound -> body.
// The body's free variables are a subset of {bound}.
struct FunDecl {
  std::string name;
  SetExprPtr domain;
  SetExprPtr codomain;
  std::string bound;
  ExprPtr body;
};

enum class PlaceKind { System, Environment };

// Initial tokens of a place: either the whole type or an explicit list of
// ground expressions (set-typed entries contribute their elements).
struct InitSpec {
  bool all = false;
  std::vector<ExprPtr> entries;
};

struct Place {
  std::string name;
  PlaceKind kind = PlaceKind::System;
  SetExprPtr type;
  bool bad = false;
  std::optional<InitSpec> init;
};

struct Arc {
  std::string place;
  ExprPtr expr;
};

struct Transition {
  std::string name;
  GuardPtr guard; // null means true
  std::vector<Arc> pre;
  std::vector<Arc> post;
};

struct HighLevelGame {
  std::string name;
  std::vector<ParamDecl> params;
  std::vector<ConstDecl> consts;
  std::vector<VarDecl> vars;
  std::vector<FunDecl> funs;
  std::vector<Place> places;
  std::vector<Transition> transitions;

  // -1 if absent. Places and transitions live in their own namespaces.
  int place_index(const std::string& name) const;
  int transition_index(const std::string& name) const;
  const ConstDecl* find_const(const std::string& name) const;
  const VarDecl* find_var(const std::string& name) const;
  const FunDecl* find_fun(const std::string& name) const;
  bool has_param(const std::string& name) const;
};

bool equal(const HighLevelGame& x, const HighLevelGame& y);

// ---- diagnostics and validation ----

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string where; // declaration / place / transition name
  std::string message;
};

// Structural well-formedness: unique names per namespace, resolvable
// references, acyclic constant definitions, arity and shape restrictions,
// ground init lists, at least one initially marked place. Type discipline
// lives in eval.hpp (typecheck_game).
std::vector<Diagnostic> validate(const HighLevelGame& game);

// Free variables of a transition: variables of guard and arc expressions
// minus comprehension-bound occurrences. Sorted, unique.
std::vector<std::string> free_vars(const Transition& t);
std::vector<std::string> free_vars(const Expr& e);

// ---- construction helpers ----

ExprPtr mk_lit(std::int64_t v);
ExprPtr mk_param(std::string name);
ExprPtr mk_black();
ExprPtr mk_var(std::string name);
ExprPtr mk_tuple(std::vector<ExprPtr> items);
ExprPtr mk_arith(ExprPtr lhs, char op, ExprPtr rhs);
ExprPtr mk_const(std::string constant_name);
ExprPtr mk_set_value(SetExprPtr set);
ExprPtr mk_funapp(std::string fun, ExprPtr arg);
ExprPtr mk_compr(std::string bound, ExprPtr element, SetExprPtr source,
                 GuardPtr filter = nullptr);

SetExprPtr set_range(IntTerm upper);
SetExprPtr set_range_lit(std::int64_t upper);
SetExprPtr set_range_param(std::string param, std::int64_t offset = 0);
SetExprPtr set_black();
SetExprPtr set_product(std::vector<SetExprPtr> factors);
SetExprPtr set_power(SetExprPtr inner);
SetExprPtr set_ref(std::string constant_name);
SetExprPtr set_compr(std::string bound, ExprPtr element, SetExprPtr source,
                     GuardPtr filter = nullptr);

GuardPtr g_true();
GuardPtr g_cmp(ExprPtr lhs, CmpOp op, ExprPtr rhs);
GuardPtr g_and(GuardPtr a, GuardPtr b);
GuardPtr g_or(GuardPtr a, GuardPtr b);
GuardPtr g_not(GuardPtr a);

// Desugars S \ {e1,...,ek} into a comprehension binding a fresh variable:
// { q | q in S, q != e1 and ... }. The fresh name is the first of
// q, q0, q1, ... not free in any removed element; the same rule is used by
// the DSL parser, so parsed and constructed games agree structurally.
ExprPtr set_minus(SetExprPtr source, std::vector<ExprPtr> removed);

} // namespace hlpg
