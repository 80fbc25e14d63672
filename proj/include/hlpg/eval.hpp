#pragma once

#include "hlpg/errors.hpp"
#include "hlpg/limits.hpp"
#include "hlpg/model.hpp"
#include "hlpg/token.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hlpg {

// Binding of every declared parameter to a natural number >= 1.
struct ParamEnv {
  std::map<std::string, std::int64_t> values;

  bool has(const std::string& name) const { return values.count(name) != 0; }
  std::int64_t at(const std::string& name) const; // throws EvalError if absent
};

// Bound parameters against a game's declarations: every parameter bound,
// every value >= 1, no unknown names, all constraints satisfied.
std::vector<Diagnostic> check_params(const HighLevelGame& game,
                                     const ParamEnv& env);

// A fully elaborated finite set: canonical sorted elements.
struct ConcreteType {
  std::vector<Token> elements; // sorted, unique

  bool contains(const Token& t) const;
  // Position in canonical order; -1 if absent.
  int index_of(const Token& t) const;
  std::size_t size() const { return elements.size(); }
};

// Static type of an expression. Range bounds are erased: every range is
// number-typed, with membership enforced at evaluation time.
struct Type {
  enum class Kind { Num, Black, Tuple, Set };

  Kind kind = Kind::Num;
  std::vector<Type> items; // Tuple components; Set holds one element type

  static Type num() { return {Kind::Num, {}}; }
  static Type black() { return {Kind::Black, {}}; }
  static Type tuple(std::vector<Type> parts) {
    return {Kind::Tuple, std::move(parts)};
  }
  static Type set(Type elem) { return {Kind::Set, {std::move(elem)}}; }

  bool operator==(const Type& other) const;
  bool operator!=(const Type& other) const { return !(*this == other); }
};

std::string text(const Type& t);

// How an arc or init expression relates to its place's type: an element
// (denotes a singleton) or a whole subset (denotes its elements).
enum class ArcMode { Element, SetValued };

// Assignment of tokens to a transition's free variables.
struct Valuation {
  std::map<std::string, Token> bindings; // keyed by name, so ordered by name

  const Token& at(const std::string& name) const; // throws EvalError
  bool operator==(const Valuation&) const = default;
  bool operator<(const Valuation& other) const {
    return bindings < other.bindings;
  }
  // "x=1,y=(1,2)" in variable-name order; "" when empty.
  std::string text() const;
};

// Element type of a set expression. Appends diagnostics and returns
// nullopt on failure. locals supplies comprehension/maplet binders.
std::optional<Type> elem_type(const SetExpr& s, const HighLevelGame& game,
                              std::vector<Diagnostic>& diags,
                              const std::map<std::string, Type>& locals = {},
                              const std::string& where = "");

// Static type of an expression.
std::optional<Type> type_of(const Expr& e, const HighLevelGame& game,
                            std::vector<Diagnostic>& diags,
                            const std::map<std::string, Type>& locals = {},
                            const std::string& where = "");

// Full static type discipline: function bodies against codomains, guards
// Boolean-sound, every arc and init entry element- or set-typed for its
// place. Run after validate(); assumes references resolve.
std::vector<Diagnostic> typecheck_game(const HighLevelGame& game);

// A game joined with a parameter binding: concrete types for constants,
// variables and places, evaluated initial tokens, and per-arc modes.
// Immutable after build; all evaluation runs against one of these.
class Elaboration {
public:
  // Throws EvalError if the game does not validate/typecheck or the
  // binding is rejected; LimitError on blown type bounds.
  static Elaboration build(const HighLevelGame& game, const ParamEnv& env,
                           const Limits& limits = {});

  const HighLevelGame& game() const { return game_; }
  const ParamEnv& env() const { return env_; }
  const Limits& limits() const { return limits_; }

  const ConcreteType& const_type(const std::string& name) const;
  const ConcreteType& var_type(const std::string& name) const;
  const ConcreteType& place_type(std::size_t place_idx) const;
  // Evaluated initial tokens of a place, canonical order.
  const std::vector<Token>& init_tokens(std::size_t place_idx) const;
  ArcMode pre_mode(std::size_t trans_idx, std::size_t arc_idx) const;
  ArcMode post_mode(std::size_t trans_idx, std::size_t arc_idx) const;

private:
  HighLevelGame game_; // owned: an Elaboration outlives its source game
  ParamEnv env_;
  Limits limits_;
  std::map<std::string, ConcreteType> consts_;
  std::map<std::string, ConcreteType> var_types_;
  std::vector<ConcreteType> place_types_;
  std::vector<std::vector<Token>> init_tokens_;
  std::vector<std::vector<ArcMode>> pre_modes_;
  std::vector<std::vector<ArcMode>> post_modes_;

  friend ConcreteType elaborate_type(const SetExpr&, const Elaboration&);
  friend Token eval_expr(const Expr&, const Valuation&, const Elaboration&);
  friend bool eval_guard(const Guard&, const Valuation&, const Elaboration&);
};

// Enumerates a closed set expression to its concrete elements. Inline
// comprehensions must not reference transition variables. Throws
// EvalError / LimitError (powerset bound, type size).
ConcreteType elaborate_type(const SetExpr& s, const Elaboration& ctx);

// Convenience overload building a throwaway context; game must validate.
ConcreteType elaborate_type(const SetExpr& s, const HighLevelGame& game,
                            const ParamEnv& env, const Limits& limits = {});

// Evaluates an expression to a token under a valuation. Throws EvalError
// on unbound symbols, arithmetic below 1, or a function argument outside
// its domain.
Token eval_expr(const Expr& e, const Valuation& v, const Elaboration& ctx);

// Evaluates a guard; null guards are true.
bool eval_guard(const GuardPtr& g, const Valuation& v, const Elaboration& ctx);
bool eval_guard(const Guard& g, const Valuation& v, const Elaboration& ctx);

// Tokens an arc moves under a valuation: a singleton for element-typed
// arcs, the value's elements for set-typed arcs. Sorted. Every token is
// checked against the place's type.
std::vector<Token> eval_arc(const Arc& arc, ArcMode mode, const Valuation& v,
                            const Elaboration& ctx);

// All type-respecting valuations of the transition's free variables, in
// canonical order (variables by name, values in token order, last
// variable fastest). No guard filtering. Throws LimitError when the count
// would exceed limits().max_valuations.
std::vector<Valuation> enumerate_valuations(const Transition& t,
                                            const Elaboration& ctx);

} // namespace hlpg
