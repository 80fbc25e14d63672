#pragma once

#include "hlpg/eval.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hlpg {

// A marking: one token set per place, indexed by place declaration order,
// tokens sorted. Places without tokens hold the empty vector.
struct Marking {
  std::vector<std::vector<Token>> sets;

  bool operator==(const Marking&) const = default;
  bool operator<(const Marking& other) const { return sets < other.sets; }

  const std::vector<Token>& at(std::size_t place_idx) const {
    return sets.at(place_idx);
  }
  bool holds(std::size_t place_idx, const Token& t) const;
  // "{Sys={1,2}, Env={.}}" listing only nonempty places.
  std::string text(const HighLevelGame& game) const;
};

// A transition joined with one guard-true valuation, its arc token sets
// evaluated: the unit of firing.
struct GroundFiring {
  int trans = -1;
  Valuation val;
  // (place index, tokens) per arc, tokens sorted
  std::vector<std::pair<int, std::vector<Token>>> pre, post;

  std::string name(const HighLevelGame& game) const; // "t[x=1]"
};

// All guard-true (t, v) pairs in canonical order: transitions by
// declaration, valuations in enumeration order. The low-level transitions
// of the instantiation correspond to this list one to one.
std::vector<GroundFiring> ground_firings(const Elaboration& elab);

Marking initial_marking(const Elaboration& elab);

// Token-game enabledness: guard true and v(p,t) subset of M(p) per input
// arc. The valuation must bind exactly the transition's free variables.
bool enabled(const Marking& m, std::size_t trans_idx, const Valuation& v,
             const Elaboration& elab);
bool enabled(const Marking& m, const GroundFiring& f);

// Fires an enabled transition: M'(p) = (M(p) - v(p,t)) | v(t,p). Throws
// ContactViolation if a produced token is already present outside the
// consumed part, Error if not enabled.
Marking fire(const Marking& m, std::size_t trans_idx, const Valuation& v,
             const Elaboration& elab);
Marking fire(const Marking& m, const GroundFiring& f);

// Same firing rule with plain union: no contact check. Used to compare
// both semantics on arbitrary type-respecting markings.
Marking fire_plain(const Marking& m, const GroundFiring& f);

struct ReachGraph {
  struct Edge {
    int src;
    int firing; // index into firings
    int dst;
  };

  std::vector<Marking> nodes; // node 0 is the initial marking
  std::vector<Edge> edges;    // discovery order
  std::vector<GroundFiring> firings;
  std::size_t depth = 0; // max BFS level

  std::size_t deadlock_count() const;
  bool marks_bad(const HighLevelGame& game) const;
};

// Deterministic BFS over the token game. Throws LimitError past
// limits().max_states; ContactViolation carries the firing path.
ReachGraph explore(const Elaboration& elab);

struct Verdict {
  bool ok = true;
  std::string message;    // witness description when !ok
  int node = -1;          // witness node index when applicable
  std::string transition; // witness transition name
  std::string place;      // witness place name
};

// Checks, over every reachable marking M and enabled firing (t, v): no
// produced token is already on its target place unless the firing also
// consumes it there, i.e. (M(p) - v(p,t)) and v(t,p) stay disjoint.
// Witness on failure.
Verdict check_contact_free(const Elaboration& elab, const ReachGraph& graph);
Verdict check_contact_free(const Elaboration& elab); // explores internally

} // namespace hlpg
