#pragma once

#include "hlpg/semantics.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hlpg {

struct LowLevelPlace {
  std::string name; // "p[d]"
  PlaceKind kind = PlaceKind::System;
  bool bad = false;
  bool init = false;

  bool operator==(const LowLevelPlace&) const = default;
};

struct LowLevelTransition {
  std::string name;     // "t[x=1,y=2]"
  std::vector<int> pre; // place indices, sorted
  std::vector<int> post;

  bool operator==(const LowLevelTransition&) const = default;
};

struct LowLevelGame {
  std::string name;
  std::vector<LowLevelPlace> places;
  std::vector<LowLevelTransition> transitions;

  bool operator==(const LowLevelGame&) const = default;
  std::size_t arc_count() const;
  std::size_t init_count() const;
  int place_index(const std::string& name) const; // -1 if absent
  int transition_index(const std::string& name) const;
};

// A compiled game plus the maps tying it back to the high-level one.
struct Instantiation {
  LowLevelGame net;
  // high-level place index -> low-level index of its first token; the
  // place for token d is place_base[p] + place_type(p).index_of(d)
  std::vector<int> place_base;
  // low-level transition index -> originating (transition, valuation);
  // aligned one to one with ground_firings of the same elaboration
  std::vector<std::pair<int, Valuation>> origin;
};

// Expands places to (place, token) pairs and transitions to guard-true
// (transition, valuation) pairs, arcs per token membership. Place order:
// high-level place order, tokens in canonical order. Transition order
// matches ground_firings. Throws LimitError via valuation enumeration.
Instantiation instantiate(const Elaboration& elab);

// Drops duplicate transitions (same pre and post sets), keeping the first
// of each flow. Names are untouched.
LowLevelGame dedup_transitions(const LowLevelGame& g);

// Drops places with no arcs that are neither initial nor bad.
LowLevelGame prune_isolated_places(const LowLevelGame& g);

struct LowLevelMarking {
  std::vector<int> marked; // place indices, sorted

  bool operator==(const LowLevelMarking&) const = default;
  bool operator<(const LowLevelMarking& o) const { return marked < o.marked; }
  std::string text(const LowLevelGame& g) const; // "{p[1], q[.]}"
};

struct LowLevelReachGraph {
  struct Edge {
    int src;
    int trans;
    int dst;
  };

  std::vector<LowLevelMarking> nodes; // node 0 is the initial marking
  std::vector<Edge> edges;

  std::size_t deadlock_count() const;
  bool marks_bad(const LowLevelGame& g) const;
};

LowLevelMarking lowlevel_initial(const LowLevelGame& g);

// Deterministic BFS over set-firing semantics: t enabled iff pre(t) is a
// subset of M, firing yields (M - pre(t)) | post(t).
LowLevelReachGraph lowlevel_reach(const LowLevelGame& g, const Limits& limits);

// Checks that no reachable firing produces a token on a marked place
// outside the consumed set (the safe-net condition).
Verdict check_one_safe(const LowLevelGame& g, const Limits& limits);

} // namespace hlpg
