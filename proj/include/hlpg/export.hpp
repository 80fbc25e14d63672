#pragma once

#include "hlpg/instantiate.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace hlpg {

// Line-based textual form of a compiled game. Deterministic: places and
// transitions in net order, each transition's arcs inputs first, both by
// place index. Identifiers never contain whitespace.
std::string export_native(const LowLevelGame& g);

// Reads export_native output back; the result equals the exported game.
// Throws Error on malformed input.
LowLevelGame read_native(std::string_view text);

// Minimal single-page PNML: generated ids in attributes, the real names
// in <name><text>, kind and bad flags in <toolspecific> blocks.
std::string export_pnml(const LowLevelGame& g);

// Graphviz digraph: circles for places (doublecircle when bad, gray fill
// for environment, bold for initially marked), boxes for transitions.
std::string export_dot(const LowLevelGame& g);

// Graphviz digraph of the parameterized game itself: arc labels carry the
// expressions, guards hang off their transition as dashed note nodes.
std::string export_hl_dot(const HighLevelGame& g);

struct StatsReport {
  std::string name;
  std::size_t place_count = 0;
  std::size_t transition_count = 0;
  std::size_t arc_count = 0;
  std::size_t init_size = 0;
  std::size_t bad_count = 0;
  std::optional<std::size_t> reach_nodes, reach_edges, deadlocks;
  std::optional<bool> bad_reachable;
  std::optional<bool> contact_free;
  std::optional<bool> one_safe;
};

StatsReport stats(const LowLevelGame& g);
std::string stats_json(const StatsReport& r); // stable key order, 2-space indent

} // namespace hlpg
