#pragma once

#include "hlpg/instantiate.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace hlpg {

// rho: maps a high-level marking to the low-level marking holding exactly
// the places (p, d) with d in M(p).
LowLevelMarking rho(const Marking& m, const Instantiation& inst,
                    const Elaboration& elab);

struct CorrespondenceOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  // test hook: corrupts the compiled net before the check runs
  std::function<void(LowLevelGame&)> mutate;
};

struct CorrespondenceReport {
  bool passed = false;
  std::size_t hl_nodes = 0, hl_edges = 0;
  std::size_t ll_nodes = 0, ll_edges = 0;
  std::size_t samples_checked = 0;
  std::string witness; // empty when passed
};

// Checks that rho is an isomorphism between the reachability graphs of the
// token game and of its compiled net, both explored independently:
//  - rho(initial) equals the net's initial marking,
//  - every reachable high-level marking maps to a reachable low-level one,
//    bijectively, and every edge label (t, v) is preserved both ways,
//  - at every reached marking, each (t, v) is enabled on one side iff on
//    the other,
//  - on seeded random type-respecting markings, enabledness agrees and
//    plain-union firing commutes with rho.
// Throws LimitError when exploration exceeds the limits.
CorrespondenceReport check_correspondence(const HighLevelGame& game,
                                          const ParamEnv& env,
                                          const Limits& limits = {},
                                          const CorrespondenceOptions& opts = {});

} // namespace hlpg
