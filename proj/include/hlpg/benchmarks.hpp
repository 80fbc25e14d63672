#pragma once

#include "hlpg/model.hpp"

namespace hlpg {

// How the alarm stations learn about the fault: one synchronizing
// transition moving every station at once, or pairwise handover.
enum class InfoVariant { Sync, Sequential };

// Distributed alarm stations (parameter n): the environment picks a
// station to trip, stations exchange the fault position and must raise
// alarms that name it correctly. Game name "as_sync" or "as_seq".
HighLevelGame alarm_system(InfoVariant variant = InfoVariant::Sync);

// Production line (parameters n machines, k < n orders): one machine
// breaks, every order must end on a working machine. Game name "cm".
HighLevelGame concurrent_machines();

// Robot fleet (parameters n robots and tools, k workpieces): robots swap
// tools between phases; processing the same piece twice in a row or
// skipping the tool check is losing. Game name "sr".
HighLevelGame self_reconfiguring_robots();

} // namespace hlpg
