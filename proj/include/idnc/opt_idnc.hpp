// opt_idnc.hpp -- slot-optimal scheduler.
//
// Each slot: rebuild the two-layer conflict graph, take a maximum
// independent set, decode it into a joint plan, apply, repeat until every
// user is complete. Per slot the served vertex count is maximal; across
// slots this is a greedy policy, not a global optimum.
#pragma once

#include "idnc/mis.hpp"
#include "idnc/schedule.hpp"
#include "idnc/topology.hpp"

namespace idnc {

inline constexpr const char* kOptIdncId = "opt-idnc";

// Throws capacity_error (annotated with the instance dimensions) when the
// conflict graph exceeds the solver ceiling.
ScheduleResult run_opt_idnc(const SessionState& initial, const ConnectionMatrix& c, const MisOptions& mis = {});

}  // namespace idnc
