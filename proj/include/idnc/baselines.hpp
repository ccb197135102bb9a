// baselines.hpp -- reference schedulers the joint scheme is measured against.
//
// uncoded-bs: the base station retransmits one still-missing packet per
// slot, lowest index first; completion time is always |union of wants|.
// cellular-only-idnc: per-slot maximum independent set of the higher layer
// only (coded cellular, no D2D).
#pragma once

#include "idnc/mis.hpp"
#include "idnc/schedule.hpp"
#include "idnc/topology.hpp"

namespace idnc {

inline constexpr const char* kUncodedBsId = "uncoded-bs";
inline constexpr const char* kCellularOnlyId = "cellular-only-idnc";

ScheduleResult run_uncoded_bs(const SessionState& initial, const ConnectionMatrix& c);
ScheduleResult run_cellular_only_idnc(const SessionState& initial, const ConnectionMatrix& c,
                                      const MisOptions& mis = {});

}  // namespace idnc
