// schedule.hpp -- the result shape every scheduler produces.
#pragma once

#include <string>
#include <vector>

#include "idnc/engine.hpp"
#include "idnc/plan.hpp"
#include "idnc/session.hpp"

namespace idnc {

struct ScheduledSlot {
    TransmissionPlan plan;
    std::vector<Recovery> recoveries;
    std::string label;  // scheduler-specific annotation (e.g. heuristic phase)
};

struct ScheduleResult {
    std::string scheduler_id;
    int completion_time = 0;  // slots executed until every user was complete
    std::vector<ScheduledSlot> slots;
    SessionState final_state;
};

}  // namespace idnc
