#include "idnc/baselines.hpp"

#include "idnc/conflict_graph.hpp"
#include "idnc/errors.hpp"

namespace idnc {

ScheduleResult run_uncoded_bs(const SessionState& initial, const ConnectionMatrix& c) {
    ScheduleResult result{kUncodedBsId, 0, {}, initial};
    SessionState state = initial;
    while (!state.is_complete()) {
        TransmissionPlan plan;
        plan.bs_code.push_back(state.union_wants().find_first());
        SlotOutcome outcome = apply_plan(state, c, plan);
        result.slots.push_back({std::move(plan), outcome.recoveries, {}});
        state = outcome.after;
    }
    result.completion_time = int(result.slots.size());
    result.final_state = state;
    return result;
}

ScheduleResult run_cellular_only_idnc(const SessionState& initial, const ConnectionMatrix& c,
                                      const MisOptions& mis) {
    ScheduleResult result{kCellularOnlyId, 0, {}, initial};
    SessionState state = initial;
    while (!state.is_complete()) {
        ConflictGraph g = build_higher_layer(state);
        DynamicBitset best;
        try {
            best = maximum_independent_set(g.adjacency(), mis);
        } catch (const capacity_error& e) {
            throw capacity_error(std::string(e.what()) + " (instance: " + std::to_string(state.n_users()) +
                                 " users, " + std::to_string(state.n_packets()) + " packets)");
        }
        TransmissionPlan plan = decode_independent_set(g, best);
        SlotOutcome outcome = apply_plan(state, c, plan);
        result.slots.push_back({std::move(plan), outcome.recoveries, {}});
        state = outcome.after;
    }
    result.completion_time = int(result.slots.size());
    result.final_state = state;
    return result;
}

}  // namespace idnc
