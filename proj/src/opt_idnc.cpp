#include "idnc/opt_idnc.hpp"

#include "idnc/conflict_graph.hpp"
#include "idnc/errors.hpp"

namespace idnc {

ScheduleResult run_opt_idnc(const SessionState& initial, const ConnectionMatrix& c, const MisOptions& mis) {
    ScheduleResult result{kOptIdncId, 0, {}, initial};
    SessionState state = initial;
    while (!state.is_complete()) {
        ConflictGraph g = build_two_layer(state, c);
        DynamicBitset best;
        try {
            best = maximum_independent_set(g.adjacency(), mis);
        } catch (const capacity_error& e) {
            throw capacity_error(std::string(e.what()) + " (instance: " + std::to_string(state.n_users()) +
                                 " users, " + std::to_string(state.n_packets()) + " packets)");
        }
        TransmissionPlan plan = decode_independent_set(g, best);
        SlotOutcome outcome = apply_plan(state, c, plan);  // validates; every vertex serves someone
        result.slots.push_back({std::move(plan), outcome.recoveries, {}});
        state = outcome.after;
    }
    result.completion_time = int(result.slots.size());
    result.final_state = state;
    return result;
}

}  // namespace idnc
