// engine.hpp -- slot semantics: what a plan may do and what it recovers.
//
// validate_plan checks the five admissibility rules and reports every
// violation (it never throws on bad plans); apply_plan refuses invalid
// plans and otherwise advances the session by one slot.
//
// Reception model: every user hears the cellular broadcast (the BS link
// uses its own spectrum, so even D2D transmitters keep it); a user hears a
// D2D code only from a transmitter in its coverage and only while not
// transmitting itself. A heard code yields a recovery iff it contains
// exactly one packet of the listener's wants.
#pragma once

#include <string>
#include <vector>

#include "idnc/plan.hpp"
#include "idnc/session.hpp"
#include "idnc/topology.hpp"

namespace idnc {

enum class PlanRule {
    bs_inadmissible,         // cellular code carries >=2 wants of one user
    d2d_packet_not_held,     // transmitter does not hold a packet it codes
    d2d_inadmissible,        // D2D code carries >=2 wants of a covered user
    transmitter_conflict,    // two transmitters in range of each other
    transmitter_congestion,  // two transmitters share a covered user
    cross_link_redundancy,   // packet on both the cellular and a D2D code
};

const char* plan_rule_name(PlanRule rule);

struct PlanViolation {
    PlanRule rule;
    std::string detail;
};

struct PlanReport {
    std::vector<PlanViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

struct Recovery {
    int user;
    int packet;
    int source;  // kBaseStation or the D2D transmitter

    bool operator==(const Recovery& o) const {
        return user == o.user && packet == o.packet && source == o.source;
    }
};

struct SlotOutcome {
    std::vector<Recovery> recoveries;  // ordered by (user, cellular-before-d2d)
    SessionState after;
};

PlanReport validate_plan(const SessionState& s, const ConnectionMatrix& c, const TransmissionPlan& plan);

// Throws feasibility_error (with the report text) when the plan is invalid.
SlotOutcome apply_plan(const SessionState& s, const ConnectionMatrix& c, const TransmissionPlan& plan);

}  // namespace idnc
