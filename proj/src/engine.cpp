#include "idnc/engine.hpp"

#include <algorithm>

#include "idnc/errors.hpp"

namespace idnc {

const char* plan_rule_name(PlanRule rule) {
    switch (rule) {
        case PlanRule::bs_inadmissible: return "bs_inadmissible";
        case PlanRule::d2d_packet_not_held: return "d2d_packet_not_held";
        case PlanRule::d2d_inadmissible: return "d2d_inadmissible";
        case PlanRule::transmitter_conflict: return "transmitter_conflict";
        case PlanRule::transmitter_congestion: return "transmitter_congestion";
        case PlanRule::cross_link_redundancy: return "cross_link_redundancy";
    }
    return "?";
}

std::string PlanReport::to_string() const {
    if (ok()) return "plan ok";
    std::string out = "invalid plan:";
    for (const auto& v : violations) out += " [" + std::string(plan_rule_name(v.rule)) + "] " + v.detail + ";";
    return out;
}

namespace {

std::string ue(int user) { return "UE" + std::to_string(user + 1); }
std::string pk(int packet) { return "p" + std::to_string(packet + 1); }

int wanted_in_code(const SessionState& s, int user, const std::vector<int>& code) {
    int n = 0;
    for (int p : code) n += s.wants(user, p);
    return n;
}

// The single wanted packet, assuming wanted_in_code == 1.
int wanted_packet(const SessionState& s, int user, const std::vector<int>& code) {
    for (int p : code)
        if (s.wants(user, p)) return p;
    return -1;
}

}  // namespace

PlanReport validate_plan(const SessionState& s, const ConnectionMatrix& c, const TransmissionPlan& plan) {
    PlanReport report;
    auto flag = [&](PlanRule rule, std::string detail) {
        report.violations.push_back({rule, std::move(detail)});
    };

    auto check_range = [&](int packet) { return packet >= 0 && packet < s.n_packets(); };
    // Semantic checks below only look at in-range packets; bad indices are
    // already violations of their own.
    auto in_range = [&](const std::vector<int>& code) {
        std::vector<int> ok;
        for (int p : code)
            if (check_range(p)) ok.push_back(p);
        return ok;
    };

    for (int p : plan.bs_code)
        if (!check_range(p)) flag(PlanRule::bs_inadmissible, "cellular packet index out of range");
    std::vector<int> bs_code = in_range(plan.bs_code);

    // (a) the cellular code must stay decodable for every user.
    for (int u = 0; u < s.n_users(); ++u) {
        if (wanted_in_code(s, u, bs_code) > 1)
            flag(PlanRule::bs_inadmissible, "cellular code " + format_code(bs_code) + " carries two wants of " + ue(u));
    }

    for (const auto& [t, raw_code] : plan.d2d) {
        if (t < 0 || t >= c.n_users()) {
            flag(PlanRule::d2d_packet_not_held, "transmitter index out of range");
            continue;
        }
        if (raw_code.empty()) flag(PlanRule::d2d_inadmissible, ue(t) + " transmits an empty code");
        // (b) a transmitter can only code packets it holds, and the code must
        // stay decodable for every covered user.
        for (int p : raw_code) {
            if (!check_range(p) || !s.has(t, p))
                flag(PlanRule::d2d_packet_not_held, ue(t) + " does not hold " + (check_range(p) ? pk(p) : "packet ?"));
        }
        std::vector<int> code = in_range(raw_code);
        c.coverage_bits(t).for_each([&](int k) {
            if (wanted_in_code(s, k, code) > 1)
                flag(PlanRule::d2d_inadmissible, "code " + format_code(code) + " from " + ue(t) + " carries two wants of " + ue(k));
        });
        // (e) no packet may ride both links.
        for (int p : code) {
            if (std::find(bs_code.begin(), bs_code.end(), p) != bs_code.end())
                flag(PlanRule::cross_link_redundancy, pk(p) + " is on both the cellular code and " + ue(t) + "'s code");
        }
    }

    // (c)+(d) pairwise transmitter constraints.
    for (auto a = plan.d2d.begin(); a != plan.d2d.end(); ++a) {
        for (auto b = std::next(a); b != plan.d2d.end(); ++b) {
            int i = a->first, j = b->first;
            if (i < 0 || j < 0 || i >= c.n_users() || j >= c.n_users()) continue;
            if (c.connected(i, j))
                flag(PlanRule::transmitter_conflict, ue(i) + " and " + ue(j) + " are in range of each other");
            if (c.coverage_bits(i).intersects(c.coverage_bits(j))) {
                DynamicBitset common = c.coverage_bits(i);
                common &= c.coverage_bits(j);
                flag(PlanRule::transmitter_congestion,
                     ue(i) + " and " + ue(j) + " both cover " + ue(common.find_first()));
            }
        }
    }
    return report;
}

SlotOutcome apply_plan(const SessionState& s, const ConnectionMatrix& c, const TransmissionPlan& plan) {
    PlanReport report = validate_plan(s, c, plan);
    if (!report.ok()) throw feasibility_error(report.to_string());

    // Decode every link against the slot-start wants: the transmissions are
    // simultaneous, so one slot never chains decodes.
    std::vector<Recovery> recoveries;
    for (int u = 0; u < s.n_users(); ++u) {
        if (wanted_in_code(s, u, plan.bs_code) == 1)
            recoveries.push_back({u, wanted_packet(s, u, plan.bs_code), kBaseStation});
        if (plan.d2d.count(u)) continue;  // half duplex: no D2D reception while transmitting
        for (const auto& [t, code] : plan.d2d) {
            if (!c.connected(t, u)) continue;
            if (wanted_in_code(s, u, code) == 1) {
                int p = wanted_packet(s, u, code);
                // A valid plan cannot hand the same packet to one user twice
                // (redundancy and congestion rules); keep the guard anyway.
                bool dup = false;
                for (const Recovery& r : recoveries) dup |= r.user == u && r.packet == p;
                if (!dup) recoveries.push_back({u, p, t});
            }
        }
    }

    SessionState after = s;
    for (const Recovery& r : recoveries) after = after.with_recovery(r.user, r.packet);
    return {std::move(recoveries), std::move(after)};
}

}  // namespace idnc
