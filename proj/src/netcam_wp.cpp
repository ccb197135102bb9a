#include "idnc/netcam_wp.hpp"

#include <algorithm>

#include "idnc/errors.hpp"

namespace idnc {

const char* heuristic_phase_name(HeuristicPhase phase) {
    switch (phase) {
        case HeuristicPhase::broadcast_drain: return "broadcast-drain";
        case HeuristicPhase::singleton_service: return "singleton-service";
        case HeuristicPhase::most_wanted: return "most-wanted";
    }
    return "?";
}

namespace {

void tick(RunStats* stats, std::uint64_t n = 1) {
    if (stats) stats->ops += n;
}

// Users in the transmitter's coverage still missing the packet.
int in_coverage_demand(const SessionState& s, const ConnectionMatrix& c, int transmitter, int packet,
                       RunStats* stats) {
    int d = 0;
    c.coverage_bits(transmitter).for_each([&](int k) {
        tick(stats);
        d += s.wants(k, packet);
    });
    return d;
}

// Packets with positive demand outside `exclude`, demand descending, index
// ascending. The workhorse scan order for every greedy choice below.
std::vector<int> packets_by_demand(const SessionState& s, const DynamicBitset& exclude, RunStats* stats) {
    std::vector<std::pair<int, int>> keyed;  // (demand, packet)
    for (int p = 0; p < s.n_packets(); ++p) {
        tick(stats);
        if (exclude.size() && exclude.test(p)) continue;
        int d = s.demand_count(p);
        if (d > 0) keyed.push_back({d, p});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::vector<int> out;
    out.reserve(keyed.size());
    for (const auto& [d, p] : keyed) out.push_back(p);
    return out;
}

// Cellular code grown around `seed`: add packets (demand descending) while
// every user keeps at most one wanted packet in the code.
std::vector<int> greedy_cellular_code(const SessionState& s, int seed, RunStats* stats) {
    std::vector<int> code{seed};
    std::vector<int> wanted_count(std::size_t(s.n_users()), 0);
    for (int u = 0; u < s.n_users(); ++u) wanted_count[std::size_t(u)] = s.wants(u, seed);

    DynamicBitset skip(s.n_packets());
    skip.set(seed);
    for (int q : packets_by_demand(s, skip, stats)) {
        bool feasible = true;
        for (int u = 0; u < s.n_users(); ++u) {
            tick(stats);
            if (s.wants(u, q) && wanted_count[std::size_t(u)] == 1) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;
        code.push_back(q);
        for (int u = 0; u < s.n_users(); ++u) wanted_count[std::size_t(u)] += s.wants(u, q);
    }
    std::sort(code.begin(), code.end());
    return code;
}

// Users that decode something from a cellular code.
int cellular_receivers(const SessionState& s, const std::vector<int>& code, RunStats* stats) {
    int n = 0;
    for (int u = 0; u < s.n_users(); ++u) {
        int wanted = 0;
        for (int p : code) {
            tick(stats);
            wanted += s.wants(u, p);
        }
        n += wanted == 1;
    }
    return n;
}

// Covered users that decode something from a transmitter's code.
int d2d_receivers(const SessionState& s, const ConnectionMatrix& c, int transmitter,
                  const std::vector<int>& code, RunStats* stats) {
    int n = 0;
    c.coverage_bits(transmitter).for_each([&](int k) {
        int wanted = 0;
        for (int p : code) {
            tick(stats);
            wanted += s.wants(k, p);
        }
        n += wanted == 1;
    });
    return n;
}

// Best packet a user could seed a code with: held, outside `exclude`,
// maximizing in-coverage demand (ties lowest index); nullopt if none helps.
std::optional<int> best_seed_packet(const SessionState& s, const ConnectionMatrix& c, int user,
                                    const DynamicBitset& exclude, RunStats* stats) {
    std::optional<int> best;
    int best_demand = 0;
    s.has_bits(user).for_each([&](int p) {
        tick(stats);
        if (exclude.test(p)) return;
        int d = in_coverage_demand(s, c, user, p, stats);
        if (d > best_demand) {
            best_demand = d;
            best = p;
        }
    });
    return best;
}

DynamicBitset code_to_bits(int n_packets, const std::vector<int>& code) {
    DynamicBitset b(n_packets);
    for (int p : code) b.set(p);
    return b;
}

// Callers may pass a default-constructed bitset for "exclude nothing".
DynamicBitset sized_exclude(const DynamicBitset& exclude, int n_packets) {
    return exclude.size() == n_packets ? exclude : DynamicBitset(n_packets);
}

}  // namespace

std::optional<int> most_wanted(const SessionState& s, const DynamicBitset& exclude) {
    std::optional<int> best;
    int best_demand = 0;
    for (int p = 0; p < s.n_packets(); ++p) {
        if (exclude.size() && exclude.test(p)) continue;
        int d = s.demand_count(p);
        if (d > best_demand) {
            best_demand = d;
            best = p;
        }
    }
    return best;
}

std::vector<int> build_d2d_code(const SessionState& s, const ConnectionMatrix& c, int transmitter,
                                int seed_packet, const DynamicBitset& exclude_in, RunStats* stats) {
    if (!s.has(transmitter, seed_packet))
        throw std::invalid_argument("build_d2d_code: transmitter does not hold the seed packet");
    DynamicBitset exclude = sized_exclude(exclude_in, s.n_packets());

    std::vector<int> code{seed_packet};
    std::vector<int> wanted_count(std::size_t(s.n_users()), 0);
    c.coverage_bits(transmitter).for_each([&](int k) { wanted_count[std::size_t(k)] = s.wants(k, seed_packet); });

    // Candidates: held, not excluded, helping at least one neighbor.
    std::vector<std::pair<int, int>> keyed;  // (in-coverage demand, packet)
    s.has_bits(transmitter).for_each([&](int q) {
        tick(stats);
        if (q == seed_packet || exclude.test(q)) return;
        int d = in_coverage_demand(s, c, transmitter, q, stats);
        if (d > 0) keyed.push_back({d, q});
    });
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    for (const auto& [d, q] : keyed) {
        bool feasible = true;
        c.coverage_bits(transmitter).for_each([&](int k) {
            tick(stats);
            if (s.wants(k, q) && wanted_count[std::size_t(k)] == 1) feasible = false;
        });
        if (!feasible) continue;
        code.push_back(q);
        c.coverage_bits(transmitter).for_each([&](int k) { wanted_count[std::size_t(k)] += s.wants(k, q); });
    }
    std::sort(code.begin(), code.end());
    return code;
}

std::optional<int> select_transmitter(const SessionState& s, const ConnectionMatrix& c, int packet,
                                      const DynamicBitset& exclude, RunStats* stats) {
    std::vector<int> candidates;
    int best_demand = 0;
    for (int i = 0; i < s.n_users(); ++i) {
        tick(stats);
        if (!s.has(i, packet)) continue;
        int d = in_coverage_demand(s, c, i, packet, stats);
        if (d == 0) continue;
        if (d > best_demand) {
            best_demand = d;
            candidates.assign(1, i);
        } else if (d == best_demand) {
            candidates.push_back(i);
        }
    }
    if (candidates.empty()) return std::nullopt;
    if (candidates.size() == 1) return candidates[0];

    // Tied on demand: the greedy code reaching the most receivers wins;
    // candidates come in ascending order, so ties keep the lowest index.
    int best_user = candidates[0], best_receivers = -1;
    for (int i : candidates) {
        std::vector<int> code = build_d2d_code(s, c, i, packet, exclude, stats);
        int r = d2d_receivers(s, c, i, code, stats);
        if (r > best_receivers) {
            best_receivers = r;
            best_user = i;
        }
    }
    return best_user;
}

std::map<int, std::vector<int>> schedule_concurrent(const SessionState& s, const ConnectionMatrix& c,
                                                    int first_transmitter, std::vector<int> first_code,
                                                    const DynamicBitset& exclude_in, RunStats* stats) {
    DynamicBitset exclude = sized_exclude(exclude_in, s.n_packets());
    std::map<int, std::vector<int>> selected;
    selected[first_transmitter] = std::move(first_code);

    // Remaining users with something useful to send, most useful first.
    std::vector<std::pair<int, int>> order;  // (best in-coverage demand, user)
    std::vector<int> seeds(std::size_t(s.n_users()), -1);
    for (int j = 0; j < s.n_users(); ++j) {
        if (j == first_transmitter) continue;
        auto seed = best_seed_packet(s, c, j, exclude, stats);
        if (!seed) continue;
        seeds[std::size_t(j)] = *seed;
        order.push_back({in_coverage_demand(s, c, j, *seed, stats), j});
    }
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    for (const auto& [d, j] : order) {
        bool compatible = true;
        for (const auto& [t, code] : selected) {
            tick(stats);
            if (c.connected(j, t) || c.coverage_bits(j).intersects(c.coverage_bits(t))) {
                compatible = false;
                break;
            }
        }
        if (!compatible) continue;
        selected[j] = build_d2d_code(s, c, j, seeds[std::size_t(j)], exclude, stats);
    }
    return selected;
}

namespace {

// D2D side of a slot: seed the first transmitter from the most wanted
// packets still open, then pack in concurrent transmitters.
std::map<int, std::vector<int>> build_d2d_side(const SessionState& s, const ConnectionMatrix& c,
                                               const DynamicBitset& exclude, RunStats* stats) {
    for (int p : packets_by_demand(s, exclude, stats)) {
        auto t = select_transmitter(s, c, p, exclude, stats);
        if (!t) continue;
        return schedule_concurrent(s, c, *t, build_d2d_code(s, c, *t, p, exclude, stats), exclude, stats);
    }
    return {};
}

}  // namespace

HeuristicSlotDecision plan_heuristic_slot(const SessionState& s, const ConnectionMatrix& c, RunStats* stats) {
    if (s.is_complete()) throw std::invalid_argument("plan_heuristic_slot: session already complete");
    HeuristicSlotDecision decision;
    std::vector<int> bs_code;

    DynamicBitset drain = s.s_bs();
    if (drain.any()) {
        // Nobody holds these, so no coding partner exists: send one uncoded.
        decision.phase = HeuristicPhase::broadcast_drain;
        bs_code.push_back(drain.find_first());
    } else {
        DynamicBitset singleton = s.singleton_wants(c);
        if (singleton.any()) {
            decision.phase = HeuristicPhase::singleton_service;
            // Most-demanded singleton want (ties lowest), greedily coded.
            int seed = -1, best_demand = -1;
            singleton.for_each([&](int p) {
                tick(stats);
                int d = s.demand_count(p);
                if (d > best_demand) {
                    best_demand = d;
                    seed = p;
                }
            });
            bs_code = greedy_cellular_code(s, seed, stats);
        } else {
            decision.phase = HeuristicPhase::most_wanted;
            // All packets tied at the top demand compete: largest greedy
            // code, then most receivers, then lowest seed index.
            int top_demand = 0;
            for (int p = 0; p < s.n_packets(); ++p) {
                tick(stats);
                top_demand = std::max(top_demand, s.demand_count(p));
            }
            int best_receivers = -1;
            for (int p = 0; p < s.n_packets(); ++p) {
                if (s.demand_count(p) != top_demand) continue;
                std::vector<int> code = greedy_cellular_code(s, p, stats);
                if (int(code.size()) < int(bs_code.size())) continue;
                int receivers = cellular_receivers(s, code, stats);
                if (int(code.size()) > int(bs_code.size()) || receivers > best_receivers) {
                    bs_code = std::move(code);
                    best_receivers = receivers;
                }
            }
        }
    }

    DynamicBitset exclude = code_to_bits(s.n_packets(), bs_code);
    TransmissionPlan plan;
    plan.bs_code = std::move(bs_code);
    plan.d2d = build_d2d_side(s, c, exclude, stats);

    decision.plan = std::move(plan);
    decision.excluded_packets = exclude.to_indices();
    return decision;
}

ScheduleResult run_netcam_wp(const SessionState& initial, const ConnectionMatrix& c, RunStats* stats) {
    ScheduleResult result{kNetcamWpId, 0, {}, initial};
    SessionState state = initial;
    while (!state.is_complete()) {
        HeuristicSlotDecision decision = plan_heuristic_slot(state, c, stats);
        SlotOutcome outcome = apply_plan(state, c, decision.plan);  // validates every slot
        if (outcome.recoveries.empty())
            throw feasibility_error("netcam-wp: slot made no progress");  // unreachable; guards the loop
        result.slots.push_back({std::move(decision.plan), outcome.recoveries,
                                std::string(heuristic_phase_name(decision.phase))});
        state = outcome.after;
        if (stats) stats->slots += 1;
    }
    result.completion_time = int(result.slots.size());
    result.final_state = state;
    return result;
}

CompletionBounds completion_bounds(const SessionState& s, const ConnectionMatrix& c) {
    DynamicBitset drain = s.s_bs();
    CompletionBounds bounds;
    bounds.lower = drain.count();

    DynamicBitset dedicated = drain;
    dedicated |= s.singleton_wants(c);

    int worst = 0, worst_size = -1;
    for (int u = 0; u < s.n_users(); ++u) {
        int size = s.wants_bits(u).count();
        if (size > worst_size) {
            worst_size = size;
            worst = u;
        }
    }
    DynamicBitset residual = s.wants_bits(worst);
    residual.and_not(dedicated);
    bounds.upper = dedicated.count() + (residual.count() + 1) / 2;
    return bounds;
}

}  // namespace idnc
