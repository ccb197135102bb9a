// netcam_wp.hpp -- NetCAM-WP, the polynomial joint scheduler.
//
// Per slot the cellular side picks one of three phases:
//   broadcast_drain    some packet is wanted by everyone; it can only go out
//                      uncoded, so the BS drains those first (lowest index);
//   singleton_service  a user with no neighbors still misses packets; the BS
//                      serves one such packet, greedily coded with whatever
//                      else stays decodable for every user;
//   most_wanted        otherwise the BS codes around the packet missed by
//                      the most users (ties resolved by the largest greedy
//                      code, then most receivers, then lowest index).
// The D2D side then runs concurrently on the remaining packets: a first
// transmitter is chosen for the most wanted packet still unserved, more
// transmitters are added greedily while they neither reach each other nor
// share a covered user, and every code excludes the slot's cellular packets
// so no packet rides both links.
//
// All tie-breaks are deterministic; the per-slot work is polynomial in
// users x packets (instrumented via RunStats, never an exponential search).
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "idnc/schedule.hpp"
#include "idnc/topology.hpp"

namespace idnc {

inline constexpr const char* kNetcamWpId = "netcam-wp";

enum class HeuristicPhase { broadcast_drain, singleton_service, most_wanted };

const char* heuristic_phase_name(HeuristicPhase phase);

struct HeuristicSlotDecision {
    HeuristicPhase phase;
    TransmissionPlan plan;
    std::vector<int> excluded_packets;  // the cellular code, barred from D2D
};

struct RunStats {
    std::uint64_t ops = 0;  // elementary membership/feasibility checks
    int slots = 0;
};

// Packet outside `exclude` missed by the most users; ties -> lowest index;
// nullopt when every such packet has zero demand.
std::optional<int> most_wanted(const SessionState& s, const DynamicBitset& exclude);

// Transmitter for `packet`: holders with at least one wanting neighbor,
// ranked by in-coverage demand, then by receiver count of their greedy code
// (built under `exclude`), then lowest index. nullopt when nobody qualifies.
std::optional<int> select_transmitter(const SessionState& s, const ConnectionMatrix& c, int packet,
                                      const DynamicBitset& exclude, RunStats* stats = nullptr);

// Greedy decodable code for one transmitter: seed plus further held packets
// (descending in-coverage demand, ties lowest index) while every covered
// user keeps at most one wanted packet in the code. Sorted ascending.
std::vector<int> build_d2d_code(const SessionState& s, const ConnectionMatrix& c, int transmitter,
                                int seed_packet, const DynamicBitset& exclude, RunStats* stats = nullptr);

// Fills the slot with additional non-conflicting, non-congesting
// transmitters around the already chosen first one. Returns the full
// transmitter -> code map, first included.
std::map<int, std::vector<int>> schedule_concurrent(const SessionState& s, const ConnectionMatrix& c,
                                                    int first_transmitter, std::vector<int> first_code,
                                                    const DynamicBitset& exclude, RunStats* stats = nullptr);

HeuristicSlotDecision plan_heuristic_slot(const SessionState& s, const ConnectionMatrix& c,
                                          RunStats* stats = nullptr);

ScheduleResult run_netcam_wp(const SessionState& initial, const ConnectionMatrix& c, RunStats* stats = nullptr);

// Completion-time envelope for the heuristic on a given instance: at least
// the all-wanted packet count (those cost one uncoded slot each); at most
// the drain+singleton load plus half the residual wants of the worst-off
// user, rounded up (cellular and D2D can each hand it one packet per slot).
struct CompletionBounds {
    int lower = 0;
    int upper = 0;
};

CompletionBounds completion_bounds(const SessionState& s, const ConnectionMatrix& c);

}  // namespace idnc
