#include <doctest.h>

#include "idnc/engine.hpp"
#include "idnc/errors.hpp"
#include "idnc/netcam_wp.hpp"

#include "test_support.hpp"

using idnc::DynamicBitset;
using idnc::HeuristicPhase;
using idnc::RunStats;
using idnc::SessionState;
using idnc::TransmissionPlan;

namespace {

DynamicBitset none(const SessionState& s) { return DynamicBitset(s.n_packets()); }

}  // namespace

TEST_CASE("most wanted packet, demand ties and exclusion") {
    auto s = testsup::chain_session();  // demands: p1 x3, p2 x1, p3 x2
    CHECK(idnc::most_wanted(s, none(s)) == 0);
    CHECK(idnc::most_wanted(s, DynamicBitset::of(3, {0})) == 2);
    CHECK(idnc::most_wanted(s, DynamicBitset::of(3, {0, 2})) == 1);
    CHECK_FALSE(idnc::most_wanted(s, DynamicBitset::of(3, {0, 1, 2})).has_value());
    CHECK(idnc::most_wanted(s, DynamicBitset()) == 0);  // default bitset = no exclusions

    auto t = testsup::triangle_session();  // p4 leads with demand 2
    CHECK(idnc::most_wanted(t, none(t)) == 3);
}

TEST_CASE("transmitter selection weighs coverage demand, then receivers") {
    auto s = testsup::chain_session();
    auto c = testsup::chain_topology();

    // p3: held by u2 (two wanting neighbors) and u4 (no coverage).
    CHECK(idnc::select_transmitter(s, c, 2, none(s)) == 1);
    // p2: only wanted by u2; u1 and u3 both reach it. The greedy codes tie
    // at one receiver each, so the lowest index wins.
    CHECK(idnc::select_transmitter(s, c, 1, none(s)) == 0);
    // Nobody qualifies when every holder lacks an audience.
    idnc::ConnectionMatrix isolated(2);
    std::vector<DynamicBitset> ih;
    ih.push_back(DynamicBitset::of(1, {0}));
    ih.push_back(DynamicBitset(1));
    auto lone = SessionState::from_has(1, ih);
    CHECK_FALSE(idnc::select_transmitter(lone, isolated, 0, DynamicBitset(1)).has_value());

    // Receiver tie-break: triangle, p1 held by u1 and u2; u2's greedy code
    // {p1,p3} reaches two listeners, u1's bare {p1} reaches one.
    auto ts = testsup::triangle_session();
    auto tc = testsup::triangle_topology();
    CHECK(idnc::select_transmitter(ts, tc, 0, DynamicBitset::of(4, {1, 3})) == 1);
}

TEST_CASE("greedy D2D codes stay decodable for every covered user") {
    auto ts = testsup::triangle_session();
    auto tc = testsup::triangle_topology();

    // u2 seeds p1: p2 and p3 are both wanted twice by u1, only one fits.
    CHECK(idnc::build_d2d_code(ts, tc, 1, 0, none(ts)) == std::vector<int>{0, 1});
    // Excluding p2 steers the filler to p3.
    CHECK(idnc::build_d2d_code(ts, tc, 1, 0, DynamicBitset::of(4, {1})) == std::vector<int>{0, 2});
    // Seeding a packet the transmitter lacks is a caller bug.
    CHECK_THROWS_AS(idnc::build_d2d_code(ts, tc, 0, 1, none(ts)), std::invalid_argument);

    // Zero-demand packets never pad a code: u1 seeds p4 for u3; p1 only
    // interests u3 as well, so it would collide; nothing else is held.
    CHECK(idnc::build_d2d_code(ts, tc, 0, 3, none(ts)) == std::vector<int>{3});
}

TEST_CASE("concurrent transmitters neither conflict nor congest") {
    // Two disjoint pairs: 0-1 and 2-3. Both pairs can run a transmitter.
    idnc::ConnectionMatrix c(4);
    c.connect(0, 1);
    c.connect(2, 3);
    std::vector<DynamicBitset> has;
    has.push_back(DynamicBitset::of(2, {0, 1}));
    has.push_back(DynamicBitset(2));
    has.push_back(DynamicBitset::of(2, {0, 1}));
    has.push_back(DynamicBitset(2));
    auto s = SessionState::from_has(2, has);

    // Listeners want both packets, so each greedy code stays a singleton.
    auto code = idnc::build_d2d_code(s, c, 0, 0, none(s));
    CHECK(code == std::vector<int>{0});
    auto selected = idnc::schedule_concurrent(s, c, 0, code, none(s));
    REQUIRE(selected.size() == 2);
    CHECK(selected.count(0) == 1);
    CHECK(selected.count(2) == 1);
    CHECK(selected.at(2) == std::vector<int>{0});

    // Chain: u1 and u3 both reach u2 -- congestion keeps the second out.
    auto cs = testsup::chain_session();
    auto cc = testsup::chain_topology();
    auto first = idnc::build_d2d_code(cs, cc, 0, 1, none(cs));
    auto only = idnc::schedule_concurrent(cs, cc, 0, first, none(cs));
    REQUIRE(only.size() == 1);
    CHECK(only.count(0) == 1);
}

TEST_CASE("phase selection on the worked examples") {
    // Triangle: no all-wanted packet, no singleton -> most wanted.
    RunStats stats;
    auto decision = idnc::plan_heuristic_slot(testsup::triangle_session(), testsup::triangle_topology(), &stats);
    CHECK(decision.phase == HeuristicPhase::most_wanted);
    TransmissionPlan expect;
    expect.bs_code = {1, 3};
    expect.d2d[1] = {0, 2};
    CHECK(decision.plan == expect);
    CHECK(decision.excluded_packets == std::vector<int>{1, 3});
    CHECK(stats.ops > 0);

    // Chain: u4 is isolated and still wants p1 -> singleton service.
    auto chain = idnc::plan_heuristic_slot(testsup::chain_session(), testsup::chain_topology());
    CHECK(chain.phase == HeuristicPhase::singleton_service);
    TransmissionPlan chain_expect;
    chain_expect.bs_code = {0, 1};
    chain_expect.d2d[1] = {2};
    CHECK(chain.plan == chain_expect);

    // A packet missed by everyone forces an uncoded drain slot.
    std::vector<DynamicBitset> has;
    has.push_back(DynamicBitset::of(2, {0}));
    has.push_back(DynamicBitset::of(2, {0}));
    auto drain = idnc::plan_heuristic_slot(SessionState::from_has(2, has), idnc::ConnectionMatrix(2));
    CHECK(drain.phase == HeuristicPhase::broadcast_drain);
    CHECK(drain.plan.bs_code == std::vector<int>{1});
    CHECK(drain.plan.d2d.empty());

    CHECK_THROWS_AS(idnc::plan_heuristic_slot(idnc::generate_feedback(2, 2, {0.0}, 1), idnc::ConnectionMatrix(2)),
                    std::invalid_argument);
}

TEST_CASE("both worked examples complete in one heuristic slot") {
    auto triangle = idnc::run_netcam_wp(testsup::triangle_session(), testsup::triangle_topology());
    CHECK(triangle.scheduler_id == "netcam-wp");
    CHECK(triangle.completion_time == 1);
    CHECK(triangle.slots[0].label == "most-wanted");

    auto chain = idnc::run_netcam_wp(testsup::chain_session(), testsup::chain_topology());
    CHECK(chain.completion_time == 1);
    CHECK(chain.slots[0].label == "singleton-service");
    CHECK(chain.final_state.is_complete());
}

TEST_CASE("completion envelope on the worked examples") {
    auto t = idnc::completion_bounds(testsup::triangle_session(), testsup::triangle_topology());
    CHECK(t.lower == 0);
    CHECK(t.upper == 1);

    auto n = idnc::completion_bounds(testsup::chain_session(), testsup::chain_topology());
    CHECK(n.lower == 0);
    CHECK(n.upper == 2);

    // All-erased feedback: every packet needs its own uncoded slot.
    auto worst = idnc::generate_feedback(5, 3, {1.0}, 3);
    auto b = idnc::completion_bounds(worst, testsup::triangle_topology());
    CHECK(b.lower == 5);
    CHECK(b.upper == 5);
}

TEST_CASE("heuristic slots validate, progress and stay polynomial") {
    for (std::uint64_t seed = 900; seed < 960; ++seed) {
        auto inst = testsup::random_instance(seed, 9, 12);
        RunStats stats;
        auto result = idnc::run_netcam_wp(inst.session, inst.topology, &stats);
        REQUIRE(result.final_state.is_complete());
        CHECK(result.completion_time == int(result.slots.size()));
        CHECK(stats.slots == result.completion_time);

        auto state = inst.session;
        for (const auto& slot : result.slots) {
            REQUIRE(idnc::validate_plan(state, inst.topology, slot.plan).ok());
            CHECK_FALSE(slot.recoveries.empty());
            state = idnc::apply_plan(state, inst.topology, slot.plan).after;
        }
        CHECK(state.is_complete());

        // Work per slot is bounded by a fixed polynomial of the instance
        // size: the greedy scans touch (user, packet) pairs, never subsets.
        std::uint64_t n = std::uint64_t(inst.session.n_users());
        std::uint64_t m = std::uint64_t(inst.session.n_packets());
        std::uint64_t per_slot = 64 * (n + 4) * (n + 4) * (m + 4) * (m + 4);
        CHECK(stats.ops <= per_slot * std::uint64_t(result.completion_time + 1));

        auto again = idnc::run_netcam_wp(inst.session, inst.topology);
        REQUIRE(again.slots.size() == result.slots.size());
        for (std::size_t k = 0; k < again.slots.size(); ++k) CHECK(again.slots[k].plan == result.slots[k].plan);
    }
}
