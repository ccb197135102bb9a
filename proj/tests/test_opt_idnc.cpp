#include <doctest.h>

#include "idnc/conflict_graph.hpp"
#include "idnc/engine.hpp"
#include "idnc/errors.hpp"
#include "idnc/opt_idnc.hpp"

#include "test_support.hpp"

using idnc::MisOptions;
using idnc::TransmissionPlan;

TEST_CASE("triangle instance completes in a single joint slot") {
    auto result = idnc::run_opt_idnc(testsup::triangle_session(), testsup::triangle_topology());
    CHECK(result.scheduler_id == "opt-idnc");
    REQUIRE(result.completion_time == 1);
    REQUIRE(result.slots.size() == 1);

    TransmissionPlan expect;
    expect.bs_code = {2, 3};
    expect.d2d[1] = {0, 1};
    CHECK(result.slots[0].plan == expect);
    CHECK(result.slots[0].recoveries.size() == 5);
    CHECK(result.final_state.is_complete());
}

TEST_CASE("chain instance takes two slots with the isolated user served last") {
    auto result = idnc::run_opt_idnc(testsup::chain_session(), testsup::chain_topology());
    REQUIRE(result.completion_time == 2);

    TransmissionPlan first;
    first.bs_code = {1, 2};
    first.d2d[1] = {0};
    CHECK(result.slots[0].plan == first);

    TransmissionPlan second;  // only u4's want for p1 is left
    second.bs_code = {0};
    CHECK(result.slots[1].plan == second);
    CHECK(result.final_state.is_complete());
}

TEST_CASE("the solver ceiling turns into an annotated capacity error") {
    MisOptions tiny;
    tiny.vertex_ceiling = 4;
    try {
        idnc::run_opt_idnc(testsup::triangle_session(), testsup::triangle_topology(), tiny);
        FAIL("expected capacity_error");
    } catch (const idnc::capacity_error& e) {
        std::string what = e.what();
        CHECK(what.find("3 users") != std::string::npos);
        CHECK(what.find("4 packets") != std::string::npos);
    }
}

TEST_CASE("every slot is valid, serves the solver's set size, and makes progress") {
    for (std::uint64_t seed = 500; seed < 540; ++seed) {
        auto inst = testsup::random_instance(seed, 6, 8);
        auto result = idnc::run_opt_idnc(inst.session, inst.topology);
        REQUIRE(result.final_state.is_complete());

        auto state = inst.session;
        for (const auto& slot : result.slots) {
            REQUIRE(idnc::validate_plan(state, inst.topology, slot.plan).ok());

            // Replay invariant: each vertex of the chosen set serves at least
            // one recovery, so the slot serves at least the set's size.
            auto g = idnc::build_two_layer(state, inst.topology);
            int best = idnc::maximum_independent_set(g.adjacency()).count();
            CHECK(int(slot.recoveries.size()) >= best);
            CHECK(slot.recoveries.size() >= 1);

            auto outcome = idnc::apply_plan(state, inst.topology, slot.plan);
            REQUIRE(outcome.recoveries == slot.recoveries);
            state = outcome.after;
        }
        CHECK(state == result.final_state);
        CHECK(int(result.slots.size()) == result.completion_time);

        // Identical runs give identical schedules.
        auto again = idnc::run_opt_idnc(inst.session, inst.topology);
        REQUIRE(again.slots.size() == result.slots.size());
        for (std::size_t k = 0; k < again.slots.size(); ++k) CHECK(again.slots[k].plan == result.slots[k].plan);
    }
}
