#include <doctest.h>

#include "idnc/adjacency.hpp"
#include "idnc/errors.hpp"
#include "idnc/mis.hpp"
#include "idnc/rng.hpp"

using idnc::Adjacency;
using idnc::DynamicBitset;

namespace {

Adjacency random_graph(int n, double density, std::uint64_t seed) {
    Adjacency g(n);
    idnc::Rng rng(seed);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_bernoulli(density)) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("independence predicate") {
    Adjacency g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CHECK(idnc::is_independent(g, DynamicBitset::of(4, {0, 2})));
    CHECK(idnc::is_independent(g, DynamicBitset(4)));
    CHECK_FALSE(idnc::is_independent(g, DynamicBitset::of(4, {2, 3})));
}

TEST_CASE("solver handles the degenerate shapes") {
    Adjacency empty(0);
    CHECK(idnc::maximum_independent_set(empty).size() == 0);
    CHECK(idnc::brute_force_mis(empty).size() == 0);

    Adjacency loose(5);  // no edges: everything is independent
    CHECK(idnc::maximum_independent_set(loose) == DynamicBitset::of(5, {0, 1, 2, 3, 4}));

    Adjacency full(5);  // complete graph: any single vertex, lowest mask wins
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) full.add_edge(i, j);
    CHECK(idnc::maximum_independent_set(full) == DynamicBitset::of(5, {0}));

    Adjacency path(3);  // 0-1-2
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(idnc::maximum_independent_set(path) == DynamicBitset::of(3, {0, 2}));
}

TEST_CASE("ties resolve to the smallest mask") {
    // Two disjoint edges: four maximum sets; {0,2} has the smallest mask.
    Adjacency g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CHECK(idnc::maximum_independent_set(g) == DynamicBitset::of(4, {0, 2}));
    CHECK(idnc::brute_force_mis(g) == DynamicBitset::of(4, {0, 2}));

    // A 5-cycle: maximum sets are size 2; {0,2} is the smallest.
    Adjacency cycle(5);
    for (int i = 0; i < 5; ++i) cycle.add_edge(i, (i + 1) % 5);
    CHECK(idnc::maximum_independent_set(cycle) == DynamicBitset::of(5, {0, 2}));
    CHECK(idnc::brute_force_mis(cycle) == DynamicBitset::of(5, {0, 2}));
}

TEST_CASE("solver and oracle agree exactly on random graphs") {
    std::uint64_t seed = 1;
    for (int n : {1, 2, 5, 9, 13, 16}) {
        for (double density : {0.1, 0.35, 0.7}) {
            for (int rep = 0; rep < 12; ++rep) {
                auto g = random_graph(n, density, seed++);
                auto fast = idnc::maximum_independent_set(g);
                auto slow = idnc::brute_force_mis(g);
                REQUIRE(idnc::is_independent(g, fast));
                REQUIRE(fast.count() == slow.count());
                REQUIRE(fast == slow);  // identical tie-break, not just size
            }
        }
    }
}

TEST_CASE("capacity guards trip with instructive messages") {
    Adjacency g(23);
    CHECK_THROWS_AS(idnc::brute_force_mis(g), idnc::capacity_error);

    idnc::MisOptions tight;
    tight.vertex_ceiling = 10;
    Adjacency big(11);
    CHECK_THROWS_AS(idnc::maximum_independent_set(big, tight), idnc::capacity_error);
    try {
        idnc::maximum_independent_set(big, tight);
        FAIL("expected capacity_error");
    } catch (const idnc::capacity_error& e) {
        CHECK(std::string(e.what()).find("ceiling") != std::string::npos);
    }
}
