// Shared fixtures: the two worked examples and random-instance helpers.
#pragma once

#include <cstdint>

#include "idnc/rng.hpp"
#include "idnc/session.hpp"
#include "idnc/topology.hpp"

namespace testsup {

// Three users in mutual D2D range; four packets.
// Has sets: u1 {p1,p4}, u2 {p1,p2,p3}, u3 {p2,p3}.
inline idnc::ConnectionMatrix triangle_topology() {
    idnc::ConnectionMatrix c(3);
    c.connect(0, 1);
    c.connect(0, 2);
    c.connect(1, 2);
    return c;
}

inline idnc::SessionState triangle_session() {
    std::vector<idnc::DynamicBitset> has;
    has.push_back(idnc::DynamicBitset::of(4, {0, 3}));
    has.push_back(idnc::DynamicBitset::of(4, {0, 1, 2}));
    has.push_back(idnc::DynamicBitset::of(4, {1, 2}));
    return idnc::SessionState::from_has(4, has);
}

// Chain u1 - u2 - u3 plus isolated u4; three packets.
// Has sets: u1 {p2}, u2 {p1,p3}, u3 {p2}, u4 {p2,p3}.
inline idnc::ConnectionMatrix chain_topology() {
    idnc::ConnectionMatrix c(4);
    c.connect(0, 1);
    c.connect(1, 2);
    return c;
}

inline idnc::SessionState chain_session() {
    std::vector<idnc::DynamicBitset> has;
    has.push_back(idnc::DynamicBitset::of(3, {1}));
    has.push_back(idnc::DynamicBitset::of(3, {0, 2}));
    has.push_back(idnc::DynamicBitset::of(3, {1}));
    has.push_back(idnc::DynamicBitset::of(3, {1, 2}));
    return idnc::SessionState::from_has(3, has);
}

struct RandomInstance {
    idnc::ConnectionMatrix topology;
    idnc::SessionState session;
};

// A random instance with users in [2, max_users], packets in [1, max_packets],
// random full/intermittent topology and a random erasure rate. Deterministic
// in the seed.
inline RandomInstance random_instance(std::uint64_t seed, int max_users, int max_packets) {
    idnc::Rng pick(idnc::derive_seed(seed, 0x7069636bULL));
    int n = pick.next_between(2, max_users);
    int m = pick.next_between(1, max_packets);

    idnc::TopologySpec spec;
    spec.n_users = n;
    if (pick.next_bernoulli(0.5)) {
        spec.kind = idnc::TopologySpec::Kind::fully_connected;
    } else {
        spec.kind = idnc::TopologySpec::Kind::random_uniform;
        spec.edge_probability = 0.15 + 0.55 * pick.next_double();
    }
    double erasure = 0.1 + 0.5 * pick.next_double();

    auto c = idnc::generate_topology(spec, idnc::derive_seed(seed, 0x746f706fULL));
    auto s = idnc::generate_feedback(m, n, idnc::ErasureSpec{erasure}, idnc::derive_seed(seed, 0x66656564ULL));
    return {std::move(c), std::move(s)};
}

}  // namespace testsup
