// session.hpp -- per-user packet reception state.
//
// After the initial broadcast phase each user holds a subset (Has) of the M
// packets and misses the rest (Wants). SessionState is an immutable value;
// recoveries produce a new state via with_recovery. The feedback matrix
// convention: f[packet][user] = 1 iff the user holds the packet.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "idnc/bitset.hpp"
#include "idnc/topology.hpp"

namespace idnc {

class SessionState {
public:
    SessionState(int n_packets, int n_users);

    // Builds from per-user Has sets (bitsets of size n_packets).
    static SessionState from_has(int n_packets, const std::vector<DynamicBitset>& has);

    int n_packets() const { return m_; }
    int n_users() const { return n_; }

    bool has(int user, int packet) const { return has_[user].test(packet); }
    bool wants(int user, int packet) const { return wants_[user].test(packet); }
    const DynamicBitset& has_bits(int user) const { return has_[user]; }
    const DynamicBitset& wants_bits(int user) const { return wants_[user]; }

    bool is_complete() const;
    int total_wants() const;

    // Number of users still missing the packet.
    int demand_count(int packet) const;

    // Packets wanted by every user (these can only ever be served uncoded by
    // the base station: no user holds them, and any coding partner would
    // collide with some user's wants).
    DynamicBitset s_bs() const;

    // Union of all users' wants.
    DynamicBitset union_wants() const;

    // Union of wants over users with empty coverage.
    DynamicBitset singleton_wants(const ConnectionMatrix& c) const;

    // Copy with one (user, packet) moved from Wants to Has.
    SessionState with_recovery(int user, int packet) const;

    bool operator==(const SessionState& o) const {
        return m_ == o.m_ && n_ == o.n_ && has_ == o.has_;
    }

private:
    int m_;  // packets
    int n_;  // users
    std::vector<DynamicBitset> has_;    // per user
    std::vector<DynamicBitset> wants_;  // per user, complement of has_
};

struct ErasureSpec {
    double erasure_probability = 0.25;
};

// Bernoulli feedback matrix: each (packet, user) entry is missing with the
// given erasure probability, drawn packet-major. Deterministic in seed.
SessionState generate_feedback(int n_packets, int n_users, const ErasureSpec& spec, std::uint64_t seed);

// Text fixture format: "packets M" / "users N" headers, then one
// "has n: p1 p2 ..." line per user (1-based, possibly empty list).
SessionState load_session(std::istream& in);
SessionState load_session_file(const std::string& path);
void save_session(const SessionState& s, std::ostream& out);
void save_session_file(const SessionState& s, const std::string& path);

}  // namespace idnc
