// topology.hpp -- device-to-device connectivity.
//
// A ConnectionMatrix is a symmetric 0/1 matrix with zero diagonal: entry
// (j,k) says whether users j and k are in mutual transmission range. A
// user's coverage area is its neighbor set; a user with empty coverage is a
// singleton and can only be served by the base station. All indices are
// 0-based internally; the text fixture format is 1-based.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "idnc/bitset.hpp"

namespace idnc {

class ConnectionMatrix {
public:
    explicit ConnectionMatrix(int n_users);

    int n_users() const { return n_; }

    void connect(int j, int k);  // throws std::invalid_argument on j==k or range
    bool connected(int j, int k) const { return j != k && rows_[j].test(k); }

    const DynamicBitset& coverage_bits(int user) const { return rows_[user]; }
    std::vector<int> coverage_area(int user) const { return rows_[user].to_indices(); }

    bool is_singleton(int user) const { return rows_[user].none(); }
    std::vector<int> singleton_users() const;

    bool operator==(const ConnectionMatrix& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    int n_;
    std::vector<DynamicBitset> rows_;
};

struct TopologySpec {
    enum class Kind { fully_connected, random_uniform };
    Kind kind = Kind::random_uniform;
    int n_users = 0;
    double edge_probability = 0.3;  // used by random_uniform only
};

// Deterministic in (spec, seed). random_uniform draws each unordered pair
// (j<k) once, in ascending (j,k) order.
ConnectionMatrix generate_topology(const TopologySpec& spec, std::uint64_t seed);

// Text fixture format ("users N" header, then one "edge j k" line per link,
// 1-based). Loaders throw io_error on malformed input; writers emit edges in
// ascending order so save/load round-trips byte-identically.
ConnectionMatrix load_topology(std::istream& in);
ConnectionMatrix load_topology_file(const std::string& path);
void save_topology(const ConnectionMatrix& c, std::ostream& out);
void save_topology_file(const ConnectionMatrix& c, const std::string& path);

}  // namespace idnc
