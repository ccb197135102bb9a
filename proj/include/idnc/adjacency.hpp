// adjacency.hpp -- undirected graph adjacency as bitset rows.
//
// Shared between the conflict-graph builders and the independent-set
// solvers; the solvers only see this, never the vertex semantics.
#pragma once

#include <stdexcept>

#include "idnc/bitset.hpp"

namespace idnc {

struct Adjacency {
    int n = 0;
    std::vector<DynamicBitset> rows;

    Adjacency() = default;
    explicit Adjacency(int n_vertices) : n(n_vertices), rows(n_vertices, DynamicBitset(n_vertices)) {}

    void add_edge(int i, int j) {
        if (i == j) throw std::invalid_argument("adjacency: self loop");
        if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("adjacency: vertex out of range");
        rows[i].set(j);
        rows[j].set(i);
    }

    bool has_edge(int i, int j) const { return rows[i].test(j); }

    int edge_count() const {
        int deg = 0;
        for (const auto& r : rows) deg += r.count();
        return deg / 2;
    }
};

}  // namespace idnc
