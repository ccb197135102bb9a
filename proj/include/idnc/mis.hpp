// mis.hpp -- maximum independent set.
//
// maximum_independent_set runs Bron-Kerbosch with pivoting over the
// complement adjacency (a maximum independent set of G is a maximum clique
// of its complement). Deterministic: among all maximum sets the one with
// the smallest bitmask value (vertex 0 = lowest bit) is returned, so every
// downstream schedule is reproducible.
//
// brute_force_mis is the reference oracle: an O(2^n) subset sweep with the
// same tie-break, guarded to small graphs. The two must agree exactly.
#pragma once

#include "idnc/adjacency.hpp"

namespace idnc {

struct MisOptions {
    // Refuse graphs above this many vertices instead of risking an unbounded
    // exponential search; capacity_error suggests the polynomial scheduler.
    int vertex_ceiling = 400;
};

// Throws capacity_error when the graph exceeds options.vertex_ceiling.
DynamicBitset maximum_independent_set(const Adjacency& g, const MisOptions& options = {});

// Exhaustive oracle; throws capacity_error above 22 vertices.
DynamicBitset brute_force_mis(const Adjacency& g);

bool is_independent(const Adjacency& g, const DynamicBitset& members);

}  // namespace idnc
