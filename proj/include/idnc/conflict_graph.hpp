// conflict_graph.hpp -- the two-layer conflict graph.
//
// Vertices are candidate (transmitter, packet) pairs:
//   higher layer: one BS vertex per packet some user still wants;
//   lower layer:  one vertex (i, l) per user i holding packet l with at
//                 least one neighbor wanting l.
// An edge marks a pair that cannot be served in the same slot. Reasons:
//   inadmissible_bs  two packets both wanted by one user (BS layer);
//   c1               same D2D transmitter, packet pair undecodable for a
//                    neighbor that wants both;
//   c2               distinct transmitters sharing a neighbor (congestion);
//   c3               distinct transmitters in range of each other (conflict);
//   redundancy       same packet offered by the BS and a D2D transmitter.
// Independent sets are exactly the valid joint plans; decode turns one into
// a TransmissionPlan.
//
// Vertex order is fixed (BS layer by packet, then user layer by
// (user, packet)) so solver tie-breaks are meaningful.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "idnc/adjacency.hpp"
#include "idnc/plan.hpp"
#include "idnc/session.hpp"
#include "idnc/topology.hpp"

namespace idnc {

struct Vertex {
    int transmitter;  // kBaseStation or user index
    int packet;

    bool is_bs() const { return transmitter == kBaseStation; }
    bool operator==(const Vertex& o) const { return transmitter == o.transmitter && packet == o.packet; }
};

enum EdgeReason : unsigned {
    kReasonInadmissibleBs = 1u << 0,
    kReasonC1 = 1u << 1,
    kReasonC2 = 1u << 2,
    kReasonC3 = 1u << 3,
    kReasonRedundancy = 1u << 4,
};

std::string edge_reason_names(unsigned reasons);  // "c2,c3" style

class ConflictGraph {
public:
    explicit ConflictGraph(std::vector<Vertex> vertices);

    int vertex_count() const { return adj_.n; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& vertex(int v) const { return vertices_[std::size_t(v)]; }
    const Adjacency& adjacency() const { return adj_; }

    std::optional<int> find_vertex(int transmitter, int packet) const;

    void add_edge(int i, int j, unsigned reasons);
    bool has_edge(int i, int j) const { return adj_.has_edge(i, j); }
    // 0 when not adjacent.
    unsigned edge_reasons(int i, int j) const;
    int edge_count() const { return adj_.edge_count(); }

private:
    std::vector<Vertex> vertices_;
    Adjacency adj_;
    std::unordered_map<std::int64_t, unsigned> reasons_;  // packed (i<j) -> reason mask
};

ConflictGraph build_higher_layer(const SessionState& s);
ConflictGraph build_lower_layer(const SessionState& s, const ConnectionMatrix& c);
ConflictGraph build_two_layer(const SessionState& s, const ConnectionMatrix& c);

// Groups the member vertices into a plan without any checking. decode
// validates independence first and throws feasibility_error naming a
// violating edge.
TransmissionPlan plan_from_vertices(const ConflictGraph& g, const DynamicBitset& members);
TransmissionPlan decode_independent_set(const ConflictGraph& g, const DynamicBitset& members);

// Graphviz rendering; vertices labeled "BS:p3" / "u2:p1" (1-based), edges
// labeled with their reason tags.
std::string to_dot(const ConflictGraph& g, const std::string& name = "conflict");

}  // namespace idnc
