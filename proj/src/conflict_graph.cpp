#include "idnc/conflict_graph.hpp"

#include <algorithm>
#include <sstream>

#include "idnc/errors.hpp"

namespace idnc {

std::string format_code(const std::vector<int>& packets) {
    if (packets.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < packets.size(); ++i) {
        if (i) out += "+";
        out += "p" + std::to_string(packets[i] + 1);
    }
    return out;
}

std::string format_plan(const TransmissionPlan& plan) {
    std::string out = "BS: " + format_code(plan.bs_code);
    for (const auto& [t, code] : plan.d2d) out += " | UE" + std::to_string(t + 1) + ": " + format_code(code);
    return out;
}

std::string edge_reason_names(unsigned reasons) {
    static const std::pair<unsigned, const char*> kNames[] = {
        {kReasonInadmissibleBs, "inadmissible_bs"},
        {kReasonC1, "c1"},
        {kReasonC2, "c2"},
        {kReasonC3, "c3"},
        {kReasonRedundancy, "redundancy"},
    };
    std::string out;
    for (const auto& [bit, name] : kNames) {
        if (reasons & bit) {
            if (!out.empty()) out += ",";
            out += name;
        }
    }
    return out;
}

ConflictGraph::ConflictGraph(std::vector<Vertex> vertices)
    : vertices_(std::move(vertices)), adj_(int(vertices_.size())) {}

std::optional<int> ConflictGraph::find_vertex(int transmitter, int packet) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (vertices_[std::size_t(v)].transmitter == transmitter && vertices_[std::size_t(v)].packet == packet)
            return v;
    return std::nullopt;
}

namespace {
std::int64_t pack_edge(int i, int j) { return std::int64_t(i) << 32 | std::uint32_t(j); }
}  // namespace

void ConflictGraph::add_edge(int i, int j, unsigned reasons) {
    if (reasons == 0) throw std::invalid_argument("conflict graph: edge without a reason");
    if (i > j) std::swap(i, j);
    if (!adj_.has_edge(i, j)) adj_.add_edge(i, j);
    reasons_[pack_edge(i, j)] |= reasons;
}

unsigned ConflictGraph::edge_reasons(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = reasons_.find(pack_edge(i, j));
    return it == reasons_.end() ? 0 : it->second;
}

namespace {

std::string vertex_label(const Vertex& v) {
    if (v.is_bs()) return "BS:p" + std::to_string(v.packet + 1);
    return "u" + std::to_string(v.transmitter + 1) + ":p" + std::to_string(v.packet + 1);
}

std::vector<Vertex> higher_layer_vertices(const SessionState& s) {
    std::vector<Vertex> vs;
    DynamicBitset missing = s.union_wants();
    missing.for_each([&](int p) { vs.push_back({kBaseStation, p}); });
    return vs;
}

// (i, l) exists iff i holds l and some neighbor of i wants l.
std::vector<Vertex> lower_layer_vertices(const SessionState& s, const ConnectionMatrix& c) {
    std::vector<Vertex> vs;
    for (int i = 0; i < s.n_users(); ++i) {
        s.has_bits(i).for_each([&](int l) {
            bool wanted = false;
            c.coverage_bits(i).for_each([&](int k) {
                if (s.wants(k, l)) wanted = true;
            });
            if (wanted) vs.push_back({i, l});
        });
    }
    return vs;
}

// Adds the BS-layer edges among vertices [0, n_bs): two packets clash when
// some user wants both (the XOR would be undecodable for that user).
void add_higher_edges(ConflictGraph& g, const SessionState& s, int n_bs) {
    for (int a = 0; a < n_bs; ++a) {
        for (int b = a + 1; b < n_bs; ++b) {
            int p = g.vertex(a).packet, q = g.vertex(b).packet;
            for (int u = 0; u < s.n_users(); ++u) {
                if (s.wants(u, p) && s.wants(u, q)) {
                    g.add_edge(a, b, kReasonInadmissibleBs);
                    break;
                }
            }
        }
    }
}

// Adds the user-layer edges among vertices [base, base+n_lower).
void add_lower_edges(ConflictGraph& g, const SessionState& s, const ConnectionMatrix& c, int base, int n_lower) {
    for (int a = 0; a < n_lower; ++a) {
        const Vertex& va = g.vertex(base + a);
        for (int b = a + 1; b < n_lower; ++b) {
            const Vertex& vb = g.vertex(base + b);
            unsigned reasons = 0;
            if (va.transmitter == vb.transmitter) {
                // C1: same transmitter, pair wanted in full by some neighbor.
                c.coverage_bits(va.transmitter).for_each([&](int k) {
                    if (s.wants(k, va.packet) && s.wants(k, vb.packet)) reasons |= kReasonC1;
                });
            } else {
                // C2: both transmitters reach a common user (congestion).
                if (c.coverage_bits(va.transmitter).intersects(c.coverage_bits(vb.transmitter)))
                    reasons |= kReasonC2;
                // C3: the transmitters are in range of each other (conflict).
                if (c.connected(va.transmitter, vb.transmitter)) reasons |= kReasonC3;
            }
            if (reasons) g.add_edge(base + a, base + b, reasons);
        }
    }
}

}  // namespace

ConflictGraph build_higher_layer(const SessionState& s) {
    ConflictGraph g(higher_layer_vertices(s));
    add_higher_edges(g, s, g.vertex_count());
    return g;
}

ConflictGraph build_lower_layer(const SessionState& s, const ConnectionMatrix& c) {
    ConflictGraph g(lower_layer_vertices(s, c));
    add_lower_edges(g, s, c, 0, g.vertex_count());
    return g;
}

ConflictGraph build_two_layer(const SessionState& s, const ConnectionMatrix& c) {
    std::vector<Vertex> vs = higher_layer_vertices(s);
    int n_bs = int(vs.size());
    std::vector<Vertex> lower = lower_layer_vertices(s, c);
    vs.insert(vs.end(), lower.begin(), lower.end());

    ConflictGraph g(std::move(vs));
    add_higher_edges(g, s, n_bs);
    add_lower_edges(g, s, c, n_bs, g.vertex_count() - n_bs);
    // Cross-layer: the same packet must not ride both links.
    for (int a = 0; a < n_bs; ++a)
        for (int b = n_bs; b < g.vertex_count(); ++b)
            if (g.vertex(a).packet == g.vertex(b).packet) g.add_edge(a, b, kReasonRedundancy);
    return g;
}

TransmissionPlan plan_from_vertices(const ConflictGraph& g, const DynamicBitset& members) {
    TransmissionPlan plan;
    members.for_each([&](int v) {
        const Vertex& vx = g.vertex(v);
        if (vx.is_bs())
            plan.bs_code.push_back(vx.packet);
        else
            plan.d2d[vx.transmitter].push_back(vx.packet);
    });
    std::sort(plan.bs_code.begin(), plan.bs_code.end());
    for (auto& [t, code] : plan.d2d) std::sort(code.begin(), code.end());
    return plan;
}

TransmissionPlan decode_independent_set(const ConflictGraph& g, const DynamicBitset& members) {
    if (members.size() != g.vertex_count())
        throw std::invalid_argument("decode: member set size does not match the graph");
    for (int v = members.find_first(); v != -1; v = members.find_next(v)) {
        for (int u = members.find_next(v); u != -1; u = members.find_next(u)) {
            if (g.has_edge(v, u))
                throw feasibility_error("decode: vertices " + vertex_label(g.vertex(v)) + " and " +
                                        vertex_label(g.vertex(u)) + " are joined by a " +
                                        edge_reason_names(g.edge_reasons(v, u)) + " edge");
        }
    }
    return plan_from_vertices(g, members);
}

std::string to_dot(const ConflictGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [shape=ellipse];\n";
    for (const Vertex& v : g.vertices()) out << "  \"" << vertex_label(v) << "\";\n";
    for (int i = 0; i < g.vertex_count(); ++i) {
        for (int j = i + 1; j < g.vertex_count(); ++j) {
            if (!g.has_edge(i, j)) continue;
            out << "  \"" << vertex_label(g.vertex(i)) << "\" -- \"" << vertex_label(g.vertex(j))
                << "\" [label=\"" << edge_reason_names(g.edge_reasons(i, j)) << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace idnc
