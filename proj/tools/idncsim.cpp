// idncsim: generate instances, solve them, dump conflict graphs, run benchmarks.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "idnc/baselines.hpp"
#include "idnc/conflict_graph.hpp"
#include "idnc/engine.hpp"
#include "idnc/errors.hpp"
#include "idnc/harness.hpp"
#include "idnc/netcam_wp.hpp"
#include "idnc/opt_idnc.hpp"
#include "idnc/session.hpp"
#include "idnc/topology.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitCapacity = 4;

std::string user_label(int user) { return "UE" + std::to_string(user + 1); }

void require_matching_sizes(const idnc::ConnectionMatrix& c, const idnc::SessionState& s) {
    if (c.n_users() != s.n_users())
        throw idnc::io_error("topology has " + std::to_string(c.n_users()) +
                             " users but session has " + std::to_string(s.n_users()));
}

idnc::ScheduleResult dispatch(const std::string& scheduler, const idnc::SessionState& s,
                              const idnc::ConnectionMatrix& c, const idnc::MisOptions& mis) {
    if (scheduler == idnc::kOptIdncId) return idnc::run_opt_idnc(s, c, mis);
    if (scheduler == idnc::kNetcamWpId) return idnc::run_netcam_wp(s, c);
    if (scheduler == idnc::kUncodedBsId) return idnc::run_uncoded_bs(s, c);
    if (scheduler == idnc::kCellularOnlyId) return idnc::run_cellular_only_idnc(s, c, mis);
    throw CLI::ValidationError("--scheduler", "unknown scheduler '" + scheduler + "'");
}

void print_trace(const idnc::ScheduleResult& result) {
    for (std::size_t k = 0; k < result.slots.size(); ++k) {
        const auto& slot = result.slots[k];
        std::cout << "slot " << (k + 1);
        if (!slot.label.empty()) std::cout << " [" << slot.label << "]";
        std::cout << ": BS: " << idnc::format_code(slot.plan.bs_code);
        for (const auto& [tx, code] : slot.plan.d2d)
            std::cout << " | " << user_label(tx) << ": " << idnc::format_code(code);
        std::cout << "\n";
        for (const auto& rec : slot.recoveries) {
            std::cout << "  " << user_label(rec.user) << " <- p" << (rec.packet + 1);
            if (rec.source == idnc::kBaseStation)
                std::cout << " (cellular)\n";
            else
                std::cout << " (d2d " << user_label(rec.source) << ")\n";
        }
    }
}

void emit_graph_sequence(const std::string& prefix, const idnc::SessionState& initial,
                         const idnc::ConnectionMatrix& c, const idnc::ScheduleResult& result) {
    idnc::SessionState state = initial;
    for (std::size_t k = 0; k < result.slots.size(); ++k) {
        auto g = idnc::build_two_layer(state, c);
        std::string path = prefix + "slot" + std::to_string(k + 1) + ".dot";
        std::ofstream out(path);
        if (!out) throw idnc::io_error("cannot open '" + path + "' for writing");
        out << idnc::to_dot(g);
        state = idnc::apply_plan(state, c, result.slots[k].plan).after;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"IDNC recovery-phase scheduling simulator"};
    app.require_subcommand(1);

    // gen-topology
    auto* gen_topo = app.add_subcommand("gen-topology", "generate a D2D connection matrix");
    int gt_users = 10;
    std::string gt_kind = "full";
    double gt_edge_prob = 0.3;
    std::uint64_t gt_seed = 1;
    std::string gt_out;
    gen_topo->add_option("--users", gt_users, "number of users")->required();
    gen_topo->add_option("--kind", gt_kind, "full or random")
        ->check(CLI::IsMember({"full", "random"}));
    gen_topo->add_option("--edge-prob", gt_edge_prob, "edge probability for random topologies")
        ->check(CLI::Range(0.0, 1.0));
    gen_topo->add_option("--seed", gt_seed, "generator seed");
    gen_topo->add_option("-o,--out", gt_out, "output file")->required();

    // gen-session
    auto* gen_sess = app.add_subcommand("gen-session", "generate per-user side information");
    int gs_packets = 10;
    int gs_users = 10;
    double gs_erasure = 0.25;
    std::uint64_t gs_seed = 1;
    std::string gs_out;
    gen_sess->add_option("--packets", gs_packets, "number of packets")->required();
    gen_sess->add_option("--users", gs_users, "number of users")->required();
    gen_sess->add_option("--erasure", gs_erasure, "per-packet erasure probability")
        ->check(CLI::Range(0.0, 1.0));
    gen_sess->add_option("--seed", gs_seed, "generator seed");
    gen_sess->add_option("-o,--out", gs_out, "output file")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "schedule a recovery phase to completion");
    std::string so_topology, so_session, so_scheduler = idnc::kOptIdncId;
    bool so_trace = false;
    std::string so_emit_graph;
    int so_ceiling = idnc::MisOptions{}.vertex_ceiling;
    solve->add_option("--topology", so_topology, "topology file")->required();
    solve->add_option("--session", so_session, "session file")->required();
    solve->add_option("--scheduler", so_scheduler, "opt-idnc, netcam-wp, uncoded-bs, cellular-only-idnc")
        ->check(CLI::IsMember({idnc::kOptIdncId, idnc::kNetcamWpId, idnc::kUncodedBsId,
                               idnc::kCellularOnlyId}));
    solve->add_flag("--trace", so_trace, "print per-slot plans and recoveries");
    solve->add_option("--emit-graph", so_emit_graph, "write per-slot conflict graphs to PREFIXslotK.dot");
    solve->add_option("--mis-ceiling", so_ceiling, "vertex ceiling for the exact solver");

    // graph
    auto* graph = app.add_subcommand("graph", "dump a conflict graph in DOT format");
    std::string gr_topology, gr_session, gr_layer = "two", gr_out;
    graph->add_option("--topology", gr_topology, "topology file")->required();
    graph->add_option("--session", gr_session, "session file")->required();
    graph->add_option("--layer", gr_layer, "two, higher, or lower")
        ->check(CLI::IsMember({"two", "higher", "lower"}));
    graph->add_option("-o,--out", gr_out, "output file (stdout if omitted)");

    // bench
    auto* bench = app.add_subcommand("bench", "run a Monte Carlo sweep from a config file");
    std::string be_config, be_out = "bench";
    int be_jobs = 0;
    bench->add_option("--config", be_config, "experiment config file")->required();
    bench->add_option("--out", be_out, "output prefix for .csv/.json/.svg");
    bench->add_option("--jobs", be_jobs, "worker threads (default: config value)")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    if (gen_topo->parsed()) {
        idnc::TopologySpec spec;
        spec.n_users = gt_users;
        spec.kind = gt_kind == "full" ? idnc::TopologySpec::Kind::fully_connected
                                      : idnc::TopologySpec::Kind::random_uniform;
        spec.edge_probability = gt_edge_prob;
        idnc::save_topology_file(idnc::generate_topology(spec, gt_seed), gt_out);
        std::cout << "wrote " << gt_out << "\n";
        return 0;
    }

    if (gen_sess->parsed()) {
        auto state = idnc::generate_feedback(gs_packets, gs_users, idnc::ErasureSpec{gs_erasure}, gs_seed);
        idnc::save_session_file(state, gs_out);
        std::cout << "wrote " << gs_out << "\n";
        return 0;
    }

    if (solve->parsed()) {
        auto c = idnc::load_topology_file(so_topology);
        auto s = idnc::load_session_file(so_session);
        require_matching_sizes(c, s);
        idnc::MisOptions mis;
        mis.vertex_ceiling = so_ceiling;
        auto result = dispatch(so_scheduler, s, c, mis);
        if (!so_emit_graph.empty()) emit_graph_sequence(so_emit_graph, s, c, result);
        if (so_trace) print_trace(result);
        std::cout << "T = " << result.completion_time << "\n";
        return 0;
    }

    if (graph->parsed()) {
        auto c = idnc::load_topology_file(gr_topology);
        auto s = idnc::load_session_file(gr_session);
        require_matching_sizes(c, s);
        idnc::ConflictGraph g = gr_layer == "higher" ? idnc::build_higher_layer(s)
                              : gr_layer == "lower"  ? idnc::build_lower_layer(s, c)
                                                     : idnc::build_two_layer(s, c);
        if (gr_out.empty()) {
            std::cout << idnc::to_dot(g);
        } else {
            std::ofstream out(gr_out);
            if (!out) throw idnc::io_error("cannot open '" + gr_out + "' for writing");
            out << idnc::to_dot(g);
            std::cout << "wrote " << gr_out << "\n";
        }
        return 0;
    }

    if (bench->parsed()) {
        auto config = idnc::load_experiment_config(be_config);
        if (be_jobs > 0) config.jobs = be_jobs;
        auto summary = idnc::run_trials(config);
        idnc::write_report_files(summary, be_out);
        std::cout << "wrote " << be_out << ".csv, " << be_out << ".json, " << be_out << ".svg\n";
        for (const auto& pt : summary.points) {
            std::cout << "  " << pt.scheduler << " @ " << pt.sweep_value << ": mean T = ";
            if (pt.trials > 0) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3f", pt.mean_T);
                std::cout << buf;
            } else {
                std::cout << "n/a";
            }
            std::cout << " (" << pt.trials << " trials";
            if (pt.excluded > 0) std::cout << ", " << pt.excluded << " excluded";
            std::cout << ")\n";
        }
        return 0;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const idnc::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "hint: retry with --scheduler netcam-wp or raise --mis-ceiling\n";
        return kExitCapacity;
    } catch (const idnc::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
