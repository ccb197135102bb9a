// harness.hpp -- paired Monte Carlo experiments over scheduler sweeps.
//
// A run sweeps one dimension (user count or packet count), generating
// `trials` random instances per sweep point and handing the *same* instance
// to every scheduler. Seeds are hierarchical -- (master seed, sweep value,
// trial index) -> trial seed -> topology/feedback streams -- so any trial
// can be regenerated in isolation and reruns are byte-identical regardless
// of worker count.
//
// Slot-optimal runs that blow the solver ceiling are excluded from that
// scheduler's statistics and counted in the `excluded` column.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "idnc/session.hpp"
#include "idnc/topology.hpp"

namespace idnc {

enum class SweepVariable { n_users, n_packets };

struct ExperimentConfig {
    SweepVariable sweep = SweepVariable::n_packets;
    std::vector<int> sweep_values;
    int fixed_value = 10;  // the non-swept dimension
    TopologySpec::Kind topology_kind = TopologySpec::Kind::fully_connected;
    double edge_probability = 0.3;
    double erasure_probability = 0.25;
    int trials = 500;
    std::vector<std::string> schedulers;  // scheduler ids, CSV row order
    std::uint64_t master_seed = 1;
    int mis_vertex_ceiling = 400;
    int jobs = 1;

    bool operator==(const ExperimentConfig&) const = default;
};

// Key/value text format, one pair per line, '#' comments. Keys: sweep
// (users|packets), values (int list), fixed, topology (full|random),
// edge_prob, erasure, trials, schedulers (id list), seed, mis_ceiling.
ExperimentConfig parse_experiment_config(std::istream& in);
ExperimentConfig load_experiment_config(const std::string& path);

struct SchedulerPoint {
    int sweep_value = 0;
    std::string scheduler;
    int trials = 0;    // included in the statistics
    int excluded = 0;  // capacity-error trials
    double mean_T = 0, std_T = 0;
    int min_T = 0, max_T = 0;
    // Completion-bound telemetry, tracked for netcam-wp rows only.
    std::optional<double> lower_bound_mean, upper_bound_mean;
    int bound_violations = 0;

    bool operator==(const SchedulerPoint&) const = default;
};

struct ExperimentSummary {
    ExperimentConfig config;
    std::vector<SchedulerPoint> points;  // sweep-major, scheduler order as configured

    bool operator==(const ExperimentSummary&) const = default;
};

// The instance a given (sweep value, trial) pair maps to; exposed so tests
// and external tools can regenerate any trial.
struct TrialInstance {
    ConnectionMatrix topology;
    SessionState session;
};
TrialInstance make_trial_instance(const ExperimentConfig& config, int sweep_value, int trial);

ExperimentSummary run_trials(const ExperimentConfig& config);

void write_csv(const ExperimentSummary& summary, std::ostream& out);
void write_json(const ExperimentSummary& summary, std::ostream& out);
ExperimentSummary read_json(std::istream& in);
void write_svg(const ExperimentSummary& summary, std::ostream& out);

// Convenience: csv/json/svg side by side under `prefix` + extension.
void write_report_files(const ExperimentSummary& summary, const std::string& prefix);

}  // namespace idnc
