#include "idnc/harness.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "idnc/baselines.hpp"
#include "idnc/errors.hpp"
#include "idnc/netcam_wp.hpp"
#include "idnc/opt_idnc.hpp"
#include "idnc/rng.hpp"

namespace idnc {

namespace {

constexpr std::uint64_t kTopologyStream = 0x746f706fULL;  // sub-stream tags
constexpr std::uint64_t kFeedbackStream = 0x66656564ULL;

[[noreturn]] void bad_config(const std::string& what, int line_no) {
    throw io_error("experiment config: " + what + " (line " + std::to_string(line_no) + ")");
}

struct TrialResult {
    // Parallel to config.schedulers; nullopt = excluded (capacity error).
    std::vector<std::optional<int>> completion;
    int bound_lower = 0, bound_upper = 0;
};

TrialResult run_one_trial(const ExperimentConfig& config, int sweep_value, int trial) {
    TrialInstance instance = make_trial_instance(config, sweep_value, trial);
    TrialResult result;
    result.completion.reserve(config.schedulers.size());
    CompletionBounds bounds = completion_bounds(instance.session, instance.topology);
    result.bound_lower = bounds.lower;
    result.bound_upper = bounds.upper;

    MisOptions mis{config.mis_vertex_ceiling};
    auto completion_of = [&](const std::string& id) -> int {
        if (id == kUncodedBsId) return run_uncoded_bs(instance.session, instance.topology).completion_time;
        if (id == kCellularOnlyId)
            return run_cellular_only_idnc(instance.session, instance.topology, mis).completion_time;
        if (id == kOptIdncId) return run_opt_idnc(instance.session, instance.topology, mis).completion_time;
        if (id == kNetcamWpId) return run_netcam_wp(instance.session, instance.topology).completion_time;
        throw std::invalid_argument("unknown scheduler id: " + id);
    };
    for (const std::string& id : config.schedulers) {
        try {
            result.completion.push_back(completion_of(id));
        } catch (const capacity_error&) {
            result.completion.push_back(std::nullopt);
        }
    }
    return result;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

TrialInstance make_trial_instance(const ExperimentConfig& config, int sweep_value, int trial) {
    int n_users = config.sweep == SweepVariable::n_users ? sweep_value : config.fixed_value;
    int n_packets = config.sweep == SweepVariable::n_packets ? sweep_value : config.fixed_value;

    std::uint64_t trial_seed = derive_seed(config.master_seed, std::uint64_t(sweep_value), std::uint64_t(trial));
    TopologySpec topo{config.topology_kind, n_users, config.edge_probability};
    ConnectionMatrix c = generate_topology(topo, derive_seed(trial_seed, kTopologyStream));
    SessionState s = generate_feedback(n_packets, n_users, ErasureSpec{config.erasure_probability},
                                       derive_seed(trial_seed, kFeedbackStream));
    return {std::move(c), std::move(s)};
}

ExperimentSummary run_trials(const ExperimentConfig& config) {
    if (config.sweep_values.empty()) throw std::invalid_argument("run_trials: no sweep values");
    if (config.schedulers.empty()) throw std::invalid_argument("run_trials: no schedulers");
    if (config.trials <= 0) throw std::invalid_argument("run_trials: trials must be positive");

    ExperimentSummary summary;
    summary.config = config;

    for (int sweep_value : config.sweep_values) {
        std::vector<TrialResult> rows(std::size_t(config.trials));

        int jobs = std::max(1, config.jobs);
        if (jobs == 1) {
            for (int t = 0; t < config.trials; ++t) rows[std::size_t(t)] = run_one_trial(config, sweep_value, t);
        } else {
            // Trials are independent; the shared cursor only hands out
            // indices, results land in preallocated slots.
            std::atomic<int> cursor{0};
            auto worker = [&] {
                for (int t = cursor.fetch_add(1); t < config.trials; t = cursor.fetch_add(1))
                    rows[std::size_t(t)] = run_one_trial(config, sweep_value, t);
            };
            std::vector<std::thread> pool;
            for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }

        // Aggregate sequentially, trial-major, so output is independent of
        // worker interleaving.
        for (std::size_t sched = 0; sched < config.schedulers.size(); ++sched) {
            SchedulerPoint point;
            point.sweep_value = sweep_value;
            point.scheduler = config.schedulers[sched];

            std::vector<int> times;
            double bound_lower_sum = 0, bound_upper_sum = 0;
            for (const TrialResult& row : rows) {
                if (!row.completion[sched]) {
                    point.excluded += 1;
                    continue;
                }
                int T = *row.completion[sched];
                times.push_back(T);
                bound_lower_sum += row.bound_lower;
                bound_upper_sum += row.bound_upper;
                if (point.scheduler == kNetcamWpId && (T < row.bound_lower || T > row.bound_upper))
                    point.bound_violations += 1;
            }
            point.trials = int(times.size());
            if (!times.empty()) {
                double sum = 0;
                point.min_T = point.max_T = times[0];
                for (int T : times) {
                    sum += T;
                    point.min_T = std::min(point.min_T, T);
                    point.max_T = std::max(point.max_T, T);
                }
                point.mean_T = sum / double(times.size());
                double sq = 0;
                for (int T : times) sq += (T - point.mean_T) * (T - point.mean_T);
                point.std_T = times.size() > 1 ? std::sqrt(sq / double(times.size() - 1)) : 0.0;
                if (point.scheduler == kNetcamWpId) {
                    point.lower_bound_mean = bound_lower_sum / double(times.size());
                    point.upper_bound_mean = bound_upper_sum / double(times.size());
                }
            }
            summary.points.push_back(std::move(point));
        }
    }
    return summary;
}

// ---------------------------------------------------------------- config --

ExperimentConfig parse_experiment_config(std::istream& in) {
    ExperimentConfig config;
    bool saw_values = false, saw_schedulers = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::string key;
        if (!(row >> key)) continue;

        auto want_int = [&](int min_value) {
            int v = 0;
            if (!(row >> v) || v < min_value) bad_config("bad integer for '" + key + "'", line_no);
            return v;
        };
        auto want_double = [&](double lo, double hi) {
            double v = 0;
            if (!(row >> v) || v < lo || v > hi) bad_config("bad value for '" + key + "'", line_no);
            return v;
        };

        if (key == "sweep") {
            std::string v;
            row >> v;
            if (v == "users")
                config.sweep = SweepVariable::n_users;
            else if (v == "packets")
                config.sweep = SweepVariable::n_packets;
            else
                bad_config("sweep must be 'users' or 'packets'", line_no);
        } else if (key == "values") {
            config.sweep_values.clear();
            int v = 0;
            while (row >> v) {
                if (v <= 0) bad_config("sweep values must be positive", line_no);
                config.sweep_values.push_back(v);
            }
            if (!row.eof() || config.sweep_values.empty()) bad_config("bad sweep value list", line_no);
            saw_values = true;
        } else if (key == "fixed") {
            config.fixed_value = want_int(1);
        } else if (key == "topology") {
            std::string v;
            row >> v;
            if (v == "full")
                config.topology_kind = TopologySpec::Kind::fully_connected;
            else if (v == "random")
                config.topology_kind = TopologySpec::Kind::random_uniform;
            else
                bad_config("topology must be 'full' or 'random'", line_no);
        } else if (key == "edge_prob") {
            config.edge_probability = want_double(0.0, 1.0);
        } else if (key == "erasure") {
            config.erasure_probability = want_double(0.0, 1.0);
        } else if (key == "trials") {
            config.trials = want_int(1);
        } else if (key == "schedulers") {
            config.schedulers.clear();
            std::string id;
            while (row >> id) {
                if (id != kUncodedBsId && id != kCellularOnlyId && id != kOptIdncId && id != kNetcamWpId)
                    bad_config("unknown scheduler '" + id + "'", line_no);
                config.schedulers.push_back(id);
            }
            if (config.schedulers.empty()) bad_config("empty scheduler list", line_no);
            saw_schedulers = true;
        } else if (key == "seed") {
            std::uint64_t v = 0;
            if (!(row >> v)) bad_config("bad seed", line_no);
            config.master_seed = v;
        } else if (key == "mis_ceiling") {
            config.mis_vertex_ceiling = want_int(1);
        } else {
            bad_config("unknown key '" + key + "'", line_no);
        }
    }
    if (!saw_values) throw io_error("experiment config: missing 'values'");
    if (!saw_schedulers) throw io_error("experiment config: missing 'schedulers'");
    return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config file: " + path);
    return parse_experiment_config(in);
}

// --------------------------------------------------------------- reports --

void write_csv(const ExperimentSummary& summary, std::ostream& out) {
    out << "sweep_value,scheduler,mean_T,std_T,min_T,max_T,trials,excluded,lower_bound_mean,upper_bound_mean\n";
    for (const SchedulerPoint& p : summary.points) {
        out << p.sweep_value << "," << p.scheduler << ",";
        if (p.trials > 0)
            out << format_double(p.mean_T) << "," << format_double(p.std_T) << "," << p.min_T << "," << p.max_T;
        else
            out << ",,,";
        out << "," << p.trials << "," << p.excluded << ",";
        if (p.lower_bound_mean) out << format_double(*p.lower_bound_mean);
        out << ",";
        if (p.upper_bound_mean) out << format_double(*p.upper_bound_mean);
        out << "\n";
    }
}

namespace {

nlohmann::json config_to_json(const ExperimentConfig& c) {
    return {
        {"sweep", c.sweep == SweepVariable::n_users ? "users" : "packets"},
        {"values", c.sweep_values},
        {"fixed", c.fixed_value},
        {"topology", c.topology_kind == TopologySpec::Kind::fully_connected ? "full" : "random"},
        {"edge_prob", c.edge_probability},
        {"erasure", c.erasure_probability},
        {"trials", c.trials},
        {"schedulers", c.schedulers},
        {"seed", c.master_seed},
        {"mis_ceiling", c.mis_vertex_ceiling},
    };
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    c.sweep = j.at("sweep") == "users" ? SweepVariable::n_users : SweepVariable::n_packets;
    c.sweep_values = j.at("values").get<std::vector<int>>();
    c.fixed_value = j.at("fixed").get<int>();
    c.topology_kind = j.at("topology") == "full" ? TopologySpec::Kind::fully_connected
                                                 : TopologySpec::Kind::random_uniform;
    c.edge_probability = j.at("edge_prob").get<double>();
    c.erasure_probability = j.at("erasure").get<double>();
    c.trials = j.at("trials").get<int>();
    c.schedulers = j.at("schedulers").get<std::vector<std::string>>();
    c.master_seed = j.at("seed").get<std::uint64_t>();
    c.mis_vertex_ceiling = j.at("mis_ceiling").get<int>();
    return c;
}

}  // namespace

void write_json(const ExperimentSummary& summary, std::ostream& out) {
    nlohmann::json points = nlohmann::json::array();
    for (const SchedulerPoint& p : summary.points) {
        nlohmann::json jp = {
            {"sweep_value", p.sweep_value}, {"scheduler", p.scheduler},
            {"trials", p.trials},           {"excluded", p.excluded},
            {"mean_T", p.mean_T},           {"std_T", p.std_T},
            {"min_T", p.min_T},             {"max_T", p.max_T},
            {"bound_violations", p.bound_violations},
        };
        if (p.lower_bound_mean) jp["lower_bound_mean"] = *p.lower_bound_mean;
        if (p.upper_bound_mean) jp["upper_bound_mean"] = *p.upper_bound_mean;
        points.push_back(std::move(jp));
    }
    nlohmann::json doc = {{"config", config_to_json(summary.config)}, {"points", points}};
    out << doc.dump(2) << "\n";
}

ExperimentSummary read_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
        ExperimentSummary summary;
        summary.config = config_from_json(doc.at("config"));
        for (const auto& jp : doc.at("points")) {
            SchedulerPoint p;
            p.sweep_value = jp.at("sweep_value").get<int>();
            p.scheduler = jp.at("scheduler").get<std::string>();
            p.trials = jp.at("trials").get<int>();
            p.excluded = jp.at("excluded").get<int>();
            p.mean_T = jp.at("mean_T").get<double>();
            p.std_T = jp.at("std_T").get<double>();
            p.min_T = jp.at("min_T").get<int>();
            p.max_T = jp.at("max_T").get<int>();
            p.bound_violations = jp.at("bound_violations").get<int>();
            if (jp.contains("lower_bound_mean")) p.lower_bound_mean = jp.at("lower_bound_mean").get<double>();
            if (jp.contains("upper_bound_mean")) p.upper_bound_mean = jp.at("upper_bound_mean").get<double>();
            summary.points.push_back(std::move(p));
        }
        return summary;
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("bad summary json: ") + e.what());
    }
}

void write_svg(const ExperimentSummary& summary, std::ostream& out) {
    const int width = 640, height = 420;
    const int left = 60, right = 24, top = 40, bottom = 48;
    const int plot_w = width - left - right, plot_h = height - top - bottom;

    double max_mean = 1.0;
    int min_x = summary.config.sweep_values.empty() ? 0 : summary.config.sweep_values.front();
    int max_x = min_x;
    for (int v : summary.config.sweep_values) {
        min_x = std::min(min_x, v);
        max_x = std::max(max_x, v);
    }
    for (const SchedulerPoint& p : summary.points)
        if (p.trials > 0) max_mean = std::max(max_mean, p.mean_T);

    auto sx = [&](double v) {
        double span = max_x > min_x ? double(max_x - min_x) : 1.0;
        return left + (v - min_x) / span * plot_w;
    };
    auto sy = [&](double v) { return top + plot_h - v / max_mean * plot_h; };

    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">mean completion time vs "
        << (summary.config.sweep == SweepVariable::n_users ? "users" : "packets") << "</text>\n";
    // axes
    out << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
        << top + plot_h << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
        << "\" stroke=\"black\"/>\n";
    for (int v : summary.config.sweep_values) {
        out << "<text x=\"" << sx(v) << "\" y=\"" << top + plot_h + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << v << "</text>\n";
    }
    for (int tick = 0; tick <= 4; ++tick) {
        double v = max_mean * tick / 4.0;
        out << "<text x=\"" << left - 8 << "\" y=\"" << sy(v) + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << format_double(v).substr(0, 5)
            << "</text>\n";
    }

    for (std::size_t sched = 0; sched < summary.config.schedulers.size(); ++sched) {
        const std::string& id = summary.config.schedulers[sched];
        const char* color = kPalette[sched % (sizeof kPalette / sizeof kPalette[0])];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (const SchedulerPoint& p : summary.points)
            if (p.scheduler == id && p.trials > 0) out << sx(p.sweep_value) << "," << sy(p.mean_T) << " ";
        out << "\"/>\n";
        int ly = top + 16 * int(sched);
        out << "<line x1=\"" << left + plot_w - 150 << "\" y1=\"" << ly << "\" x2=\"" << left + plot_w - 130
            << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << left + plot_w - 124 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << id << "</text>\n";
    }
    out << "</svg>\n";
}

void write_report_files(const ExperimentSummary& summary, const std::string& prefix) {
    auto open = [&](const std::string& path) {
        std::ofstream out(path);
        if (!out) throw io_error("cannot write report file: " + path);
        return out;
    };
    {
        std::ofstream out = open(prefix + ".csv");
        write_csv(summary, out);
        if (!out) throw io_error("write failed: " + prefix + ".csv");
    }
    {
        std::ofstream out = open(prefix + ".json");
        write_json(summary, out);
        if (!out) throw io_error("write failed: " + prefix + ".json");
    }
    {
        std::ofstream out = open(prefix + ".svg");
        write_svg(summary, out);
        if (!out) throw io_error("write failed: " + prefix + ".svg");
    }
}

}  // namespace idnc
