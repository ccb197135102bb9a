#include "idnc/topology.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "idnc/errors.hpp"
#include "idnc/rng.hpp"

namespace idnc {

ConnectionMatrix::ConnectionMatrix(int n_users) : n_(n_users) {
    if (n_users <= 0) throw std::invalid_argument("topology: need at least one user");
    rows_.assign(std::size_t(n_), DynamicBitset(n_));
}

void ConnectionMatrix::connect(int j, int k) {
    if (j < 0 || k < 0 || j >= n_ || k >= n_) throw std::invalid_argument("topology: user out of range");
    if (j == k) throw std::invalid_argument("topology: self connection");
    rows_[j].set(k);
    rows_[k].set(j);
}

std::vector<int> ConnectionMatrix::singleton_users() const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (rows_[u].none()) out.push_back(u);
    return out;
}

ConnectionMatrix generate_topology(const TopologySpec& spec, std::uint64_t seed) {
    ConnectionMatrix c(spec.n_users);
    if (spec.kind == TopologySpec::Kind::fully_connected) {
        for (int j = 0; j < spec.n_users; ++j)
            for (int k = j + 1; k < spec.n_users; ++k) c.connect(j, k);
        return c;
    }
    Rng rng(seed);
    for (int j = 0; j < spec.n_users; ++j)
        for (int k = j + 1; k < spec.n_users; ++k)
            if (rng.next_bernoulli(spec.edge_probability)) c.connect(j, k);
    return c;
}

namespace {

// Strips comments/blank lines; returns false at EOF.
bool next_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) return true;
    }
    return false;
}

[[noreturn]] void bad_line(const std::string& what, int line_no) {
    throw io_error("topology fixture: " + what + " (line " + std::to_string(line_no) + ")");
}

}  // namespace

ConnectionMatrix load_topology(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!next_line(in, line, line_no)) throw io_error("topology fixture: empty input");

    std::istringstream head(line);
    std::string key;
    int n = 0;
    if (!(head >> key >> n) || key != "users" || n <= 0) bad_line("expected 'users N'", line_no);

    ConnectionMatrix c(n);
    while (next_line(in, line, line_no)) {
        std::istringstream row(line);
        int j = 0, k = 0;
        if (!(row >> key >> j >> k) || key != "edge") bad_line("expected 'edge j k'", line_no);
        if (j < 1 || k < 1 || j > n || k > n) bad_line("edge endpoint out of range", line_no);
        if (j == k) bad_line("self edge", line_no);
        c.connect(j - 1, k - 1);
    }
    return c;
}

ConnectionMatrix load_topology_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open topology file: " + path);
    return load_topology(in);
}

void save_topology(const ConnectionMatrix& c, std::ostream& out) {
    out << "users " << c.n_users() << "\n";
    for (int j = 0; j < c.n_users(); ++j)
        for (int k = j + 1; k < c.n_users(); ++k)
            if (c.connected(j, k)) out << "edge " << j + 1 << " " << k + 1 << "\n";
}

void save_topology_file(const ConnectionMatrix& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write topology file: " + path);
    save_topology(c, out);
    if (!out) throw io_error("write failed: " + path);
}

}  // namespace idnc
