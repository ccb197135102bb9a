#include "idnc/session.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "idnc/errors.hpp"
#include "idnc/rng.hpp"

namespace idnc {

SessionState::SessionState(int n_packets, int n_users) : m_(n_packets), n_(n_users) {
    if (n_packets <= 0 || n_users <= 0)
        throw std::invalid_argument("session: need at least one packet and one user");
    has_.assign(std::size_t(n_), DynamicBitset(m_));
    wants_.assign(std::size_t(n_), DynamicBitset(m_));
    for (auto& w : wants_)
        for (int p = 0; p < m_; ++p) w.set(p);
}

SessionState SessionState::from_has(int n_packets, const std::vector<DynamicBitset>& has) {
    SessionState s(n_packets, int(has.size()));
    for (int u = 0; u < s.n_; ++u) {
        if (has[std::size_t(u)].size() != n_packets)
            throw std::invalid_argument("session: has bitset size mismatch");
        s.has_[std::size_t(u)] = has[std::size_t(u)];
        s.wants_[std::size_t(u)].and_not(has[std::size_t(u)]);
    }
    return s;
}

bool SessionState::is_complete() const {
    for (const auto& w : wants_)
        if (w.any()) return false;
    return true;
}

int SessionState::total_wants() const {
    int t = 0;
    for (const auto& w : wants_) t += w.count();
    return t;
}

int SessionState::demand_count(int packet) const {
    int d = 0;
    for (const auto& w : wants_) d += w.test(packet);
    return d;
}

DynamicBitset SessionState::s_bs() const {
    DynamicBitset acc = wants_[0];
    for (int u = 1; u < n_; ++u) acc &= wants_[std::size_t(u)];
    return acc;
}

DynamicBitset SessionState::union_wants() const {
    DynamicBitset acc(m_);
    for (const auto& w : wants_) acc |= w;
    return acc;
}

DynamicBitset SessionState::singleton_wants(const ConnectionMatrix& c) const {
    if (c.n_users() != n_) throw std::invalid_argument("session: topology size mismatch");
    DynamicBitset acc(m_);
    for (int u = 0; u < n_; ++u)
        if (c.is_singleton(u)) acc |= wants_[std::size_t(u)];
    return acc;
}

SessionState SessionState::with_recovery(int user, int packet) const {
    if (user < 0 || user >= n_ || packet < 0 || packet >= m_)
        throw std::invalid_argument("session: recovery out of range");
    if (!wants_[std::size_t(user)].test(packet))
        throw std::invalid_argument("session: recovery of a held packet");
    SessionState next = *this;
    next.has_[std::size_t(user)].set(packet);
    next.wants_[std::size_t(user)].reset(packet);
    return next;
}

SessionState generate_feedback(int n_packets, int n_users, const ErasureSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    auto has = std::vector<DynamicBitset>(std::size_t(n_users), DynamicBitset(n_packets));
    for (int p = 0; p < n_packets; ++p)
        for (int u = 0; u < n_users; ++u)
            if (!rng.next_bernoulli(spec.erasure_probability)) has[std::size_t(u)].set(p);
    return SessionState::from_has(n_packets, has);
}

namespace {

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
    throw io_error("session fixture: " + what + " (line " + std::to_string(line_no) + ")");
}

int parse_header(std::istream& in, const std::string& want_key, int& line_no) {
    std::string line;
    if (!next_line(in, line, line_no)) bad_line("missing '" + want_key + "' header", line_no);
    std::istringstream head(line);
    std::string key;
    int value = 0;
    if (!(head >> key >> value) || key != want_key || value <= 0)
        bad_line("expected '" + want_key + " <count>'", line_no);
    return value;
}

}  // namespace

SessionState load_session(std::istream& in) {
    int line_no = 0;
    int m = parse_header(in, "packets", line_no);
    int n = parse_header(in, "users", line_no);

    auto has = std::vector<DynamicBitset>(std::size_t(n), DynamicBitset(m));
    std::vector<bool> seen(std::size_t(n), false);
    std::string line;
    while (next_line(in, line, line_no)) {
        std::istringstream row(line);
        std::string key;
        row >> key;
        if (key != "has") bad_line("expected 'has n: ...'", line_no);
        std::string user_tok;
        if (!(row >> user_tok)) bad_line("missing user index", line_no);
        if (!user_tok.empty() && user_tok.back() == ':') user_tok.pop_back();
        int user = 0;
        try {
            user = std::stoi(user_tok);
        } catch (const std::exception&) {
            bad_line("bad user index '" + user_tok + "'", line_no);
        }
        if (user < 1 || user > n) bad_line("user index out of range", line_no);
        if (seen[std::size_t(user - 1)]) bad_line("duplicate 'has' line for user " + std::to_string(user), line_no);
        seen[std::size_t(user - 1)] = true;
        int packet = 0;
        while (row >> packet) {
            if (packet < 1 || packet > m) bad_line("packet index out of range", line_no);
            has[std::size_t(user - 1)].set(packet - 1);
        }
        if (!row.eof()) bad_line("bad packet list", line_no);
    }
    for (int u = 0; u < n; ++u)
        if (!seen[std::size_t(u)]) throw io_error("session fixture: missing 'has' line for user " + std::to_string(u + 1));
    return SessionState::from_has(m, has);
}

SessionState load_session_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open session file: " + path);
    return load_session(in);
}

void save_session(const SessionState& s, std::ostream& out) {
    out << "packets " << s.n_packets() << "\n";
    out << "users " << s.n_users() << "\n";
    for (int u = 0; u < s.n_users(); ++u) {
        out << "has " << u + 1 << ":";
        s.has_bits(u).for_each([&](int p) { out << " " << p + 1; });
        out << "\n";
    }
}

void save_session_file(const SessionState& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write session file: " + path);
    save_session(s, out);
    if (!out) throw io_error("write failed: " + path);
}

}  // namespace idnc
