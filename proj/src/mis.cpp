#include "idnc/mis.hpp"

#include <cstdint>
#include <string>

#include "idnc/errors.hpp"

namespace idnc {

bool is_independent(const Adjacency& g, const DynamicBitset& members) {
    bool ok = true;
    members.for_each([&](int v) {
        if (g.rows[std::size_t(v)].intersects(members)) ok = false;
    });
    return ok;
}

DynamicBitset brute_force_mis(const Adjacency& g) {
    if (g.n > 22)
        throw capacity_error("brute_force_mis: " + std::to_string(g.n) + " vertices exceeds the 22-vertex oracle guard");
    if (g.n == 0) return DynamicBitset(0);

    // Single-word adjacency; indep[mask] by removing the lowest vertex.
    std::vector<std::uint64_t> adj(std::size_t(g.n), 0);
    for (int v = 0; v < g.n; ++v)
        g.rows[std::size_t(v)].for_each([&](int u) { adj[std::size_t(v)] |= std::uint64_t(1) << u; });

    const std::uint64_t top = std::uint64_t(1) << g.n;
    std::vector<std::uint8_t> indep(std::size_t(top), 0);
    indep[0] = 1;
    std::uint64_t best = 0;
    int best_size = 0;
    for (std::uint64_t mask = 1; mask < top; ++mask) {
        int v = __builtin_ctzll(mask);
        std::uint64_t rest = mask & (mask - 1);
        if (indep[rest] && (adj[std::size_t(v)] & rest) == 0) {
            indep[mask] = 1;
            int size = __builtin_popcountll(mask);
            if (size > best_size) {  // ascending scan keeps the smallest mask per size
                best_size = size;
                best = mask;
            }
        }
    }

    DynamicBitset out(g.n);
    for (int v = 0; v < g.n; ++v)
        if ((best >> v) & 1) out.set(v);
    return out;
}

namespace {

// Clique search on the complement with per-depth scratch sets.
class BkSolver {
public:
    explicit BkSolver(const Adjacency& g) : n_(g.n), comp_(std::size_t(g.n), DynamicBitset(g.n)) {
        for (int v = 0; v < n_; ++v) {
            for (int u = 0; u < n_; ++u)
                if (u != v && !g.rows[std::size_t(v)].test(u)) comp_[std::size_t(v)].set(u);
        }
        p_stack_.assign(std::size_t(n_) + 1, DynamicBitset(n_));
        x_stack_.assign(std::size_t(n_) + 1, DynamicBitset(n_));
        cur_ = DynamicBitset(n_);
        best_ = DynamicBitset(n_);
    }

    DynamicBitset solve() {
        if (n_ == 0) return DynamicBitset(0);
        for (int v = 0; v < n_; ++v) p_stack_[0].set(v);
        expand(0, 0);
        return best_;
    }

private:
    void expand(int depth, int cur_size) {
        DynamicBitset& p = p_stack_[std::size_t(depth)];
        DynamicBitset& x = x_stack_[std::size_t(depth)];

        if (p.none() && x.none()) {  // maximal clique in the complement
            if (cur_size > best_size_ || (cur_size == best_size_ && cur_.mask_less(best_))) {
                best_size_ = cur_size;
                best_ = cur_;
            }
            return;
        }
        // Prune only subtrees that cannot reach the current best size;
        // equal-size subtrees must still be explored for the mask tie-break.
        if (cur_size + p.count() < best_size_) return;

        // Tomita pivot: u from P∪X maximizing |P ∩ comp(u)| (ties: lowest u).
        int pivot = -1, pivot_gain = -1;
        auto consider = [&](int u) {
            int gain = p.count_and(comp_[std::size_t(u)]);
            if (gain > pivot_gain) {
                pivot_gain = gain;
                pivot = u;
            }
        };
        p.for_each(consider);
        x.for_each(consider);

        DynamicBitset ext = p;
        ext.and_not(comp_[std::size_t(pivot)]);

        for (int v = ext.find_first(); v != -1; v = ext.find_next(v)) {
            const DynamicBitset& nv = comp_[std::size_t(v)];
            p_stack_[std::size_t(depth) + 1] = p;
            p_stack_[std::size_t(depth) + 1] &= nv;
            x_stack_[std::size_t(depth) + 1] = x;
            x_stack_[std::size_t(depth) + 1] &= nv;
            cur_.set(v);
            expand(depth + 1, cur_size + 1);
            cur_.reset(v);
            p.reset(v);
            x.set(v);
        }
    }

    int n_;
    std::vector<DynamicBitset> comp_;
    std::vector<DynamicBitset> p_stack_, x_stack_;
    DynamicBitset cur_, best_;
    int best_size_ = -1;
};

}  // namespace

DynamicBitset maximum_independent_set(const Adjacency& g, const MisOptions& options) {
    if (g.n > options.vertex_ceiling)
        throw capacity_error("maximum_independent_set: graph has " + std::to_string(g.n) +
                             " vertices, above the configured ceiling of " +
                             std::to_string(options.vertex_ceiling));
    BkSolver solver(g);
    return solver.solve();
}

}  // namespace idnc
