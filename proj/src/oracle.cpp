#include "cds/oracle.hpp"

#include <bit>
#include <string>
#include <vector>

#include "cds/errors.hpp"

namespace cds {

bool is_feasible(const WeightedGraph& g, int m, const NodeSet& c) {
    if (c.empty()) return false;
    const int n = g.node_count();
    for (int v = 0; v < n; ++v) {
        if (c.contains(v)) continue;
        int dominators = 0;
        for (int w : g.neighbors(v))
            if (c.contains(w)) ++dominators;
        if (dominators < m) return false;
    }
    // connectivity of G[C]
    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (c.contains(v)) start = v;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{start};
    seen[start] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (c.contains(w) && !seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == c.count();
}

namespace {

// Mask-based feasibility for the exhaustive scans (n <= node_limit <= 32).
struct MaskChecker {
    const WeightedGraph& g;
    int m;
    std::vector<std::uint32_t> adj;

    MaskChecker(const WeightedGraph& graph, int fold) : g(graph), m(fold) {
        adj.assign(g.node_count(), 0);
        for (int v = 0; v < g.node_count(); ++v)
            for (int w : g.neighbors(v)) adj[v] |= 1u << w;
    }

    bool feasible(std::uint32_t c) const {
        if (c == 0) return false;
        const int n = g.node_count();
        for (int v = 0; v < n; ++v) {
            if (c & (1u << v)) continue;
            if (std::popcount(adj[v] & c) < m) return false;
        }
        std::uint32_t frontier = c & (~c + 1); // lowest set bit
        std::uint32_t reached = frontier;
        while (frontier) {
            std::uint32_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= adj[v] & c & ~reached;
            }
            reached |= next;
            frontier = next;
        }
        return reached == c;
    }
};

NodeSet mask_to_set(int n, std::uint32_t mask) {
    NodeSet s(n);
    for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) s.insert(v);
    return s;
}

void check_size(const WeightedGraph& g, int node_limit) {
    if (node_limit < 1 || node_limit > 30)
        throw TooLarge("node_limit " + std::to_string(node_limit) + " out of range");
    if (g.node_count() > node_limit)
        throw TooLarge("instance has " + std::to_string(g.node_count()) +
                       " nodes, oracle limit is " + std::to_string(node_limit));
}

struct DfsSearch {
    const WeightedGraph& g;
    const MaskChecker& checker;
    int n;
    std::uint64_t examined = 0;
    bool have_best = false;
    Rational best_cost;
    std::uint32_t best_mask = 0;

    // Nodes are decided in id order with the include branch first, so
    // candidates appear in lexicographic membership order and the first
    // optimum found is the lexicographically smallest.
    void walk(int next, std::uint32_t mask, const Rational& cost) {
        if (have_best && cost >= best_cost) return; // positive costs: no completion can win
        if (next == n) {
            ++examined;
            if (checker.feasible(mask)) {
                best_cost = cost;
                best_mask = mask;
                have_best = true;
            }
            return;
        }
        walk(next + 1, mask | (1u << next), cost + g.cost(next));
        walk(next + 1, mask, cost);
    }
};

} // namespace

OracleResult exact_min_cds(const WeightedGraph& g, int m, int node_limit) {
    check_size(g, node_limit);
    MaskChecker checker(g, m);
    DfsSearch search{g, checker, g.node_count()};
    search.walk(0, 0, Rational(0));
    if (!search.have_best) throw InternalError("no feasible subset found (V itself is feasible)");
    OracleResult out;
    out.optimal = mask_to_set(g.node_count(), search.best_mask);
    out.cost = search.best_cost;
    out.subsets_examined = search.examined;
    return out;
}

OracleResult exact_min_cds_unpruned(const WeightedGraph& g, int m, int node_limit) {
    check_size(g, node_limit);
    MaskChecker checker(g, m);
    const int n = g.node_count();
    OracleResult out;
    bool have = false;
    NodeSet best_set;
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        ++out.subsets_examined;
        if (!checker.feasible(static_cast<std::uint32_t>(mask))) continue;
        NodeSet cand = mask_to_set(n, static_cast<std::uint32_t>(mask));
        Rational cost = g.total_cost(cand.members());
        if (!have || cost < out.cost ||
            (cost == out.cost && NodeSet::compare_members(cand, best_set) < 0)) {
            have = true;
            out.cost = cost;
            best_set = cand;
        }
    }
    out.optimal = best_set;
    return out;
}

} // namespace cds
