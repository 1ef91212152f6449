#include "cds/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "cds/errors.hpp"

namespace cds {

Rational WeightedGraph::total_cost(const std::vector<int>& nodes) const {
    Rational sum = 0;
    for (int v : nodes) sum += cost_[v];
    return sum;
}

bool WeightedGraph::has_edge(int a, int b) const {
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
}

WeightedGraph build_graph(const std::vector<std::pair<int, int>>& edges,
                          std::vector<Rational> costs) {
    const int n = static_cast<int>(costs.size());
    if (n <= 0) throw ValidationError("graph needs at least one node");
    for (int v = 0; v < n; ++v)
        if (costs[v] <= 0)
            throw NonPositiveCost("cost of node " + std::to_string(v) + " is not positive");

    WeightedGraph g;
    g.adj_.assign(n, {});
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw MalformedEdge("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                ") out of range");
        if (a == b) throw MalformedEdge("self-loop at node " + std::to_string(a));
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw MalformedEdge("duplicate edge at node " + std::to_string(v));
        g.max_degree_ = std::max(g.max_degree_, static_cast<int>(nb.size()));
    }
    g.edge_count_ = static_cast<int>(edges.size());
    g.cost_ = std::move(costs);

    // connectivity
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adj_[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
    }
    if (reached != n) throw DisconnectedGraph("graph is not connected");
    return g;
}

int max_degree(const WeightedGraph& g) { return g.max_degree(); }

std::vector<int> NodeSet::members() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int v = 0; v < universe_size(); ++v)
        if (bits_[v]) out.push_back(v);
    return out;
}

int NodeSet::compare_members(const NodeSet& a, const NodeSet& b) {
    const int n = std::max(a.universe_size(), b.universe_size());
    for (int v = 0; v < n; ++v) {
        bool in_a = v < a.universe_size() && a.contains(v);
        bool in_b = v < b.universe_size() && b.contains(v);
        if (in_a != in_b) return in_a ? -1 : 1;
    }
    return 0;
}

NodeSet set_of(int universe, std::initializer_list<int> nodes) {
    NodeSet s(universe);
    for (int v : nodes) s.insert(v);
    return s;
}

int ComponentIndex::find(int v) const {
    while (parent_[v] != v) {
        parent_[v] = parent_[parent_[v]];
        v = parent_[v];
    }
    return v;
}

void ComponentIndex::add_node(const WeightedGraph& g, int u) {
    if (contains(u)) throw NodeInC("node " + std::to_string(u) + " already in C");
    parent_[u] = u;
    rank_[u] = 0;
    ++count_;
    for (int w : g.neighbors(u)) {
        if (!contains(w)) continue;
        int ru = find(u), rw = find(w);
        if (ru == rw) continue;
        if (rank_[ru] < rank_[rw]) std::swap(ru, rw);
        parent_[rw] = ru;
        if (rank_[ru] == rank_[rw]) ++rank_[ru];
        --count_;
    }
}

std::vector<int> ComponentIndex::component_neighbors(const WeightedGraph& g, int u) const {
    if (contains(u)) throw NodeInC("node " + std::to_string(u) + " is in C");
    std::vector<int> roots;
    for (int w : g.neighbors(u))
        if (contains(w)) roots.push_back(find(w));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace cds
