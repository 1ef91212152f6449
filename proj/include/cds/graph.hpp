#pragma once

#include <utility>
#include <vector>

#include "cds/rational.hpp"

namespace cds {

class NodeSet;

// Undirected simple connected graph with strictly positive rational node
// costs. Immutable after construction, safe to share across threads.
class WeightedGraph {
public:
    int node_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const { return max_degree_; }
    const Rational& cost(int v) const { return cost_[v]; }
    Rational total_cost(const std::vector<int>& nodes) const;
    bool has_edge(int a, int b) const;

    friend WeightedGraph build_graph(const std::vector<std::pair<int, int>>& edges,
                                     std::vector<Rational> costs);

private:
    WeightedGraph() = default;
    std::vector<std::vector<int>> adj_;
    std::vector<Rational> cost_;
    int edge_count_ = 0;
    int max_degree_ = 0;
};

// Node count is the size of `costs`; node ids are dense 0..n-1. Throws
// MalformedEdge (out of range, self-loop, duplicate), NonPositiveCost,
// DisconnectedGraph.
WeightedGraph build_graph(const std::vector<std::pair<int, int>>& edges,
                          std::vector<Rational> costs);

int max_degree(const WeightedGraph& g);

// Subset of V as a bitset over dense node ids.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(int universe) : bits_(universe, false), count_(0) {}

    int universe_size() const { return static_cast<int>(bits_.size()); }
    bool contains(int v) const { return bits_[v]; }
    bool empty() const { return count_ == 0; }
    int count() const { return count_; }

    void insert(int v) {
        if (!bits_[v]) {
            bits_[v] = true;
            ++count_;
        }
    }
    void erase(int v) {
        if (bits_[v]) {
            bits_[v] = false;
            --count_;
        }
    }

    std::vector<int> members() const;

    bool operator==(const NodeSet& o) const { return bits_ == o.bits_; }

    // Orders sets by their sorted member lists: at the first id where
    // membership differs, the set containing that id comes first.
    static int compare_members(const NodeSet& a, const NodeSet& b);

private:
    std::vector<bool> bits_;
    int count_ = 0;
};

NodeSet set_of(int universe, std::initializer_list<int> nodes);

// Grow-only disjoint-set forest over the nodes committed to C. Tracks the
// number of connected components of G[C] incrementally; nodes are never
// removed, matching the solver's monotone growth.
class ComponentIndex {
public:
    explicit ComponentIndex(int n) : parent_(n, -1), rank_(n, 0), count_(0) {}

    bool contains(int v) const { return parent_[v] >= 0; }
    int component_count() const { return count_; }

    // Root id of v's component; requires contains(v).
    int find(int v) const;

    // Adds u to C and merges it with every adjacent component. Throws
    // NodeInC if u was already added.
    void add_node(const WeightedGraph& g, int u);

    // Distinct roots of the components of G[C] adjacent to u, ascending.
    // Throws NodeInC if u is in C.
    std::vector<int> component_neighbors(const WeightedGraph& g, int u) const;

private:
    mutable std::vector<int> parent_; // path halving in find
    std::vector<int> rank_;
    int count_;
};

} // namespace cds
