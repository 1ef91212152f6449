#pragma once

#include <cstdint>

#include "cds/graph.hpp"

namespace cds {

struct OracleResult {
    NodeSet optimal;
    Rational cost = 0;
    std::uint64_t subsets_examined = 0;
};

// True iff C is a (1,m)CDS: nonempty, every outside node has at least m
// neighbors in C, and G[C] is connected. Equivalent to f(C) = 1.
bool is_feasible(const WeightedGraph& g, int m, const NodeSet& c);

// Exhaustive minimum-cost (1,m)CDS with cost-based pruning. Among equal
// cost optima returns the lexicographically smallest membership. Throws
// TooLarge above node_limit.
OracleResult exact_min_cds(const WeightedGraph& g, int m, int node_limit = 20);

// Plain scan over all 2^n subsets, no pruning; reference for the pruned
// search.
OracleResult exact_min_cds_unpruned(const WeightedGraph& g, int m, int node_limit = 20);

} // namespace cds
