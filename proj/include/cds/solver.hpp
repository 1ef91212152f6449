#pragma once

#include <cstdint>
#include <vector>

#include "cds/star.hpp"

namespace cds {

// Full audit record of one greedy run. f drops by the committed gain every
// iteration; the run ends at f = 1.
struct SolveTrace {
    struct Iteration {
        Star star;
        long long gain = 0;    // r_i
        Rational cost = 0;      // c(S_i)
        Rational weight = 0;    // w_i = c(S_i)/r_i
        long long f_before = 0;
        long long f_after = 0;
    };

    std::vector<Iteration> iterations;
    NodeSet chosen;
    Rational total_cost = 0;
    // star-search wall time, excluded from serialized comparisons
    std::int64_t star_search_us = 0;
};

struct SolveResult {
    NodeSet chosen;
    Rational cost = 0;
    SolveTrace trace;
};

// Greedy loop: commit a most cost-effective star until none has positive
// gain. The output is a (1,m)CDS. The single-node graph is the one case
// where the loop alone stalls short of a dominating set (m = 1 leaves the
// lone node with zero marginal); it returns {v} directly.
SolveResult greedy_solve(const WeightedGraph& g, int m);

struct BoundedSolveResult {
    SolveResult solve;
    Rational bound_coefficient = 0; // 2H(max_degree + m - 1)
};

BoundedSolveResult solve_with_bound(const WeightedGraph& g, int m);

} // namespace cds
