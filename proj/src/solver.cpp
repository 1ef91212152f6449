#include "cds/solver.hpp"

#include <chrono>
#include <string>

#include "cds/errors.hpp"
#include "cds/verify.hpp"

namespace cds {

SolveResult greedy_solve(const WeightedGraph& g, int m) {
    if (m < 1) throw NonPositive("m must be at least 1");
    const int n = g.node_count();

    SolverState state(g, m);
    SolveTrace trace;
    trace.chosen = NodeSet(n);
    const long long max_iters = static_cast<long long>(n) * m;

    using clock = std::chrono::steady_clock;
    while (true) {
        if (static_cast<long long>(trace.iterations.size()) > max_iters)
            throw InternalError("greedy exceeded n*m iterations");

        const auto search_start = clock::now();
        std::optional<Star> star = most_cost_effective_star(state);
        trace.star_search_us +=
            std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - search_start)
                .count();
        if (!star) break;
        if (star->gain <= 0) throw InternalError("selected star has non-positive gain");

        SolveTrace::Iteration it;
        it.f_before = state.potential().f;
        for (int v : star->nodes()) {
            state.commit(v);
            trace.chosen.insert(v);
        }
        it.f_after = state.potential().f;
        if (it.f_before - it.f_after != star->gain)
            throw InternalError("potential drop " + std::to_string(it.f_before - it.f_after) +
                                " does not match star gain " + std::to_string(star->gain));
        it.gain = star->gain;
        it.cost = star->cost;
        it.weight = star->cost / star->gain;
        it.star = std::move(*star);
        trace.iterations.push_back(std::move(it));
    }

    if (trace.chosen.empty()) {
        // Only reachable for n = 1, m = 1: the lone node has zero marginal
        // but the empty set dominates nothing.
        if (n != 1) throw InternalError("empty output on a multi-node graph");
        state.commit(0);
        trace.chosen.insert(0);
    }
    if (state.potential().f != 1)
        throw InternalError("final potential is " + std::to_string(state.potential().f));

    SolveResult result;
    result.cost = g.total_cost(trace.chosen.members());
    trace.total_cost = result.cost;
    result.chosen = trace.chosen;
    result.trace = std::move(trace);
    return result;
}

BoundedSolveResult solve_with_bound(const WeightedGraph& g, int m) {
    BoundedSolveResult out;
    out.solve = greedy_solve(g, m);
    out.bound_coefficient = bound_coefficient(g.max_degree(), m);
    return out;
}

} // namespace cds
