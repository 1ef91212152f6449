#include "cds/potential.hpp"

#include <algorithm>
#include <string>

#include "cds/errors.hpp"

namespace cds {

DemandTable::DemandTable(const WeightedGraph& g, int m)
    : m_(m), cover_(g.node_count(), 0), in_c_(g.node_count(), false),
      total_(static_cast<long long>(g.node_count()) * m) {}

long long DemandTable::demand(int u) const {
    if (in_c_[u]) return 0;
    return std::max(0, m_ - cover_[u]);
}

void DemandTable::commit(const WeightedGraph& g, int u) {
    if (in_c_[u]) throw NodeInC("node " + std::to_string(u) + " already committed");
    total_ -= demand(u);
    in_c_[u] = true;
    for (int w : g.neighbors(u)) {
        if (!in_c_[w] && m_ - cover_[w] > 0) --total_;
        ++cover_[w];
    }
}

namespace {

int cover_count(const WeightedGraph& g, const NodeSet& c, int u) {
    int k = 0;
    for (int w : g.neighbors(u))
        if (c.contains(w)) ++k;
    return k;
}

long long residual(const WeightedGraph& g, int m, const NodeSet& c, int u) {
    if (c.contains(u)) return 0;
    return std::max(0, m - cover_count(g, c, u));
}

// Component count of G[C] by BFS.
long long component_count(const WeightedGraph& g, const NodeSet& c) {
    const int n = g.node_count();
    std::vector<bool> seen(n, false);
    std::vector<int> stack;
    long long comps = 0;
    for (int v = 0; v < n; ++v) {
        if (!c.contains(v) || seen[v]) continue;
        ++comps;
        seen[v] = true;
        stack.push_back(v);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(x))
                if (c.contains(w) && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

void require_outside(const NodeSet& c, int u) {
    if (c.contains(u)) throw NodeInC("node " + std::to_string(u) + " is in C");
}

} // namespace

PotentialValue eval_potential(const WeightedGraph& g, int m, const NodeSet& c) {
    PotentialValue pv;
    pv.p = component_count(g, c);
    pv.q = 0;
    for (int v = 0; v < g.node_count(); ++v) pv.q += residual(g, m, c, v);
    pv.f = pv.p + pv.q;
    return pv;
}

long long delta_q(const WeightedGraph& g, int m, const NodeSet& c, int u) {
    require_outside(c, u);
    long long d = residual(g, m, c, u);
    for (int w : g.neighbors(u))
        if (residual(g, m, c, w) > 0) ++d;
    return d;
}

long long delta_p(const WeightedGraph& g, int m, const NodeSet& c, int u) {
    (void)m;
    require_outside(c, u);
    // |NC_C(u)| - 1 via a scratch component scan restricted to C.
    const int n = g.node_count();
    std::vector<int> comp(n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        if (!c.contains(v) || comp[v] >= 0) continue;
        comp[v] = next;
        stack.push_back(v);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(x))
                if (c.contains(w) && comp[w] < 0) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    std::vector<int> roots;
    for (int w : g.neighbors(u))
        if (c.contains(w)) roots.push_back(comp[w]);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return static_cast<long long>(roots.size()) - 1;
}

long long delta_f(const WeightedGraph& g, int m, const NodeSet& c, int u) {
    return delta_q(g, m, c, u) + delta_p(g, m, c, u);
}

long long delta_f_set(const WeightedGraph& g, int m, const NodeSet& c, const NodeSet& s) {
    for (int v = 0; v < s.universe_size(); ++v)
        if (s.contains(v) && c.contains(v))
            throw Overlap("node " + std::to_string(v) + " is in both C and S");
    NodeSet merged = c;
    for (int v = 0; v < s.universe_size(); ++v)
        if (s.contains(v)) merged.insert(v);
    return eval_potential(g, m, c).f - eval_potential(g, m, merged).f;
}

SolverState::SolverState(const WeightedGraph& g, int m)
    : g_(&g), c_(g.node_count()), comps_(g.node_count()), demands_(g, m) {}

PotentialValue SolverState::potential() const {
    PotentialValue pv;
    pv.p = comps_.component_count();
    pv.q = demands_.total();
    pv.f = pv.p + pv.q;
    return pv;
}

long long SolverState::delta_q(int u) const {
    if (in_c(u)) throw NodeInC("node " + std::to_string(u) + " is in C");
    long long d = demands_.demand(u);
    for (int w : g_->neighbors(u))
        if (demands_.demand(w) > 0) ++d;
    return d;
}

long long SolverState::delta_p(int u) const {
    return static_cast<long long>(comps_.component_neighbors(*g_, u).size()) - 1;
}

long long SolverState::delta_f(int u) const { return delta_q(u) + delta_p(u); }

std::vector<int> SolverState::component_neighbors(int u) const {
    return comps_.component_neighbors(*g_, u);
}

void SolverState::commit(int u) {
    comps_.add_node(*g_, u); // throws NodeInC first
    demands_.commit(*g_, u);
    c_.insert(u);
}

} // namespace cds
