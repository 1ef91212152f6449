#pragma once

#include <vector>

#include "cds/graph.hpp"

namespace cds {

// f(C) = p(C) + q(C). p counts components of G[C] (0 for empty C), q sums
// residual domination demand over nodes outside C. f(C) = 1 certifies that
// C is a (1,m)CDS. All values are integers.
struct PotentialValue {
    long long p = 0;
    long long q = 0;
    long long f = 0;
    bool operator==(const PotentialValue&) const = default;
};

// Per-node residual demand q_C(u) = max{0, m - |N_C(u)|} for u outside C,
// 0 inside, maintained incrementally as nodes are committed.
class DemandTable {
public:
    DemandTable(const WeightedGraph& g, int m);

    int fold() const { return m_; }
    bool in_c(int u) const { return in_c_[u]; }
    int cover(int u) const { return cover_[u]; } // |N_C(u)|
    long long demand(int u) const;               // q_C(u)
    long long total() const { return total_; }    // q(C)

    // Account for u joining C: zero its own demand, decrement neighbors'.
    void commit(const WeightedGraph& g, int u);

private:
    int m_;
    std::vector<int> cover_;
    std::vector<bool> in_c_;
    long long total_;
};

// From-scratch evaluation of f(C) = p(C) + q(C); the reference route used
// by tests and by set marginals.
PotentialValue eval_potential(const WeightedGraph& g, int m, const NodeSet& c);

// -Delta_u q(C) = q_C(u) + |{v in N(u) : q_C(v) > 0}|. Throws NodeInC.
long long delta_q(const WeightedGraph& g, int m, const NodeSet& c, int u);

// -Delta_u p(C) = |NC_C(u)| - 1, computed from scratch. Throws NodeInC.
long long delta_p(const WeightedGraph& g, int m, const NodeSet& c, int u);

// -Delta_u f(C) = -Delta_u q(C) - Delta_u p(C); always >= 0. Throws NodeInC.
long long delta_f(const WeightedGraph& g, int m, const NodeSet& c, int u);

// -Delta_S f(C) = f(C) - f(C u S) via two from-scratch evaluations.
// Throws Overlap when S intersects C.
long long delta_f_set(const WeightedGraph& g, int m, const NodeSet& c, const NodeSet& s);

// The growing solver state: selected set C, incremental components of G[C]
// and the demand table. Single writer; candidate scoring never mutates it.
class SolverState {
public:
    SolverState(const WeightedGraph& g, int m);

    const WeightedGraph& graph() const { return *g_; }
    int fold() const { return demands_.fold(); }
    const NodeSet& selected() const { return c_; }
    const ComponentIndex& components() const { return comps_; }
    const DemandTable& demands() const { return demands_; }

    bool in_c(int u) const { return c_.contains(u); }
    long long demand(int u) const { return demands_.demand(u); }

    PotentialValue potential() const;

    long long delta_q(int u) const;
    long long delta_p(int u) const;
    long long delta_f(int u) const;
    std::vector<int> component_neighbors(int u) const;

    // Commits u to C, updating components and demands. Throws NodeInC.
    void commit(int u);

private:
    const WeightedGraph* g_;
    NodeSet c_;
    ComponentIndex comps_;
    DemandTable demands_;
};

} // namespace cds
