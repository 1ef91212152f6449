#include "cds/star.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "cds/errors.hpp"

namespace cds {

std::vector<int> Star::nodes() const {
    std::vector<int> out;
    out.reserve(feet.size() + 1);
    out.push_back(center);
    out.insert(out.end(), feet.begin(), feet.end());
    return out;
}

int StarScore::compare(const StarScore& a, const StarScore& b) {
    const Rational lhs = Rational(a.gain) * b.cost;
    const Rational rhs = Rational(b.gain) * a.cost;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

namespace {

bool canonical_before(const WeightedGraph& g, int a, int b) {
    if (g.cost(a) != g.cost(b)) return g.cost(a) < g.cost(b);
    return a < b;
}

void check_star_shape(const SolverState& st, int center, const std::vector<int>& feet,
                      bool as_prefix) {
    const auto& g = st.graph();
    auto fail = [&](const std::string& msg) -> void {
        if (as_prefix) throw InvalidPrefix("prefix: " + msg);
        throw InvalidStar("star: " + msg);
    };
    if (center < 0 || center >= g.node_count()) fail("center out of range");
    if (st.in_c(center)) fail("center is in C");
    std::unordered_set<int> seen;
    for (size_t i = 0; i < feet.size(); ++i) {
        int v = feet[i];
        if (v < 0 || v >= g.node_count()) fail("foot out of range");
        if (v == center) fail("center repeated as foot");
        if (st.in_c(v)) fail("foot " + std::to_string(v) + " is in C");
        if (!g.has_edge(center, v)) fail("foot " + std::to_string(v) + " not adjacent to center");
        if (!seen.insert(v).second) fail("duplicate foot " + std::to_string(v));
        if (i > 0 && canonical_before(g, v, feet[i - 1])) fail("feet not in canonical order");
    }
}

// Overlay describing C u {center} u feet without touching shared state.
// extra[w] counts star nodes adjacent to w; merged holds the roots of the
// G[C] components absorbed into the star's component.
struct StarOverlay {
    const SolverState& st;
    std::vector<int> extra;
    std::vector<char> in_star;
    std::unordered_set<int> merged;

    explicit StarOverlay(const SolverState& s)
        : st(s), extra(s.graph().node_count(), 0), in_star(s.graph().node_count(), 0) {}

    void add(int v) {
        in_star[v] = 1;
        for (int w : st.graph().neighbors(v)) ++extra[w];
        for (int r : st.component_neighbors(v)) merged.insert(r);
    }

    // -Delta_v q over the overlaid set; v must have q_C(v) = 0.
    long long demand_marginal(int v) const {
        const int m = st.fold();
        long long count = 0;
        for (int w : st.graph().neighbors(v)) {
            if (st.in_c(w) || in_star[w]) continue;
            if (m - st.demands().cover(w) - extra[w] > 0) ++count;
        }
        return count;
    }

    // -Delta_v p over the overlaid set for v adjacent to the star: the
    // star's own component contributes one neighbor, every unmerged G[C]
    // component adjacent to v adds one more.
    long long component_marginal(int v) const {
        long long unmerged = 0;
        for (int r : st.component_neighbors(v))
            if (!merged.count(r)) ++unmerged;
        return unmerged;
    }

    int b_of(int v) const {
        if (st.demand(v) > 0) return 0;
        long long df = demand_marginal(v) + component_marginal(v);
        return static_cast<int>(std::min<long long>(1, df));
    }
};

} // namespace

void validate_star(const SolverState& st, const Star& s) {
    check_star_shape(st, s.center, s.feet, false);
}

int b_value(const SolverState& st, const Star& prefix, int candidate) {
    check_star_shape(st, prefix.center, prefix.feet, true);
    const auto& g = st.graph();
    if (candidate < 0 || candidate >= g.node_count() || st.in_c(candidate) ||
        !g.has_edge(prefix.center, candidate))
        throw InvalidPrefix("candidate must be a neighbor of the center outside C");
    for (int v : prefix.feet)
        if (v == candidate) throw InvalidPrefix("candidate already in prefix");

    if (st.demand(candidate) > 0) return 0;
    StarOverlay overlay(st);
    overlay.add(prefix.center);
    for (int v : prefix.feet) overlay.add(v);
    return overlay.b_of(candidate);
}

long long star_gain(const SolverState& st, const Star& s) {
    validate_star(st, s);
    long long gain = st.delta_f(s.center);
    StarOverlay overlay(st);
    overlay.add(s.center);
    for (int v : s.feet) {
        gain += overlay.b_of(v);
        overlay.add(v);
    }
    return gain;
}

namespace {

struct Candidate {
    long long gain = 0;
    Rational cost;
    int center = -1;
    std::vector<int> feet; // canonical order

    bool trivial() const { return feet.empty(); }
};

// Returns true when a should replace b as the running best.
bool better_candidate(const Candidate& a, const Candidate& b) {
    int cmp = StarScore::compare({a.gain, a.cost}, {b.gain, b.cost});
    if (cmp != 0) return cmp > 0;
    if (a.trivial() != b.trivial()) return a.trivial();
    if (a.center != b.center) return a.center < b.center;
    std::vector<int> fa = a.feet, fb = b.feet;
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    return fa < fb;
}

} // namespace

std::optional<Star> most_cost_effective_star(const SolverState& st) {
    const auto& g = st.graph();
    const int n = g.node_count();
    const int m = st.fold();

    std::optional<Candidate> best;
    auto consider = [&](Candidate cand) {
        if (!best || better_candidate(cand, *best)) best = std::move(cand);
    };

    // Scratch overlay arrays shared across centers, rolled back after each.
    std::vector<int> extra(n, 0);
    std::vector<char> in_star(n, 0);
    std::vector<int> extra_log;
    std::vector<int> star_log;

    struct Foot {
        Rational cost;
        int id;
        int root;
    };
    std::vector<Foot> pool;

    for (int u = 0; u < n; ++u) {
        if (st.in_c(u)) continue;

        const long long trivial_gain = st.delta_f(u);
        consider({trivial_gain, g.cost(u), u, {}});

        if (st.demand(u) != 0) continue; // nontrivial stars need a settled center

        // Feet must be settled neighbors adjacent to exactly one component
        // of G[C], and that component must not already touch the center.
        std::vector<int> center_roots = st.component_neighbors(u);
        pool.clear();
        for (int v : g.neighbors(u)) {
            if (st.in_c(v) || st.demand(v) != 0) continue;
            std::vector<int> roots = st.component_neighbors(v);
            if (roots.size() != 1) continue;
            if (std::binary_search(center_roots.begin(), center_roots.end(), roots[0])) continue;
            pool.push_back({g.cost(v), v, roots[0]});
        }
        if (pool.empty()) continue;
        std::sort(pool.begin(), pool.end(), [](const Foot& a, const Foot& b) {
            if (a.cost != b.cost) return a.cost < b.cost;
            return a.id < b.id;
        });

        // Grow the star through the pool in cost order.
        in_star[u] = 1;
        star_log.push_back(u);
        for (int w : g.neighbors(u)) {
            ++extra[w];
            extra_log.push_back(w);
        }
        std::unordered_set<int> merged(center_roots.begin(), center_roots.end());

        long long cur_gain = trivial_gain;
        Rational cur_cost = g.cost(u);
        std::vector<int> feet;
        for (const Foot& cand : pool) {
            long long qm = 0;
            for (int w : g.neighbors(cand.id)) {
                if (st.in_c(w) || in_star[w]) continue;
                if (m - st.demands().cover(w) - extra[w] > 0) ++qm;
            }
            const long long pm = merged.count(cand.root) ? 0 : 1;
            const long long b = std::min<long long>(1, qm + pm);
            if (b != 1) continue;
            // 1/c(v) >= cur_gain/cur_cost, cross-multiplied
            if (cur_cost < Rational(cur_gain) * cand.cost) continue;
            feet.push_back(cand.id);
            in_star[cand.id] = 1;
            star_log.push_back(cand.id);
            for (int w : g.neighbors(cand.id)) {
                ++extra[w];
                extra_log.push_back(w);
            }
            merged.insert(cand.root);
            cur_gain += 1;
            cur_cost += cand.cost;
        }
        if (!feet.empty()) consider({cur_gain, cur_cost, u, feet});

        for (int w : extra_log) --extra[w];
        extra_log.clear();
        for (int v : star_log) in_star[v] = 0;
        star_log.clear();
    }

    if (!best || best->gain == 0) return std::nullopt;
    Star out;
    out.center = best->center;
    out.feet = std::move(best->feet);
    out.gain = best->gain;
    out.cost = std::move(best->cost);
    return out;
}

namespace {

long long residual_of(const WeightedGraph& g, int m, const NodeSet& c, int v) {
    if (c.contains(v)) return 0;
    int k = 0;
    for (int w : g.neighbors(v))
        if (c.contains(w)) ++k;
    return std::max(0, m - k);
}

} // namespace

StarScore enumerate_stars_oracle(const WeightedGraph& g, int m, const NodeSet& c,
                                 int max_center_degree) {
    if (g.max_degree() > max_center_degree)
        throw DegreeTooLarge("degree " + std::to_string(g.max_degree()) + " exceeds oracle cap " +
                             std::to_string(max_center_degree));

    StarScore best{0, 1};
    const long long f_c = eval_potential(g, m, c).f;

    for (int u = 0; u < g.node_count(); ++u) {
        if (c.contains(u)) continue;
        std::vector<int> cands;
        for (int v : g.neighbors(u))
            if (!c.contains(v)) cands.push_back(v);
        std::sort(cands.begin(), cands.end(), [&](int a, int b) {
            if (g.cost(a) != g.cost(b)) return g.cost(a) < g.cost(b);
            return a < b;
        });

        NodeSet with_center = c;
        with_center.insert(u);
        const long long center_marginal = f_c - eval_potential(g, m, with_center).f;

        const unsigned total = 1u << cands.size();
        for (unsigned mask = 0; mask < total; ++mask) {
            long long gain = center_marginal;
            Rational cost = g.cost(u);
            NodeSet grown = with_center;
            long long f_grown = f_c - center_marginal;
            for (size_t i = 0; i < cands.size(); ++i) {
                if (!(mask & (1u << i))) continue;
                const int v = cands[i];
                NodeSet next = grown;
                next.insert(v);
                const long long f_next = eval_potential(g, m, next).f;
                if (residual_of(g, m, c, v) == 0)
                    gain += std::min<long long>(1, f_grown - f_next);
                grown = next;
                f_grown = f_next;
                cost += g.cost(v);
            }
            StarScore score{gain, cost};
            if (StarScore::compare(score, best) > 0) best = score;
        }
    }
    return best;
}

} // namespace cds
