#pragma once

#include <optional>
#include <vector>

#include "cds/potential.hpp"

namespace cds {

// A center with a set of neighboring feet. Feet are kept in canonical
// order: non-decreasing cost, ties broken by node id. A trivial star is a
// bare center.
struct Star {
    int center = -1;
    std::vector<int> feet;
    long long gain = 0;
    Rational cost = 0;

    bool trivial() const { return feet.empty(); }
    std::vector<int> nodes() const;
};

// gain/cost as an exact fraction; compared by cross-multiplication so ties
// are decided exactly.
struct StarScore {
    long long gain = 0;
    Rational cost = 1;

    Rational ratio() const { return Rational(gain) / cost; }
    // -1 if a's ratio is smaller, 0 if equal, 1 if larger.
    static int compare(const StarScore& a, const StarScore& b);
};

// Throws InvalidStar unless center and feet are outside C, feet are
// distinct neighbors of the center and in canonical order.
void validate_star(const SolverState& st, const Star& s);

// b-value of `candidate` as the next foot after `prefix`: 0 when the
// candidate still has residual demand, else min{1, -Delta f} against
// C u {center} u prefix feet. Throws InvalidPrefix.
int b_value(const SolverState& st, const Star& prefix, int candidate);

// Gain of a star: -Delta_center f(C) plus the b-values of its feet taken
// in canonical order. Throws InvalidStar.
long long star_gain(const SolverState& st, const Star& s);

// One most cost-effective star, or nullopt when no star has positive gain.
// Ties prefer a trivial star, then the smallest center id, then the
// lexicographically smallest foot set.
std::optional<Star> most_cost_effective_star(const SolverState& st);

// Exhaustive reference: evaluates the gain formula over every center and
// every subset of its non-C neighbors via from-scratch potential
// evaluations, returning the best score found. Throws DegreeTooLarge when
// any node degree exceeds max_center_degree.
StarScore enumerate_stars_oracle(const WeightedGraph& g, int m, const NodeSet& c,
                                 int max_center_degree = 15);

} // namespace cds
