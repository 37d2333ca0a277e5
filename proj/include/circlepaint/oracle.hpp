#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circlepaint/core.hpp"
#include "circlepaint/graph.hpp"

// Ground truth the solver is measured against: an exact chromatic number by
// search, proper-colouring verifiers that share no code with the pillar
// machinery, and the random instance generator for the property suites.

namespace circlepaint {

// Exact chromatic number by branch and bound. Vertices are picked by
// saturation (distinct neighbour colours), ties by higher degree then lower
// index; the greedy run in that order seeds the upper bound, and
// clique_lower_bound (pass ω when the graph came from an interval system)
// lets the search stop the moment the two meet. Throws Exhausted when more
// than node_budget branch nodes get expanded.
int exact_chi(const Graph& g, long long node_budget = 10'000'000,
              int clique_lower_bound = 1);

// True iff every vertex has a colour >= 1 and no edge joins equal colours.
bool verify_colouring(const Graph& g, const std::vector<int>& colours);

struct ColouringCheck {
    bool proper = true;
    bool complete = true;
    std::vector<std::string> violations;

    bool ok() const { return proper && complete; }
};

// Same verdict as the graph overload, without building the graph: two
// intervals of one colour must never overlap, which makes each colour class
// laminar — so a single rank scan with one stack per colour settles it.
// Runs in O(m) and is safe at the largest sizes the solver handles.
ColouringCheck verify_colouring(const IntervalSystem& sys,
                                const std::vector<int>& colours);

// Uniformly random perfect matching of the ranks [1, 2m]: Fisher-Yates
// shuffle of 1..2m driven by SplitMix64(seed), consecutive pairs become
// intervals (smaller rank left), ids "1".."m". Bit-identical across runs
// and platforms.
IntervalSystem random_system(int m, std::uint64_t seed);

}  // namespace circlepaint
