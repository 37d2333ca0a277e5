#pragma once

#include <vector>

#include "circlepaint/core.hpp"

// Dominance structure of intervals around a common point.
//
// For intervals that all contain one gap p, define I < J when left(I) <
// left(J) and right(I) < right(J). Because every member straddles p, two
// members are comparable exactly when they overlap, so chains in this order
// are cliques of the overlap graph and the maximum height equals the largest
// clique through p. The clique number of the whole system is the maximum of
// these heights over all gaps, and only gaps immediately after a left
// endpoint can attain it.

namespace circlepaint {

struct HeightEntry {
    int interval;  // index into the system
    int height;    // longest chain ending here, >= 1
};

// Heights of all intervals containing gap p, listed in left-rank order.
std::vector<HeightEntry> heights_at_point(const IntervalSystem& sys, GapPosition p);

// Maximum height at p; 0 when no interval contains p.
int omega_at_point(const IntervalSystem& sys, GapPosition p);

// Heights restricted to the given members (all must contain p). Returned in
// the same order as `members`.
std::vector<int> heights_for_members(const IntervalSystem& sys,
                                     const std::vector<int>& members, GapPosition p);

struct CliqueResult {
    int omega = 0;
    std::vector<int> witness;  // interval indices, pairwise overlapping
};

// Clique number of the overlap graph with a witness clique. Deterministic:
// the first gap (ascending) attaining the maximum is used; chain ends and
// predecessor links are tie-broken towards the smallest right rank.
CliqueResult omega(const IntervalSystem& sys);

// ------------------------------------------------------- grids and chains

struct GridPoint {
    int x = 0;
    int y = 0;
};

struct ChainResult {
    int length = 0;
    std::vector<GridPoint> chain;  // strictly increasing in both coordinates
};

// Longest chain under strict dominance ((x,y) < (x',y') iff x<x' and y<y').
ChainResult longest_chain_2d(const std::vector<GridPoint>& points);

/// Largest antichain of the full [1..a] x [1..b] grid: a + b - 1. With
// exhaustive=true the value is recomputed by branch-and-bound search over
// subsets (intended for a, b <= 6).
int grid_max_antichain(int a, int b, bool exhaustive = false);

// For S inside [1..a] x [1..b] whose longest chain is at most n (1 <= n <=
// min(a,b)), checks the size cap |S| <= n(a+b-n). Throws
// PreconditionViolated when S leaves the grid, contains duplicates, or has a
// chain longer than n.
bool check_chain_bounded_set_size(const std::vector<GridPoint>& s, int a, int b, int n);

}  // namespace circlepaint
