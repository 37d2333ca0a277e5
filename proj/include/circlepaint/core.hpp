#pragma once

#include <memory>
#include <string>
#include <vector>

#include "circlepaint/graph.hpp"

// Interval systems with rank-compressed endpoints.
//
// A system holds m open intervals whose 2m endpoints are pairwise distinct.
// Endpoints are stored as ranks: the raw values are replaced by their
// positions 1..2m in sorted order, which preserves every overlap relation.
//
// Positions *between* endpoints are addressed by gaps. Gap g (0 <= g <= 2m)
// is the space strictly between rank g and rank g+1; gap 0 lies before every
// endpoint and gap 2m after every endpoint. Two conventions follow from the
// geometry and are used everywhere:
//   * interval (l, r) contains gap g        iff  l <= g <= r - 1
//   * endpoint rank e lies between gaps     iff  lo < e <= hi
//     lo < hi (i.e. inside the open stretch from gap lo to gap hi)

namespace circlepaint {

using Rank = int;         // endpoint rank, 1..2m
using GapPosition = int;  // gap index, 0..2m

struct Interval {
    std::string id;
    Rank left = 0;
    Rank right = 0;

    bool contains_gap(GapPosition g) const { return left <= g && g <= right - 1; }
};

// Two open intervals overlap when each contains exactly one endpoint of the
// other: l_a < l_b < r_a < r_b (or the mirror image). Nesting and disjoint
// placement both count as non-overlapping.
bool overlaps(const Interval& a, const Interval& b);

// Raw input before rank compression. left/right may be any real values.
struct RawInterval {
    std::string id;
    double left = 0.0;
    double right = 0.0;
};

class IntervalSystem {
public:
    IntervalSystem() = default;

    // Takes intervals whose endpoints already are ranks and validates that
    // they use each of 1..2m exactly once, left < right, and ids are unique.
    explicit IntervalSystem(std::vector<Interval> intervals);

    int size() const { return static_cast<int>(intervals_.size()); }
    int max_rank() const { return 2 * size(); }
    const Interval& operator[](int idx) const { return intervals_[idx]; }
    const std::vector<Interval>& intervals() const { return intervals_; }

    // Which interval has an endpoint at rank e, and which endpoint it is.
    int owner(Rank e) const { return owner_[e]; }
    bool is_left_end(Rank e) const { return intervals_[owner_[e]].left == e; }

    int index_of(const std::string& id) const;  // -1 if unknown

private:
    std::vector<Interval> intervals_;
    std::vector<int> owner_;  // rank (1..2m) -> interval index
};

// Rank compression: sorts the 4m raw endpoint values and rewrites each
// interval in terms of ranks. Throws DegenerateInterval when left >= right
// and DuplicateEndpoint when two raw values coincide.
IntervalSystem canonicalize(const std::vector<RawInterval>& raw);

// The overlap graph: one vertex per interval (keyed by id), one edge per
// overlapping pair.
Graph overlap_graph(const IntervalSystem& sys);

// --------------------------------------------------------------------------
// Chord diagrams. 2n points sit on a circle in clockwise order
//   p_1, q_1, p_2, q_2, ..., p_n, q_n
// and are indexed 0..2n-1 in that order (p_i -> 2(i-1), q_i -> 2(i-1)+1).
// A chord joins two distinct points and may carry a multiplicity: `mult`
// coinciding copies, which pairwise intersect by convention. Open chords
// sharing exactly one endpoint do NOT intersect.

struct Chord {
    int a = 0;  // point index, 0..2n-1
    int b = 0;
    int mult = 1;
};

struct ChordDiagram {
    int n = 0;
    std::vector<Chord> chords;
};

// "p3" -> 4, "q5" -> 9. Throws InvalidInput on malformed labels or i > n.
int point_index(const std::string& label, int n);
std::string point_label(int index);

// Converts a diagram into an interval system whose overlap graph is
// isomorphic to the chord intersection graph, copy by copy.
//
// Each point is expanded into one slot per incident chord copy. Groups of
// coinciding chords at a point are laid out in descending order of the far
// endpoint's clockwise distance, which keeps chords that share one endpoint
// non-crossing; within a group the t-th copy takes the t-th slot at both of
// its endpoints, which makes coinciding copies pairwise crossing. The circle
// is then cut between q_n and p_1 and read off clockwise; with all endpoints
// distinct the overlap relation does not depend on where the cut lands.
//
// The copy of chord k (0-based position in d.chords) with copy number t gets
// interval id "c<k+1>.<t+1>".
IntervalSystem chords_to_intervals(const ChordDiagram& d);

}  // namespace circlepaint
