#pragma once

#include <memory>
#include <string>
#include <vector>

#include "circlepaint/core.hpp"

// Pillar-based colouring of an interval system.
//
// Pillars are gap positions carrying a total order (their insertion order).
// Every interval is assigned to the earliest pillar it contains; intervals
// containing no pillar stay unassigned. Appending a pillar p colours the
// intervals newly assigned to it:
//
//   * the foundation of p is the open stretch between the nearest earlier
//     pillars on each side (circle boundary 0 / 2m where there is none);
//   * the colour set C_p is the smallest block of positive integers that
//     avoids every colour already used on an interval with exactly one
//     endpoint inside the foundation, sized to the largest chain among the
//     intervals assigned to p;
//   * each assigned interval of height h receives the h-th smallest colour
//     of C_p.
//
// Arches are the maximal pillar-free stretches between consecutive pillar
// positions (with 0 and 2m as outer bounds). The degree of a gap interval J
// counts the distinct colours on intervals with an endpoint inside J.

namespace circlepaint {

struct Pillar {
    GapPosition gap = 0;
    int order = 0;  // position in the insertion order
};

// Open stretch between gap lo and gap hi (lo < hi); covers ranks lo+1..hi.
struct GapInterval {
    GapPosition lo = 0;
    GapPosition hi = 0;

    bool operator==(const GapInterval&) const = default;
};

class PillarState {
public:
    explicit PillarState(std::shared_ptr<const IntervalSystem> sys);

    const IntervalSystem& system() const { return *sys_; }
    const std::shared_ptr<const IntervalSystem>& system_ptr() const { return sys_; }

    int pillar_count() const { return static_cast<int>(pillars_.size()); }
    const std::vector<Pillar>& pillars() const { return pillars_; }
    bool has_pillar_at(GapPosition g) const;

    // -1 / 0 respectively when the interval is unassigned (uncoloured).
    int assigned_pillar(int interval) const { return assignment_[interval]; }
    int colour_of(int interval) const { return psi_[interval]; }
    const std::vector<int>& colours() const { return psi_; }

    const std::vector<int>& colour_set(int order) const { return colour_sets_[order]; }
    const std::vector<std::vector<int>>& colour_sets() const { return colour_sets_; }

    int chi_used() const { return distinct_colours_; }

    // Largest colour value handed out so far (0 when none); colour values
    // can exceed chi_used since sets skip forbidden colours.
    int max_colour() const {
        return colour_use_.empty() ? 0 : static_cast<int>(colour_use_.size()) - 1;
    }
    int assigned_count() const { return assigned_; }
    bool is_complete() const { return assigned_ == system().size(); }

    // Foundation of pillars_[order] w.r.t. the pillars before it.
    GapInterval foundation(int order) const;

    // Maximal pillar-free stretches, sorted by position. Degenerate stretches
    // (a pillar at gap 0 or 2m) are omitted.
    std::vector<GapInterval> arches() const;

    // The arch strictly containing gap g; g must not hold a pillar.
    GapInterval arch_around(GapPosition g) const;

    // Distinct colours on intervals with an endpoint inside J. J must not
    // have a pillar strictly inside it (throws PillarInsideJ).
    int degree(GapInterval j) const;

    // Appends a pillar as the latest in the order and colours the intervals
    // assigned to it. Throws DuplicatePillarGap when the gap already holds
    // one. Mutates this state; see append_pillar for the copying flavour.
    void append(GapPosition gap);

private:
    std::shared_ptr<const IntervalSystem> sys_;
    std::vector<Pillar> pillars_;
    std::vector<GapPosition> sorted_gaps_;
    std::vector<int> assignment_;  // interval -> pillar order, -1 unassigned
    std::vector<int> psi_;         // interval -> colour, 0 uncoloured
    std::vector<std::vector<int>> colour_sets_;
    std::vector<int> colour_use_;  // colour -> how many intervals wear it
    int distinct_colours_ = 0;
    int assigned_ = 0;

    // degree() scratch; epoch stamps spare it a reset per call
    mutable std::vector<int> stamp_;
    mutable int epoch_ = 0;
};

// Functional flavour: copies, appends, returns.
PillarState append_pillar(const PillarState& state, GapPosition gap);

// Builds the state for a whole pillar sequence (in insertion order).
PillarState build_colouring(std::shared_ptr<const IntervalSystem> sys,
                            const std::vector<GapPosition>& gaps);

// Colours intervals that all contain gap p using the given colour set:
// height h -> h-th smallest colour. The set must hold at least as many
// colours as the maximum height (throws ColourSetTooSmall). Returns colours
// aligned with `members`.
std::vector<int> permutation_colouring(const IntervalSystem& sys,
                                       const std::vector<int>& members, GapPosition p,
                                       std::vector<int> colour_set);

// Structural re-verification of a coloured state, by independent passes:
//   proper                 no two overlapping intervals share a colour
//   arch_colour_single     per arch and colour, the crossing intervals of
//                          that colour all hang on one pillar
//   arch_groups_separable  per arch, the crossing intervals grouped by
//                          pillar occupy disjoint outside stretches
struct AssignmentReport {
    bool proper = true;
    bool arch_colour_single = true;
    bool arch_groups_separable = true;
    std::vector<std::string> violations;

    bool ok() const { return proper && arch_colour_single && arch_groups_separable; }
};

AssignmentReport verify_assignment(const PillarState& state);

}  // namespace circlepaint
