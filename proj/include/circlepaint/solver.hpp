#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "circlepaint/core.hpp"
#include "circlepaint/pillar.hpp"

// The constructive solver. Repeatedly takes the leftmost arch holding an
// uncoloured interval, sweeps it for block boundaries (one per 2ω fresh
// colours), and extends the pillar order with those gaps plus one gap inside
// the uncoloured interval, appended in median-first order. The growth
// inequalities this rests on are asserted at runtime on every step; they are
// theorems, so a violation means a bug here, not bad input.

namespace circlepaint {

// Colours the solver is guaranteed to stay within when the clique number is
// at least 2: ceil(2w*lg(w) + 2w*lg(lg(w)) + 10w). Throws OmegaTooSmall
// below 2 (lg(lg(1)) is undefined; such systems take one colour anyway).
int colour_bound(int omega);

// Ceiling enforced on every arch degree between extensions:
// ceil(w*lg(w) + w*lg(lg(w)) + 6w). Throws OmegaTooSmall below 2.
int intermediate_degree_cap(int omega);

struct SolveStats {
    int omega = 0;
    int colours_used = 0;
    int bound = 0;  // colour_bound(omega) when omega >= 2, omega otherwise
    int pillar_count = 0;
    int iteration_count = 0;
    int max_arch_degree_seen = 0;
    long long assertions_checked = 0;
};

// One sweep of arch K. `blocks` holds q_1 < ... < q_n, each placed in the
// gap right after the rank where the count of distinct colours since the
// previous boundary reaches 2ω, emitted only while the stretch from the
// previous boundary to K.hi still shows more than 2ω colours. `target` is
// q*: the gap at the left rank of K's first uncoloured interval.
struct SweepResult {
    std::vector<GapPosition> blocks;
    GapPosition target = 0;

    // blocks ∪ {target}, sorted, deduplicated
    std::vector<GapPosition> combined() const;
};

// Throws NoUncolouredIntervalInArch when K has no uncoloured interval (every
// uncoloured interval lies entirely inside its arch, so the left rank scan
// finding nothing means there is nothing). When stats is given, the block
// partition is checked against the degree-sum inequality and the boundary
// count cap, and the checks are tallied.
SweepResult sweep_pillars(const PillarState& state, GapInterval k, int omega,
                          SolveStats* stats = nullptr);

// Appends the gaps of q (sorted, unique, strictly inside k, which must be
// pillar-free) in pre-order: median first, then the left half, then the
// right. Asserts that the segments of k between the gaps of q grew by at
// most ω⌈lg(|q|+1)⌉ in degree and the colour count reached at most
// max(before, degree(k) + ω⌈lg(|q|+1)⌉). Returns the largest segment degree
// after the extension. Empty q is a no-op.
int extend_divide_conquer(PillarState& state, GapInterval k,
                          const std::vector<GapPosition>& q, int omega,
                          SolveStats* stats = nullptr);

struct SolveOptions {
    // Recheck the full assignment structure and every arch degree after each
    // extension, instead of only the arches the extension touched.
    bool paranoid = false;
};

struct ColouringResult {
    std::vector<int> colours;                    // by interval index, >= 1
    std::vector<GapPosition> pillar_order;       // gaps, insertion order
    std::vector<std::vector<int>> colour_sets;   // aligned with pillar_order
    int chi_used = 0;
    bool complete = false;
    SolveStats stats;

    // Final pillar state; absent on the one-colour fast path (omega <= 1).
    std::optional<PillarState> state;
};

// Complete proper colouring of the system, within colour_bound(ω) colours
// for ω >= 2 and with ω colours otherwise. Properness is re-verified by an
// independent pass before returning. Deterministic.
ColouringResult colour(std::shared_ptr<const IntervalSystem> sys,
                       const SolveOptions& opts = {});

}  // namespace circlepaint
