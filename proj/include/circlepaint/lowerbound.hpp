#pragma once

#include "circlepaint/core.hpp"

// The hard-instance family D_{n,w} and its desk-scale verification. The
// family lives on 2n circle points; for every base index i in [1,n] and
// offset j in [1,w-1] it carries floor(w/(j+1)) coinciding chords from p_i
// to q_{i+j} (index wrapped back into [1,n]). Its chord count grows like
// n*w*ln(w) while no w+1 chords pairwise intersect and no n chords are
// pairwise disjoint — which forces many colours relative to the clique
// number and makes the family a quality benchmark for the solver.

namespace circlepaint {

// Throws NTooSmall when n <= 3w-3 and OmegaTooSmall when w < 1. Chords are
// listed by (i, j) with their multiplicity; w = 1 yields an empty diagram.
ChordDiagram lower_bound_diagram(int n, int omega);

// Geometric intersection: true when the endpoint pairs strictly interleave
// around the circle or the chords coincide (share both endpoints); false
// when they share exactly one endpoint, nest, or lie apart. Multiplicities
// play no role here.
bool chords_intersect(const Chord& a, const Chord& b);

struct Rational {
    long long num = 0;
    long long den = 1;
};

struct LowerBoundReport {
    int n = 0;
    int omega = 0;
    long long chord_count = 0;
    double size_lower_bound = 0.0;  // n * omega * (ln(omega) - 2)
    int clique_checked = 0;   // largest pairwise-intersecting set found
    int stable_checked = -1;  // largest pairwise-disjoint set; -1 if skipped
    Rational chi_lower;       // chord_count / (n - 1)
};

// Builds D_{n,omega} and verifies its advertised structure:
//   * the chord count matches the closed form n*sum(floor(w/(j+1))) and
//     exceeds n*w*(ln(w)-2) (checked with 1e-9 relative slack);
//   * no omega+1 chords pairwise intersect — by exhaustive search when the
//     expanded copy count is within brute_limit (and 64, one machine word),
//     otherwise via the clique number of the converted interval system;
//   * no n chords are pairwise disjoint — exhaustive search only, skipped
//     (stable_checked = -1) when over the brute limit.
// A failed check throws InvariantViolation; bad (n, omega) throw as in
// lower_bound_diagram.
LowerBoundReport verify_lower_bound_instance(int n, int omega,
                                             long long brute_limit);

}  // namespace circlepaint
