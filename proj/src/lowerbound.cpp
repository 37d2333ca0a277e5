#include "circlepaint/lowerbound.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "circlepaint/dominance.hpp"
#include "circlepaint/errors.hpp"

namespace circlepaint {

namespace {

// Branch-and-bound maximum clique over an adjacency-mask graph (<= 64
// vertices). Pivoting keeps the branching factor down; the size+popcount
// bound prunes the rest. Plenty for the expanded copy counts this module
// feeds it.
struct MaskClique {
    const std::vector<std::uint64_t>& adj;
    int best = 0;

    void expand(std::uint64_t cand, int size) {
        if (size + std::popcount(cand) <= best) return;
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        // pivot: candidate with the most candidate-neighbours
        int pivot = -1;
        int pivot_links = -1;
        for (std::uint64_t rest = cand; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const int links = std::popcount(cand & adj[v]);
            if (links > pivot_links) {
                pivot_links = links;
                pivot = v;
            }
        }
        // the pivot is its own non-neighbour, so it is always branched on;
        // a maximum clique avoiding all of cand \ N(pivot) could be grown
        // by the pivot itself, so skipping those branches loses nothing
        for (std::uint64_t ext = cand & ~adj[pivot]; ext;) {
            const int v = std::countr_zero(ext);
            ext &= ext - 1;
            expand(cand & adj[v], size + 1);
            cand &= ~(1ULL << v);
        }
    }

    int run(int vertices) {
        if (vertices == 0) return 0;
        const std::uint64_t all =
            vertices == 64 ? ~0ULL : ((1ULL << vertices) - 1);
        expand(all, 0);
        return best;
    }
};

long long closed_form_count(int n, int omega) {
    long long per_base = 0;
    for (int j = 1; j <= omega - 1; ++j) per_base += omega / (j + 1);
    return per_base * n;
}

}  // namespace

ChordDiagram lower_bound_diagram(int n, int omega) {
    if (omega < 1)
        throw OmegaTooSmall("lower_bound_diagram needs omega >= 1, got " +
                            std::to_string(omega));
    if (n <= 3 * omega - 3)
        throw NTooSmall("lower_bound_diagram needs n > 3*omega - 3 = " +
                        std::to_string(3 * omega - 3) + ", got " +
                        std::to_string(n));
    ChordDiagram d;
    d.n = n;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= omega - 1; ++j) {
            const int mult = omega / (j + 1);
            if (mult < 1) continue;
            const int partner = ((i + j - 1) % n) + 1;  // i+j wrapped into [1, n]
            d.chords.push_back({2 * (i - 1), 2 * (partner - 1) + 1, mult});
        }
    }
    return d;
}

bool chords_intersect(const Chord& a, const Chord& b) {
    const int a1 = std::min(a.a, a.b);
    const int a2 = std::max(a.a, a.b);
    const int b1 = std::min(b.a, b.b);
    const int b2 = std::max(b.a, b.b);
    if (a1 == b1 && a2 == b2) return true;  // coinciding chords intersect
    if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
    const bool first_inside = a1 < b1 && b1 < a2;
    const bool second_inside = a1 < b2 && b2 < a2;
    return first_inside != second_inside;
}

LowerBoundReport verify_lower_bound_instance(int n, int omega,
                                             long long brute_limit) {
    const ChordDiagram d = lower_bound_diagram(n, omega);

    LowerBoundReport rep;
    rep.n = n;
    rep.omega = omega;
    for (const Chord& c : d.chords) rep.chord_count += c.mult;

    const long long closed = closed_form_count(n, omega);
    if (rep.chord_count != closed)
        throw InvariantViolation("D_{" + std::to_string(n) + "," +
                                 std::to_string(omega) + "} has " +
                                 std::to_string(rep.chord_count) +
                                 " chords, closed form says " +
                                 std::to_string(closed));

    rep.size_lower_bound = n * omega * (std::log(omega) - 2.0);
    if (!(rep.chord_count >
          rep.size_lower_bound - std::abs(rep.size_lower_bound) * 1e-9))
        throw InvariantViolation("chord count " + std::to_string(rep.chord_count) +
                                 " does not exceed the size bound " +
                                 std::to_string(rep.size_lower_bound));

    const bool brute = rep.chord_count <= brute_limit && rep.chord_count <= 64;
    if (brute) {
        // expand copies into vertices; copies of one chord pairwise
        // intersect, anything else follows the geometry
        std::vector<int> owner_chord;
        for (std::size_t k = 0; k < d.chords.size(); ++k)
            for (int t = 0; t < d.chords[k].mult; ++t)
                owner_chord.push_back(static_cast<int>(k));
        const int v_count = static_cast<int>(owner_chord.size());
        std::vector<std::uint64_t> meet(v_count, 0);
        std::vector<std::uint64_t> avoid(v_count, 0);
        for (int u = 0; u < v_count; ++u) {
            for (int v = u + 1; v < v_count; ++v) {
                const bool hit =
                    owner_chord[u] == owner_chord[v] ||
                    chords_intersect(d.chords[owner_chord[u]], d.chords[owner_chord[v]]);
                auto& table = hit ? meet : avoid;
                table[u] |= 1ULL << v;
                table[v] |= 1ULL << u;
            }
        }
        rep.clique_checked = MaskClique{meet}.run(v_count);
        rep.stable_checked = MaskClique{avoid}.run(v_count);
    } else {
        rep.clique_checked = circlepaint::omega(chords_to_intervals(d)).omega;
        rep.stable_checked = -1;
    }

    if (rep.clique_checked > omega)
        throw InvariantViolation(std::to_string(rep.clique_checked) +
                                 " pairwise-intersecting chords found in D_{" +
                                 std::to_string(n) + "," + std::to_string(omega) +
                                 "}, expected at most " + std::to_string(omega));
    if (rep.stable_checked > n - 1)
        throw InvariantViolation(std::to_string(rep.stable_checked) +
                                 " pairwise-disjoint chords found in D_{" +
                                 std::to_string(n) + "," + std::to_string(omega) +
                                 "}, expected at most " + std::to_string(n - 1));

    rep.chi_lower.num = rep.chord_count;
    rep.chi_lower.den = n > 1 ? n - 1 : 1;
    return rep;
}

}  // namespace circlepaint
