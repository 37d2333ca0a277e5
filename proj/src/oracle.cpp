#include "circlepaint/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "circlepaint/errors.hpp"
#include "circlepaint/prng.hpp"

namespace circlepaint {

namespace {

// Shared vertex-selection rule for the greedy run and the search: most
// distinct neighbour colours first, ties to the higher degree, then the
// lower index. Saturation is recomputed per call — this oracle exists for
// desk-scale graphs, and fresh counts keep the backtracking trivial.
int pick_vertex(const Graph& g, const std::vector<int>& colour,
                std::vector<int>& stamp) {
    std::fill(stamp.begin(), stamp.end(), -1);
    int best = -1;
    int best_sat = -1;
    for (int v = 0; v < g.size(); ++v) {
        if (colour[v] != 0) continue;
        const int epoch = v;  // stamps fresh per call, one epoch per candidate
        int sat = 0;
        for (int u : g.adj[v]) {
            const int c = colour[u];
            if (c != 0 && stamp[c] != epoch) {
                stamp[c] = epoch;
                ++sat;
            }
        }
        if (best < 0 || sat > best_sat ||
            (sat == best_sat && (g.degree(v) > g.degree(best) ||
                                 (g.degree(v) == g.degree(best) && v < best)))) {
            best = v;
            best_sat = sat;
        }
    }
    return best;
}

bool neighbour_has_colour(const Graph& g, const std::vector<int>& colour,
                          int v, int c) {
    for (int u : g.adj[v])
        if (colour[u] == c) return true;
    return false;
}

struct ChiSearch {
    const Graph& g;
    long long budget;
    int floor_chi;  // trusted lower bound; search stops when reached
    long long nodes = 0;
    int best;
    std::vector<int> colour;
    std::vector<int> stamp;

    ChiSearch(const Graph& graph, long long node_budget, int lb, int ub)
        : g(graph),
          budget(node_budget),
          floor_chi(lb),
          best(ub),
          colour(graph.size(), 0),
          stamp(graph.size() + 2, -1) {}

    void run() { dfs(0, 0); }

    void dfs(int assigned, int used) {
        if (best == floor_chi || used >= best) return;
        if (assigned == g.size()) {
            best = used;
            return;
        }
        if (++nodes > budget)
            throw Exhausted("exact_chi gave up after " + std::to_string(budget) +
                            " nodes with best " + std::to_string(best));
        const int v = pick_vertex(g, colour, stamp);
        const int top = std::min(used + 1, best - 1);
        for (int c = 1; c <= top; ++c) {
            if (neighbour_has_colour(g, colour, v, c)) continue;
            colour[v] = c;
            dfs(assigned + 1, std::max(used, c));
            colour[v] = 0;
            if (best == floor_chi) return;
        }
    }
};

// Greedy colouring in the same order the search uses; its size seeds the
// upper bound.
int greedy_chi(const Graph& g) {
    std::vector<int> colour(g.size(), 0);
    std::vector<int> stamp(g.size() + 2, -1);
    int used = 0;
    for (int step = 0; step < g.size(); ++step) {
        const int v = pick_vertex(g, colour, stamp);
        int c = 1;
        while (neighbour_has_colour(g, colour, v, c)) ++c;
        colour[v] = c;
        used = std::max(used, c);
    }
    return used;
}

}  // namespace

int exact_chi(const Graph& g, long long node_budget, int clique_lower_bound) {
    if (g.size() == 0) return 0;
    const int lb = std::max(1, clique_lower_bound);
    const int ub = greedy_chi(g);
    if (ub <= lb) return ub;
    ChiSearch search(g, node_budget, lb, ub);
    search.run();
    return search.best;
}

bool verify_colouring(const Graph& g, const std::vector<int>& colours) {
    if (static_cast<int>(colours.size()) != g.size())
        throw PreconditionViolated("verify_colouring: one colour per vertex");
    for (int v = 0; v < g.size(); ++v)
        if (colours[v] < 1) return false;
    for (int v = 0; v < g.size(); ++v)
        for (int u : g.adj[v])
            if (u > v && colours[u] == colours[v]) return false;
    return true;
}

ColouringCheck verify_colouring(const IntervalSystem& sys,
                                const std::vector<int>& colours) {
    if (static_cast<int>(colours.size()) != sys.size())
        throw PreconditionViolated("verify_colouring: one colour per interval");
    ColouringCheck out;

    int max_colour = 0;
    for (int i = 0; i < sys.size(); ++i) {
        if (colours[i] < 1) {
            out.complete = false;
            out.violations.push_back("interval '" + sys[i].id + "' is uncoloured");
        } else {
            max_colour = std::max(max_colour, colours[i]);
        }
    }

    // Bracket matching per colour: same-coloured intervals must nest or
    // stay apart, so each right endpoint has to close the innermost open
    // interval of its colour.
    std::vector<std::vector<int>> open(max_colour + 1);
    for (Rank e = 1; e <= sys.max_rank(); ++e) {
        const int idx = sys.owner(e);
        const int c = colours[idx];
        if (c < 1) continue;
        auto& st = open[c];
        if (sys.is_left_end(e)) {
            st.push_back(idx);
        } else if (!st.empty() && st.back() == idx) {
            st.pop_back();
        } else {
            out.proper = false;
            const std::string partner = st.empty() ? "?" : sys[st.back()].id;
            out.violations.push_back("colour " + std::to_string(c) +
                                     " sits on overlapping intervals '" +
                                     sys[idx].id + "' and '" + partner + "'");
            std::erase(st, idx);
        }
    }
    return out;
}

IntervalSystem random_system(int m, std::uint64_t seed) {
    if (m < 0) throw PreconditionViolated("random_system: m must be >= 0");
    std::vector<Rank> ranks(2 * m);
    std::iota(ranks.begin(), ranks.end(), 1);
    SplitMix64 rng(seed);
    for (int i = 2 * m - 1; i >= 1; --i) {
        const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(ranks[i], ranks[j]);
    }
    std::vector<Interval> intervals;
    intervals.reserve(m);
    for (int k = 0; k < m; ++k) {
        Rank a = ranks[2 * k];
        Rank b = ranks[2 * k + 1];
        if (a > b) std::swap(a, b);
        intervals.push_back({std::to_string(k + 1), a, b});
    }
    return IntervalSystem(std::move(intervals));
}

}  // namespace circlepaint
