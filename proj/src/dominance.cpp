#include "circlepaint/dominance.hpp"

#include <algorithm>
#include <set>

#include "circlepaint/errors.hpp"

namespace circlepaint {

// Patience heights: members arrive in ascending left rank; tails[h] is the
// smallest right rank that ends a chain of length h+1. The chain ending at a
// member uses predecessors with both smaller left (processed earlier) and
// smaller right (tails below its right rank), so its height is the insert
// position + 1. O(k log k).
static void patience_heights(const IntervalSystem& sys, const std::vector<int>& members,
                             std::vector<int>& heights, std::vector<Rank>& tails) {
    tails.clear();
    heights.resize(members.size());
    for (size_t i = 0; i < members.size(); ++i) {
        Rank r = sys[members[i]].right;
        auto it = std::lower_bound(tails.begin(), tails.end(), r);
        heights[i] = static_cast<int>(it - tails.begin()) + 1;
        if (it == tails.end())
            tails.push_back(r);
        else
            *it = r;
    }
}

// Members containing gap p, ascending left rank (the rank scan provides the
// order for free).
static std::vector<int> members_at(const IntervalSystem& sys, GapPosition p) {
    std::vector<int> members;
    for (Rank e = 1; e <= p; ++e) {
        if (!sys.is_left_end(e)) continue;
        int idx = sys.owner(e);
        if (sys[idx].contains_gap(p)) members.push_back(idx);
    }
    return members;
}

std::vector<HeightEntry> heights_at_point(const IntervalSystem& sys, GapPosition p) {
    if (p < 0 || p > sys.max_rank())
        throw PreconditionViolated("gap " + std::to_string(p) + " out of range");
    std::vector<int> members = members_at(sys, p);
    std::vector<int> heights;
    std::vector<Rank> tails;
    patience_heights(sys, members, heights, tails);
    std::vector<HeightEntry> out(members.size());
    for (size_t i = 0; i < members.size(); ++i) out[i] = {members[i], heights[i]};
    return out;
}

std::vector<int> heights_for_members(const IntervalSystem& sys,
                                     const std::vector<int>& members, GapPosition p) {
    for (int idx : members)
        if (!sys[idx].contains_gap(p))
            throw PreconditionViolated("member \"" + sys[idx].id +
                                       "\" does not contain gap " + std::to_string(p));
    std::vector<int> order(members.begin(), members.end());
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sys[a].left < sys[b].left; });
    std::vector<int> heights;
    std::vector<Rank> tails;
    patience_heights(sys, order, heights, tails);
    // map back to the caller's order
    std::vector<int> out(members.size());
    for (size_t i = 0; i < members.size(); ++i) {
        auto it = std::find(order.begin(), order.end(), members[i]);
        out[i] = heights[it - order.begin()];
    }
    return out;
}

int omega_at_point(const IntervalSystem& sys, GapPosition p) {
    if (p < 0 || p > sys.max_rank())
        throw PreconditionViolated("gap " + std::to_string(p) + " out of range");
    std::vector<int> members = members_at(sys, p);
    std::vector<int> heights;
    std::vector<Rank> tails;
    patience_heights(sys, members, heights, tails);
    return static_cast<int>(tails.size());
}

// Witness chain at one gap: quadratic height/predecessor pass, used once at
// the winning gap. Ties prefer the smallest right rank, for both chain ends
// and predecessors, so the witness is reproducible.
static std::vector<int> witness_at(const IntervalSystem& sys, GapPosition p, int target) {
    std::vector<int> members = members_at(sys, p);
    const int k = static_cast<int>(members.size());
    std::vector<int> height(k, 1), pred(k, -1);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < i; ++j) {
            if (sys[members[j]].right >= sys[members[i]].right) continue;
            if (height[j] + 1 > height[i] ||
                (height[j] + 1 == height[i] && pred[i] >= 0 &&
                 sys[members[j]].right < sys[members[pred[i]]].right)) {
                height[i] = height[j] + 1;
                pred[i] = j;
            }
        }
    }
    int end = -1;
    for (int i = 0; i < k; ++i) {
        if (height[i] != target) continue;
        if (end < 0 || sys[members[i]].right < sys[members[end]].right) end = i;
    }
    std::vector<int> chain;
    for (int cur = end; cur >= 0; cur = pred[cur]) chain.push_back(members[cur]);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

CliqueResult omega(const IntervalSystem& sys) {
    const int m = sys.size();
    if (m == 0) return {};

    // Active interval count per gap, for pruning: a gap whose stabbing count
    // cannot beat the best height so far is skipped without the LIS pass.
    const int two_m = 2 * m;
    std::vector<int> active(two_m + 1, 0);
    for (Rank e = 1; e <= two_m; ++e)
        active[e] = active[e - 1] + (sys.is_left_end(e) ? 1 : -1);

    std::vector<int> actives;  // ascending left rank; dead entries skipped lazily
    std::vector<int> scratch, heights;
    std::vector<Rank> tails;
    int best = 0;
    GapPosition best_gap = -1;
    for (Rank e = 1; e <= two_m; ++e) {
        if (!sys.is_left_end(e)) continue;
        actives.push_back(sys.owner(e));
        GapPosition g = e;  // the gap immediately after this left endpoint
        if (active[g] <= best) continue;
        // intervals closed before g stay closed for every later gap, so the
        // compaction is permanent
        scratch.clear();
        for (int idx : actives)
            if (sys[idx].right > g) scratch.push_back(idx);
        actives.swap(scratch);
        patience_heights(sys, actives, heights, tails);
        int h = static_cast<int>(tails.size());
        if (h > best) {
            best = h;
            best_gap = g;
        }
    }
    CliqueResult res;
    res.omega = best;
    if (best > 0) res.witness = witness_at(sys, best_gap, best);
    return res;
}

// ---------------------------------------------------------------- 2D grids

ChainResult longest_chain_2d(const std::vector<GridPoint>& points) {
    const int k = static_cast<int>(points.size());
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    // x ascending, y descending on ties: equal-x points can never chain.
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (points[a].x != points[b].x) return points[a].x < points[b].x;
        return points[a].y > points[b].y;
    });
    std::vector<int> height(k, 0), pred(k, -1);
    int best = -1;
    for (int oi = 0; oi < k; ++oi) {
        int i = order[oi];
        height[i] = 1;
        for (int oj = 0; oj < oi; ++oj) {
            int j = order[oj];
            if (points[j].x < points[i].x && points[j].y < points[i].y &&
                height[j] + 1 > height[i]) {
                height[i] = height[j] + 1;
                pred[i] = j;
            }
        }
        if (best < 0 || height[i] > height[best]) best = i;
    }
    ChainResult res;
    if (best < 0) return res;
    res.length = height[best];
    for (int cur = best; cur >= 0; cur = pred[cur]) res.chain.push_back(points[cur]);
    std::reverse(res.chain.begin(), res.chain.end());
    return res;
}

namespace {

// Branch and bound over points in lex order; a set is an antichain when no
// two chosen points strictly increase in both coordinates.
struct AntichainSearch {
    std::vector<GridPoint> pts;
    std::vector<GridPoint> chosen;
    int best = 0;

    bool compatible(const GridPoint& p) const {
        for (const GridPoint& q : chosen) {
            if (q.x < p.x && q.y < p.y) return false;
            if (p.x < q.x && p.y < q.y) return false;
        }
        return true;
    }

    void run(int from) {
        best = std::max(best, static_cast<int>(chosen.size()));
        int remaining = static_cast<int>(pts.size()) - from;
        if (static_cast<int>(chosen.size()) + remaining <= best) return;
        for (int i = from; i < static_cast<int>(pts.size()); ++i) {
            if (!compatible(pts[i])) continue;
            chosen.push_back(pts[i]);
            run(i + 1);
            chosen.pop_back();
        }
    }
};

}  // namespace

int grid_max_antichain(int a, int b, bool exhaustive) {
    if (a < 1 || b < 1) throw PreconditionViolated("grid sides must be >= 1");
    if (!exhaustive) return a + b - 1;
    AntichainSearch search;
    for (int x = 1; x <= a; ++x)
        for (int y = 1; y <= b; ++y) search.pts.push_back({x, y});
    search.run(0);
    return search.best;
}

bool check_chain_bounded_set_size(const std::vector<GridPoint>& s, int a, int b, int n) {
    if (n < 1 || n > std::min(a, b))
        throw PreconditionViolated("need 1 <= n <= min(a,b)");
    std::set<std::pair<int, int>> seen;
    for (const GridPoint& p : s) {
        if (p.x < 1 || p.x > a || p.y < 1 || p.y > b)
            throw PreconditionViolated("point outside the grid");
        if (!seen.insert({p.x, p.y}).second)
            throw PreconditionViolated("duplicate point in S");
    }
    if (longest_chain_2d(s).length > n)
        throw PreconditionViolated("S has a chain longer than n");
    return static_cast<long long>(s.size()) <=
           static_cast<long long>(n) * (a + b - n);
}

}  // namespace circlepaint
