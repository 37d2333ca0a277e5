#include "circlepaint/core.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "circlepaint/errors.hpp"

namespace circlepaint {

bool overlaps(const Interval& a, const Interval& b) {
    if (a.left < b.left) return b.left < a.right && a.right < b.right;
    return a.left < b.right && b.right < a.right;
}

IntervalSystem::IntervalSystem(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
    const int m = size();
    owner_.assign(2 * m + 1, -1);
    std::unordered_set<std::string> seen;
    seen.reserve(m);
    for (int i = 0; i < m; ++i) {
        const Interval& iv = intervals_[i];
        if (!seen.insert(iv.id).second)
            throw InvalidInput("duplicate interval id \"" + iv.id + "\"");
        if (iv.left >= iv.right)
            throw DegenerateInterval("interval \"" + iv.id + "\" has left >= right");
        for (Rank e : {iv.left, iv.right}) {
            if (e < 1 || e > 2 * m)
                throw InvalidInput("interval \"" + iv.id + "\" endpoint rank " +
                                   std::to_string(e) + " outside 1.." + std::to_string(2 * m));
            if (owner_[e] != -1)
                throw DuplicateEndpoint("rank " + std::to_string(e) + " used by \"" +
                                        intervals_[owner_[e]].id + "\" and \"" + iv.id + "\"");
            owner_[e] = i;
        }
    }
}

int IntervalSystem::index_of(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (intervals_[i].id == id) return i;
    return -1;
}

IntervalSystem canonicalize(const std::vector<RawInterval>& raw) {
    for (const RawInterval& r : raw)
        if (!(r.left < r.right))
            throw DegenerateInterval("interval \"" + r.id + "\" has left >= right");

    // endpoint -> (owner, is_left), sorted by raw value
    struct Endpoint {
        double value;
        int owner;
        bool is_left;
    };
    std::vector<Endpoint> pts;
    pts.reserve(2 * raw.size());
    for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
        pts.push_back({raw[i].left, i, true});
        pts.push_back({raw[i].right, i, false});
    }
    std::stable_sort(pts.begin(), pts.end(),
                     [](const Endpoint& a, const Endpoint& b) { return a.value < b.value; });
    for (size_t k = 1; k < pts.size(); ++k)
        if (pts[k].value == pts[k - 1].value)
            throw DuplicateEndpoint("endpoint value " + std::to_string(pts[k].value) +
                                    " appears twice (\"" + raw[pts[k - 1].owner].id +
                                    "\", \"" + raw[pts[k].owner].id + "\")");

    std::vector<Interval> out(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) out[i].id = raw[i].id;
    for (size_t k = 0; k < pts.size(); ++k) {
        Rank rank = static_cast<Rank>(k + 1);
        if (pts[k].is_left)
            out[pts[k].owner].left = rank;
        else
            out[pts[k].owner].right = rank;
    }
    return IntervalSystem(std::move(out));
}

Graph overlap_graph(const IntervalSystem& sys) {
    std::vector<std::string> ids;
    ids.reserve(sys.size());
    for (const Interval& iv : sys.intervals()) ids.push_back(iv.id);
    Graph g(std::move(ids));
    for (int i = 0; i < sys.size(); ++i)
        for (int j = i + 1; j < sys.size(); ++j)
            if (overlaps(sys[i], sys[j])) g.add_edge(i, j);
    g.finalize();
    return g;
}

// ------------------------------------------------------------------ chords

int point_index(const std::string& label, int n) {
    if (label.size() < 2 || (label[0] != 'p' && label[0] != 'q'))
        throw InvalidInput("bad point label \"" + label + "\" (want p<i> or q<i>)");
    int i = 0;
    for (size_t k = 1; k < label.size(); ++k) {
        if (label[k] < '0' || label[k] > '9')
            throw InvalidInput("bad point label \"" + label + "\"");
        i = i * 10 + (label[k] - '0');
    }
    if (i < 1 || i > n)
        throw InvalidInput("point label \"" + label + "\" out of range for n=" +
                           std::to_string(n));
    return 2 * (i - 1) + (label[0] == 'q' ? 1 : 0);
}

std::string point_label(int index) {
    return (index % 2 == 0 ? "p" : "q") + std::to_string(index / 2 + 1);
}

IntervalSystem chords_to_intervals(const ChordDiagram& d) {
    if (d.n < 1) throw InvalidInput("chord diagram needs n >= 1");
    const int points = 2 * d.n;
    for (const Chord& c : d.chords) {
        if (c.a < 0 || c.a >= points || c.b < 0 || c.b >= points)
            throw InvalidInput("chord endpoint out of range");
        if (c.a == c.b)
            throw InvalidInput("chord endpoints must be distinct points");
        if (c.mult < 1) throw InvalidInput("chord multiplicity must be >= 1");
    }

    // Merge chords with the same unordered endpoint pair into one group of
    // coinciding copies; copies keep the input order for id assignment.
    struct Group {
        int x, y;                                  // x < y, point indices
        std::vector<std::pair<int, int>> copies;   // (chord position, copy number), 0-based
        int base_at_x = -1, base_at_y = -1;        // first global slot at each endpoint
    };
    std::map<std::pair<int, int>, int> group_of;
    std::vector<Group> groups;
    for (int k = 0; k < static_cast<int>(d.chords.size()); ++k) {
        const Chord& c = d.chords[k];
        auto key = std::minmax(c.a, c.b);
        auto [it, fresh] = group_of.try_emplace({key.first, key.second},
                                                static_cast<int>(groups.size()));
        if (fresh) groups.push_back({key.first, key.second, {}, -1, -1});
        for (int t = 0; t < c.mult; ++t) groups[it->second].copies.push_back({k, t});
    }

    // Per point: incident groups sorted by clockwise distance of the far
    // endpoint, descending, so that chords leaving the same point nest
    // instead of crossing. Globally consecutive slot numbers then follow the
    // clockwise point order, i.e. the cut sits between q_n and p_1.
    std::vector<std::vector<int>> incident(points);  // group indices
    for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi) {
        incident[groups[gi].x].push_back(gi);
        incident[groups[gi].y].push_back(gi);
    }
    int slot = 0;
    for (int c = 0; c < points; ++c) {
        auto cw_dist = [&](int gi) {
            int far = (groups[gi].x == c) ? groups[gi].y : groups[gi].x;
            return (far - c + points) % points;
        };
        std::sort(incident[c].begin(), incident[c].end(),
                  [&](int a, int b) { return cw_dist(a) > cw_dist(b); });
        for (int gi : incident[c]) {
            if (groups[gi].x == c)
                groups[gi].base_at_x = slot;
            else
                groups[gi].base_at_y = slot;
            slot += static_cast<int>(groups[gi].copies.size());
        }
    }

    std::vector<Interval> out;
    for (const Group& g : groups) {
        for (int t = 0; t < static_cast<int>(g.copies.size()); ++t) {
            Rank e1 = static_cast<Rank>(g.base_at_x + t + 1);
            Rank e2 = static_cast<Rank>(g.base_at_y + t + 1);
            auto [chord_pos, copy_no] = g.copies[t];
            Interval iv;
            iv.id = "c" + std::to_string(chord_pos + 1) + "." + std::to_string(copy_no + 1);
            iv.left = std::min(e1, e2);
            iv.right = std::max(e1, e2);
            out.push_back(std::move(iv));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Interval& a, const Interval& b) { return a.left < b.left; });
    return IntervalSystem(std::move(out));
}

}  // namespace circlepaint
