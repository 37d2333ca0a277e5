#include "circlepaint/pillar.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "circlepaint/dominance.hpp"
#include "circlepaint/errors.hpp"

namespace circlepaint {

namespace {

std::string stretch_str(GapPosition lo, GapPosition hi) {
    return "(" + std::to_string(lo) + ", " + std::to_string(hi) + ")";
}

// Heights of the members hanging on one pillar: longest run of pairwise
// overlapping members ending at each. Members must arrive sorted by left
// rank; the heights are then the patience positions of the right ranks.
// (kept local instead of calling heights_for_members: that one re-sorts and
// re-validates, which the append path doesn't need)
void member_heights(const IntervalSystem& sys, const std::vector<int>& members,
                    std::vector<int>& heights, std::vector<Rank>& tails) {
    heights.clear();
    tails.clear();
    for (int idx : members) {
        const Rank r = sys[idx].right;
        auto it = std::lower_bound(tails.begin(), tails.end(), r);
        heights.push_back(static_cast<int>(it - tails.begin()) + 1);
        if (it == tails.end())
            tails.push_back(r);
        else
            *it = r;
    }
}

}  // namespace

PillarState::PillarState(std::shared_ptr<const IntervalSystem> sys)
    : sys_(std::move(sys)) {
    if (!sys_) throw PreconditionViolated("PillarState needs a system");
    assignment_.assign(sys_->size(), -1);
    psi_.assign(sys_->size(), 0);
}

bool PillarState::has_pillar_at(GapPosition g) const {
    return std::binary_search(sorted_gaps_.begin(), sorted_gaps_.end(), g);
}

GapInterval PillarState::foundation(int order) const {
    if (order < 0 || order >= pillar_count())
        throw PreconditionViolated("foundation: no pillar with order " +
                                   std::to_string(order));
    const GapPosition g = pillars_[order].gap;
    GapInterval f{0, sys_->max_rank()};
    for (int i = 0; i < order; ++i) {
        const GapPosition q = pillars_[i].gap;
        if (q < g)
            f.lo = std::max(f.lo, q);
        else
            f.hi = std::min(f.hi, q);
    }
    return f;
}

std::vector<GapInterval> PillarState::arches() const {
    std::vector<GapInterval> out;
    GapPosition prev = 0;
    for (GapPosition g : sorted_gaps_) {
        if (g > prev) out.push_back({prev, g});
        prev = g;
    }
    const GapPosition top = sys_->max_rank();
    if (top > prev) out.push_back({prev, top});
    return out;
}

GapInterval PillarState::arch_around(GapPosition g) const {
    const GapPosition top = sys_->max_rank();
    if (g < 0 || g > top)
        throw PreconditionViolated("arch_around: gap " + std::to_string(g) +
                                   " outside [0, " + std::to_string(top) + "]");
    if (has_pillar_at(g))
        throw PreconditionViolated("arch_around: gap " + std::to_string(g) +
                                   " holds a pillar");
    auto it = std::lower_bound(sorted_gaps_.begin(), sorted_gaps_.end(), g);
    GapInterval k{0, top};
    if (it != sorted_gaps_.begin()) k.lo = *std::prev(it);
    if (it != sorted_gaps_.end()) k.hi = *it;
    return k;
}

int PillarState::degree(GapInterval j) const {
    const int top = sys_->max_rank();
    if (j.lo < 0 || j.hi > top || j.lo >= j.hi)
        throw PreconditionViolated("degree: bad stretch " + stretch_str(j.lo, j.hi));
    auto it = std::upper_bound(sorted_gaps_.begin(), sorted_gaps_.end(), j.lo);
    if (it != sorted_gaps_.end() && *it < j.hi)
        throw PillarInsideJ("degree: pillar at gap " + std::to_string(*it) +
                            " lies inside " + stretch_str(j.lo, j.hi));

    // Stamp instead of clear: degree runs many times per solve and the
    // stamp array would dominate the cost of short stretches if reset.
    ++epoch_;
    if (stamp_.size() < colour_use_.size()) stamp_.resize(colour_use_.size(), 0);
    int count = 0;
    for (Rank e = j.lo + 1; e <= j.hi; ++e) {
        const int c = psi_[sys_->owner(e)];
        if (c == 0) continue;
        if (stamp_[c] != epoch_) {
            stamp_[c] = epoch_;
            ++count;
        }
    }
    return count;
}

void PillarState::append(GapPosition gap) {
    const IntervalSystem& sys = *sys_;
    const GapPosition top = sys.max_rank();
    if (gap < 0 || gap > top)
        throw PreconditionViolated("append: gap " + std::to_string(gap) +
                                   " outside [0, " + std::to_string(top) + "]");
    if (has_pillar_at(gap))
        throw DuplicatePillarGap("pillar gap " + std::to_string(gap) +
                                 " is already taken");

    // Foundation of the new pillar: the stretch between its nearest existing
    // neighbours (circle boundary where there is none).
    GapPosition flo = 0;
    GapPosition fhi = top;
    {
        auto it = std::lower_bound(sorted_gaps_.begin(), sorted_gaps_.end(), gap);
        if (it != sorted_gaps_.begin()) flo = *std::prev(it);
        if (it != sorted_gaps_.end()) fhi = *it;
    }

    // One pass over the foundation's ranks picks up both the new members and
    // the forbidden colours. Members are taken at their left endpoints, so
    // they come out sorted by left rank, which member_heights relies on.
    // Every uncoloured interval containing `gap` has its left endpoint in
    // here: one reaching past flo (or below rank 1) would contain the pillar
    // at flo and could not still be uncoloured.
    std::vector<int> members;
    std::vector<int> forbidden;
    for (Rank e = flo + 1; e <= fhi; ++e) {
        const int idx = sys.owner(e);
        const Interval& iv = sys[idx];
        if (psi_[idx] == 0) {
            if (e == iv.left && iv.contains_gap(gap)) members.push_back(idx);
            continue;
        }
        const Rank other = (e == iv.left) ? iv.right : iv.left;
        if (!(flo < other && other <= fhi)) forbidden.push_back(psi_[idx]);
    }

    std::vector<int> heights;
    std::vector<Rank> tails;
    member_heights(sys, members, heights, tails);
    const int need = static_cast<int>(tails.size());

    // Colour set: the `need` smallest positive colours not forbidden.
    std::vector<char> blocked;
    for (int c : forbidden) {
        if (c >= static_cast<int>(blocked.size())) blocked.resize(c + 1, 0);
        blocked[c] = 1;
    }
    std::vector<int> cset;
    cset.reserve(need);
    for (int c = 1; static_cast<int>(cset.size()) < need; ++c)
        if (c >= static_cast<int>(blocked.size()) || !blocked[c]) cset.push_back(c);

    const int order = pillar_count();
    for (std::size_t i = 0; i < members.size(); ++i) {
        const int idx = members[i];
        const int c = cset[heights[i] - 1];
        assignment_[idx] = order;
        psi_[idx] = c;
        if (c >= static_cast<int>(colour_use_.size())) colour_use_.resize(c + 1, 0);
        if (colour_use_[c]++ == 0) ++distinct_colours_;
    }
    assigned_ += static_cast<int>(members.size());

    pillars_.push_back({gap, order});
    sorted_gaps_.insert(
        std::lower_bound(sorted_gaps_.begin(), sorted_gaps_.end(), gap), gap);
    colour_sets_.push_back(std::move(cset));
}

PillarState append_pillar(const PillarState& state, GapPosition gap) {
    PillarState next = state;
    next.append(gap);
    return next;
}

PillarState build_colouring(std::shared_ptr<const IntervalSystem> sys,
                            const std::vector<GapPosition>& gaps) {
    PillarState state(std::move(sys));
    for (GapPosition g : gaps) state.append(g);
    return state;
}

std::vector<int> permutation_colouring(const IntervalSystem& sys,
                                       const std::vector<int>& members, GapPosition p,
                                       std::vector<int> colour_set) {
    for (int c : colour_set)
        if (c < 1) throw PreconditionViolated("permutation_colouring: colours must be positive");
    std::sort(colour_set.begin(), colour_set.end());
    colour_set.erase(std::unique(colour_set.begin(), colour_set.end()),
                     colour_set.end());

    const std::vector<int> heights = heights_for_members(sys, members, p);
    int tallest = 0;
    for (int h : heights) tallest = std::max(tallest, h);
    if (tallest > static_cast<int>(colour_set.size()))
        throw ColourSetTooSmall("permutation_colouring: tallest member has height " +
                                std::to_string(tallest) + " but the set holds only " +
                                std::to_string(colour_set.size()) + " colours");

    std::vector<int> out;
    out.reserve(members.size());
    for (int h : heights) out.push_back(colour_set[h - 1]);
    return out;
}

AssignmentReport verify_assignment(const PillarState& state) {
    const IntervalSystem& sys = state.system();
    AssignmentReport rep;

    // Properness, checked like bracket matching: scanning the circle, two
    // intervals of one colour may nest or stay apart, so a right endpoint
    // must always close the most recently opened interval of its colour.
    {
        std::map<int, std::vector<int>> open;  // colour -> stack of intervals
        for (Rank e = 1; e <= sys.max_rank(); ++e) {
            const int idx = sys.owner(e);
            const int c = state.colour_of(idx);
            if (c == 0) continue;
            auto& st = open[c];
            if (sys.is_left_end(e)) {
                st.push_back(idx);
            } else if (!st.empty() && st.back() == idx) {
                st.pop_back();
            } else {
                rep.proper = false;
                const std::string partner =
                    st.empty() ? "?" : sys[st.back()].id;
                rep.violations.push_back("colour " + std::to_string(c) +
                                         " shared by overlapping intervals '" +
                                         sys[idx].id + "' and '" + partner + "'");
                std::erase(st, idx);
            }
        }
    }

    // Arch structure. For each arch, its crossing intervals (one endpoint
    // inside, one outside) grouped by pillar must (1) never repeat a colour
    // across two groups and (2) occupy pairwise disjoint outside stretches.
    struct Hull {
        Rank lo, hi;
        GapPosition pillar_gap;
    };
    for (const GapInterval& arch : state.arches()) {
        std::map<int, int> colour_pillar;
        std::map<int, Hull> hulls;  // pillar order -> outside-endpoint hull
        for (Rank e = arch.lo + 1; e <= arch.hi; ++e) {
            const int idx = sys.owner(e);
            const int c = state.colour_of(idx);
            if (c == 0) continue;
            const Interval& iv = sys[idx];
            const Rank other = (e == iv.left) ? iv.right : iv.left;
            if (arch.lo < other && other <= arch.hi) continue;

            const int p = state.assigned_pillar(idx);
            auto [cit, fresh] = colour_pillar.try_emplace(c, p);
            if (!fresh && cit->second != p) {
                rep.arch_colour_single = false;
                rep.violations.push_back(
                    "arch " + stretch_str(arch.lo, arch.hi) + ": colour " +
                    std::to_string(c) + " crosses from two pillars (gaps " +
                    std::to_string(state.pillars()[cit->second].gap) + " and " +
                    std::to_string(state.pillars()[p].gap) + ")");
            }
            auto [hit, hfresh] = hulls.try_emplace(
                p, Hull{other, other, state.pillars()[p].gap});
            if (!hfresh) {
                hit->second.lo = std::min(hit->second.lo, other);
                hit->second.hi = std::max(hit->second.hi, other);
            }
        }

        std::vector<Hull> hv;
        hv.reserve(hulls.size());
        for (auto& [p, h] : hulls) hv.push_back(h);
        std::sort(hv.begin(), hv.end(),
                  [](const Hull& a, const Hull& b) { return a.lo < b.lo; });
        for (std::size_t i = 1; i < hv.size(); ++i) {
            if (hv[i].lo <= hv[i - 1].hi) {
                rep.arch_groups_separable = false;
                rep.violations.push_back(
                    "arch " + stretch_str(arch.lo, arch.hi) +
                    ": crossing groups of pillars at gaps " +
                    std::to_string(hv[i - 1].pillar_gap) + " and " +
                    std::to_string(hv[i].pillar_gap) +
                    " interleave outside the arch");
            }
        }
    }

    return rep;
}

}  // namespace circlepaint
