#include "circlepaint/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "circlepaint/dominance.hpp"
#include "circlepaint/errors.hpp"
#include "circlepaint/oracle.hpp"

namespace circlepaint {

namespace {

long double lg(long double x) { return std::log2(x); }

// The bound expressions land exactly on integers for whole powers of two
// (lg is exact there); the epsilon keeps ceil from pushing such values up a
// unit on floating noise.
int ceil_expr(long double v) { return static_cast<int>(std::ceil(v - 1e-9L)); }

// Smallest k with 2^k >= x.
int ceil_log2(int x) {
    return x <= 1 ? 0 : std::bit_width(static_cast<unsigned>(x) - 1u);
}

std::string stretch_str(GapPosition lo, GapPosition hi) {
    return "(" + std::to_string(lo) + ", " + std::to_string(hi) + ")";
}

void append_preorder(PillarState& state, const std::vector<GapPosition>& q,
                     int lo, int hi) {
    if (lo > hi) return;
    const int size = hi - lo + 1;
    const int mid = lo + (size + 1) / 2 - 1;  // lower median
    state.append(q[mid]);
    append_preorder(state, q, lo, mid - 1);
    append_preorder(state, q, mid + 1, hi);
}

}  // namespace

int colour_bound(int omega) {
    if (omega < 2)
        throw OmegaTooSmall("colour_bound needs omega >= 2, got " +
                            std::to_string(omega));
    const long double w = omega;
    return ceil_expr(2 * w * lg(w) + 2 * w * lg(lg(w)) + 10 * w);
}

int intermediate_degree_cap(int omega) {
    if (omega < 2)
        throw OmegaTooSmall("intermediate_degree_cap needs omega >= 2, got " +
                            std::to_string(omega));
    const long double w = omega;
    return ceil_expr(w * lg(w) + w * lg(lg(w)) + 6 * w);
}

std::vector<GapPosition> SweepResult::combined() const {
    std::vector<GapPosition> q = blocks;
    q.insert(std::lower_bound(q.begin(), q.end(), target), target);
    q.erase(std::unique(q.begin(), q.end()), q.end());
    return q;
}

SweepResult sweep_pillars(const PillarState& state, GapInterval k, int omega,
                          SolveStats* stats) {
    const IntervalSystem& sys = state.system();
    const int dk = state.degree(k);  // also validates that k is pillar-free
    const int two_omega = 2 * omega;

    // Single pass: cut a provisional boundary wherever the count of distinct
    // colours since the previous cut reaches 2ω. Each cut lands in the gap
    // right after the rank that completed the count.
    std::vector<GapPosition> prov;
    {
        std::vector<int> stamp(state.max_colour() + 1, 0);
        int epoch = 1;
        int count = 0;
        for (Rank e = k.lo + 1; e <= k.hi; ++e) {
            const int c = state.colour_of(sys.owner(e));
            if (c == 0 || stamp[c] == epoch) continue;
            stamp[c] = epoch;
            if (++count == two_omega) {
                prov.push_back(e);
                ++epoch;
                count = 0;
            }
        }
    }

    // A boundary is kept only while the stretch from its predecessor to the
    // arch's end still shows more than 2ω colours. Those tail degrees only
    // shrink as the boundary moves right, so the kept ones form a prefix;
    // binary-search its end rather than paying a tail scan per boundary.
    int kept = 0;
    if (dk > two_omega) {
        // first provisional index whose tail falls to <= 2ω; the last one
        // always qualifies (a tail above 2ω would have produced another cut)
        int fail = static_cast<int>(prov.size()) - 1;
        int lo = 0;
        int hi = fail - 1;
        while (lo <= hi) {
            const int mid = (lo + hi) / 2;
            if (state.degree({prov[mid], k.hi}) <= two_omega) {
                fail = mid;
                hi = mid - 1;
            } else {
                lo = mid + 1;
            }
        }
        kept = fail + 1;
    }
    prov.resize(kept);

    // q*: the first uncoloured interval of K, met at its left rank. Every
    // uncoloured interval sits entirely inside one arch, so scanning left
    // ranks cannot miss one that merely reaches into K.
    GapPosition target = -1;
    for (Rank e = k.lo + 1; e <= k.hi; ++e) {
        const int idx = sys.owner(e);
        if (state.colour_of(idx) == 0 && sys.is_left_end(e)) {
            target = e;
            break;
        }
    }
    if (target < 0)
        throw NoUncolouredIntervalInArch("no uncoloured interval inside arch " +
                                         stretch_str(k.lo, k.hi));

    // The boundaries partition K into `kept` parts, the last one running to
    // K.hi. Every part shows at least 2ω distinct colours, which is exactly
    // when the degree-sum inequality and the boundary-count cap apply (both
    // need at least ω parts and degree(K) >= ω).
    if (stats && kept >= omega && dk >= omega) {
        long long sum = 0;
        GapPosition prev = k.lo;
        for (int j = 1; j <= kept; ++j) {
            const GapPosition right = (j < kept) ? prov[j - 1] : k.hi;
            sum += state.degree({prev, right});
            prev = right;
        }
        const long long cap = static_cast<long long>(omega) * (dk + kept - omega);
        if (sum > cap)
            throw InvariantViolation(
                "sweep of arch " + stretch_str(k.lo, k.hi) + ": partition degrees sum to " +
                std::to_string(sum) + ", above the allowed " + std::to_string(cap) +
                " (degree " + std::to_string(dk) + ", " + std::to_string(kept) + " parts)");
        const long double w = omega;
        const long double count_cap = w * lg(w) + w * lg(lg(w)) + 5 * w;
        if (static_cast<long double>(kept) >= count_cap)
            throw InvariantViolation(
                "sweep of arch " + stretch_str(k.lo, k.hi) + " produced " +
                std::to_string(kept) + " boundaries, at or above the cap " +
                std::to_string(static_cast<double>(count_cap)));
        stats->assertions_checked += 2;
    }

    return SweepResult{std::move(prov), target};
}

int extend_divide_conquer(PillarState& state, GapInterval k,
                          const std::vector<GapPosition>& q, int omega,
                          SolveStats* stats) {
    const int dk = state.degree(k);  // validates k is pillar-free as well
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (!(k.lo < q[i] && q[i] < k.hi))
            throw GapOutsideArch("gap " + std::to_string(q[i]) +
                                 " is not strictly inside arch " +
                                 stretch_str(k.lo, k.hi));
        if (i > 0 && q[i] <= q[i - 1])
            throw PreconditionViolated("extension gaps must be sorted and distinct");
    }
    if (q.empty()) return dk;

    const int segments = static_cast<int>(q.size()) + 1;
    const auto segment = [&](int i) -> GapInterval {
        return {i == 0 ? k.lo : q[i - 1],
                i == segments - 1 ? k.hi : q[i]};
    };

    int before = 0;
    for (int i = 0; i < segments; ++i)
        before = std::max(before, state.degree(segment(i)));
    const int chi_before = state.chi_used();

    append_preorder(state, q, 0, static_cast<int>(q.size()) - 1);

    const int growth = omega * ceil_log2(static_cast<int>(q.size()) + 1);
    int after = 0;
    for (int i = 0; i < segments; ++i)
        after = std::max(after, state.degree(segment(i)));

    if (after > before + growth)
        throw InvariantViolation(
            "extending arch " + stretch_str(k.lo, k.hi) + " with " +
            std::to_string(q.size()) + " gaps raised a segment degree from " +
            std::to_string(before) + " to " + std::to_string(after) +
            ", above the allowed +" + std::to_string(growth));
    const int chi_cap = std::max(chi_before, dk + growth);
    if (state.chi_used() > chi_cap)
        throw InvariantViolation(
            "extending arch " + stretch_str(k.lo, k.hi) + " raised the colour count to " +
            std::to_string(state.chi_used()) + ", above the allowed " +
            std::to_string(chi_cap));
    if (stats) {
        stats->assertions_checked += 2;
        stats->max_arch_degree_seen = std::max(stats->max_arch_degree_seen, after);
    }
    return after;
}

ColouringResult colour(std::shared_ptr<const IntervalSystem> sys,
                       const SolveOptions& opts) {
    if (!sys) throw PreconditionViolated("colour needs a system");
    const IntervalSystem& s = *sys;
    ColouringResult out;
    out.stats.omega = omega(s).omega;

    if (out.stats.omega <= 1) {
        // Nothing overlaps: one colour does (none on an empty system).
        out.colours.assign(s.size(), 1);
        out.chi_used = s.size() > 0 ? 1 : 0;
        out.complete = true;
        out.stats.colours_used = out.chi_used;
        out.stats.bound = out.stats.omega;
        return out;
    }

    const int w = out.stats.omega;
    const int bound = colour_bound(w);
    const int degree_cap = intermediate_degree_cap(w);
    out.stats.bound = bound;

    PillarState state{sys};
    const Rank top = s.max_rank();
    // Left ranks of uncoloured intervals are only ever consumed, never
    // created, so one monotone cursor finds the leftmost across the run.
    Rank cursor = 1;
    while (true) {
        while (cursor <= top && !(s.is_left_end(cursor) &&
                                  state.colour_of(s.owner(cursor)) == 0))
            ++cursor;
        if (cursor > top) break;

        const GapInterval k = state.arch_around(cursor);
        const SweepResult sweep = sweep_pillars(state, k, w, &out.stats);
        const int arch_degree =
            extend_divide_conquer(state, k, sweep.combined(), w, &out.stats);
        ++out.stats.iteration_count;

        if (arch_degree > degree_cap)
            throw InvariantViolation(
                "arch degree " + std::to_string(arch_degree) + " above the cap " +
                std::to_string(degree_cap) + " after extending " +
                stretch_str(k.lo, k.hi));
        if (state.chi_used() > bound)
            throw InvariantViolation(
                "colour count " + std::to_string(state.chi_used()) +
                " above the bound " + std::to_string(bound) + " after extending " +
                stretch_str(k.lo, k.hi));
        out.stats.assertions_checked += 2;

        if (opts.paranoid) {
            const AssignmentReport report = verify_assignment(state);
            if (!report.ok()) {
                std::string msg = "assignment structure broken:";
                for (const std::string& v : report.violations) msg += "\n  " + v;
                throw InvariantViolation(msg);
            }
            for (const GapInterval& arch : state.arches()) {
                const int d = state.degree(arch);
                out.stats.max_arch_degree_seen =
                    std::max(out.stats.max_arch_degree_seen, d);
                if (d > degree_cap)
                    throw InvariantViolation(
                        "arch " + stretch_str(arch.lo, arch.hi) + " reached degree " +
                        std::to_string(d) + ", above the cap " +
                        std::to_string(degree_cap));
            }
            out.stats.assertions_checked += 2;
        }
    }

    if (!state.is_complete())
        throw InvariantViolation("main loop finished with uncoloured intervals");

    // Independent properness pass; the pillar bookkeeping is not trusted here.
    const ColouringCheck check = verify_colouring(s, state.colours());
    if (!check.ok()) {
        std::string msg = "emitted colouring failed re-verification:";
        for (const std::string& v : check.violations) msg += "\n  " + v;
        throw InvariantViolation(msg);
    }

    out.colours = state.colours();
    out.chi_used = state.chi_used();
    out.complete = true;
    for (const Pillar& p : state.pillars()) out.pillar_order.push_back(p.gap);
    out.colour_sets = state.colour_sets();
    out.stats.colours_used = out.chi_used;
    out.stats.pillar_count = state.pillar_count();
    out.state.emplace(std::move(state));
    return out;
}

}  // namespace circlepaint
