#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <numeric>
#include <vector>

#include "circlepaint/dominance.hpp"
#include "circlepaint/errors.hpp"
#include "circlepaint/oracle.hpp"
#include "circlepaint/prng.hpp"
#include "circlepaint/solver.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace circlepaint;

namespace {

int ceil_log2(int x) {
    return x <= 1 ? 0 : static_cast<int>(std::bit_width(
                            static_cast<unsigned>(x) - 1));
}

// A partially coloured random state with at least one pillar, plus the list
// of arches that still hold an uncoloured interval entirely inside.
struct Scenario {
    std::shared_ptr<const IntervalSystem> sys;
    PillarState state;
    std::vector<GapInterval> open_arches;
};

Scenario random_scenario(SplitMix64& rng, int max_m) {
    const int m = 2 + static_cast<int>(rng.below(static_cast<size_t>(max_m - 1)));
    auto sys = std::make_shared<const IntervalSystem>(random_system(m, rng.next()));
    PillarState state(sys);
    const size_t pillar_count = 1 + rng.below(5);
    for (size_t k = 0; k < pillar_count; ++k) {
        const auto g = static_cast<GapPosition>(rng.below(
            static_cast<size_t>(2 * m + 1)));
        if (!state.has_pillar_at(g)) state.append(g);
    }
    Scenario sc{sys, state, {}};
    for (const GapInterval& arch : sc.state.arches()) {
        for (int i = 0; i < m; ++i) {
            if (sc.state.colour_of(i) != 0) continue;
            if (arch.lo < (*sys)[i].left && (*sys)[i].right <= arch.hi) {
                sc.open_arches.push_back(arch);
                break;
            }
        }
    }
    return sc;
}

}  // namespace

TEST_CASE("colour budget and intermediate cap formulas") {
    CHECK(colour_bound(2) == 24);
    CHECK(colour_bound(3) == 44);
    CHECK(colour_bound(4) == 64);
    CHECK(intermediate_degree_cap(2) == 14);
    CHECK(intermediate_degree_cap(4) == 36);
    CHECK_THROWS_AS(colour_bound(1), OmegaTooSmall);
    CHECK_THROWS_AS(colour_bound(0), OmegaTooSmall);
    CHECK_THROWS_AS(intermediate_degree_cap(1), OmegaTooSmall);
    // monotone over the range any desk-scale instance can reach
    for (int w = 2; w < 200; ++w) {
        CHECK(colour_bound(w) < colour_bound(w + 1));
        CHECK(intermediate_degree_cap(w) <= colour_bound(w));
    }
}

TEST_CASE("sweep: block partition and target placement") {
    SplitMix64 rng(90210);
    int swept = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Scenario sc = random_scenario(rng, 200);
        const int w = std::max(2, omega(*sc.sys).omega);
        const int two_w = 2 * w;
        for (const GapInterval& k : sc.open_arches) {
            const SweepResult res = sweep_pillars(sc.state, k, w);
            ++swept;

            // target is the left rank, as a gap, of the first uncoloured
            // interval whose left end lies inside k
            GapPosition expected_target = -1;
            for (Rank e = k.lo + 1; e <= k.hi && expected_target < 0; ++e) {
                const int idx = sc.sys->owner(e);
                if (sc.state.colour_of(idx) == 0 && (*sc.sys)[idx].left == e)
                    expected_target = e;
            }
            REQUIRE(expected_target >= 0);
            CHECK(res.target == expected_target);

            // boundaries strictly inside, strictly increasing
            GapPosition prev = k.lo;
            for (const GapPosition q : res.blocks) {
                CHECK(k.lo < q);
                CHECK(q < k.hi);
                CHECK(prev < q);
                // the guard held when q was placed...
                CHECK(sc.state.degree({prev, k.hi}) > two_w);
                // ...and the block it closes holds exactly 2w fresh colours
                CHECK(sc.state.degree({prev, q}) == two_w);
                prev = q;
            }
            // the scan stopped because the leftover stretch is light
            CHECK(sc.state.degree({prev, k.hi}) <= two_w);

            // combined() = sorted blocks plus the target, deduplicated
            std::vector<GapPosition> expect = res.blocks;
            expect.push_back(res.target);
            std::sort(expect.begin(), expect.end());
            expect.erase(std::unique(expect.begin(), expect.end()),
                         expect.end());
            CHECK(res.combined() == expect);
        }
    }
    CHECK(swept > 100);  // the generator must actually exercise the sweep
}

TEST_CASE("sweep: arch without uncoloured intervals is an error") {
    auto sys = fixtures::demo11();
    const PillarState state = build_colouring(sys, fixtures::demo11_pillar_gaps());
    CHECK_THROWS_AS(sweep_pillars(state, {7, 13}, 3),
                    NoUncolouredIntervalInArch);
}

TEST_CASE("extend: growth inequalities and return value") {
    SplitMix64 rng(5150);
    for (int trial = 0; trial < 500; ++trial) {
        Scenario sc = random_scenario(rng, 40);
        if (sc.open_arches.empty()) continue;
        const GapInterval k =
            sc.open_arches[rng.below(sc.open_arches.size())];
        const int w = std::max(2, omega(*sc.sys).omega);

        // random set of distinct gaps strictly inside k
        std::vector<GapPosition> pool;
        for (GapPosition g = k.lo + 1; g < k.hi; ++g) pool.push_back(g);
        for (size_t i = pool.size(); i > 1; --i)
            std::swap(pool[i - 1], pool[rng.below(i)]);
        const size_t take = rng.below(std::min<size_t>(pool.size(), 7) + 1);
        std::vector<GapPosition> q(pool.begin(), pool.begin() + take);
        std::sort(q.begin(), q.end());

        // segment degrees before, using an untouched copy
        const int dk = sc.state.degree(k);
        const int chi_before = sc.state.chi_used();
        int t = 0;
        {
            GapPosition prev = k.lo;
            for (size_t i = 0; i <= q.size(); ++i) {
                const GapPosition next = (i == q.size()) ? k.hi : q[i];
                if (prev < next)
                    t = std::max(t, sc.state.degree({prev, next}));
                prev = next;
            }
        }

        const int after = extend_divide_conquer(sc.state, k, q, w);

        const int growth = w * ceil_log2(static_cast<int>(q.size()) + 1);
        CHECK(after <= t + growth);
        CHECK(sc.state.chi_used() <=
              std::max(chi_before, dk + growth));
        for (const GapPosition g : q) CHECK(sc.state.has_pillar_at(g));

        // returned value is the max degree over the segments of k
        int recomputed = 0;
        GapPosition prev = k.lo;
        for (size_t i = 0; i <= q.size(); ++i) {
            const GapPosition next = (i == q.size()) ? k.hi : q[i];
            if (prev < next)
                recomputed = std::max(recomputed, sc.state.degree({prev, next}));
            prev = next;
        }
        CHECK(after == recomputed);
        CHECK(verify_assignment(sc.state).ok());
    }
}

TEST_CASE("extend: argument validation") {
    auto sys = fixtures::demo11();
    {
        PillarState state = build_colouring(sys, {4, 21});
        // (4,21) is an arch of this state
        CHECK_THROWS_AS(extend_divide_conquer(state, {4, 21}, {3}, 3),
                        GapOutsideArch);
        CHECK_THROWS_AS(extend_divide_conquer(state, {4, 21}, {4}, 3),
                        GapOutsideArch);
        CHECK_THROWS_AS(extend_divide_conquer(state, {4, 21}, {21}, 3),
                        GapOutsideArch);
        CHECK_THROWS_AS(extend_divide_conquer(state, {4, 21}, {9, 7}, 3),
                        PreconditionViolated);
        CHECK_THROWS_AS(extend_divide_conquer(state, {4, 21}, {9, 9}, 3),
                        PreconditionViolated);
    }
    {
        PillarState state = build_colouring(sys, {4, 21});
        const int d = state.degree({4, 21});
        CHECK(extend_divide_conquer(state, {4, 21}, {}, 3) == d);
        CHECK(state.pillar_count() == 2);  // no-op
    }
}

TEST_CASE("solver: staircase systems take exactly their clique number") {
    for (int k = 1; k <= 8; ++k) {
        std::vector<Interval> raw;
        for (int i = 1; i <= k; ++i)
            raw.push_back({"s" + std::to_string(i), i, k + i});
        auto sys = std::make_shared<const IntervalSystem>(std::move(raw));
        const ColouringResult res = colour(sys);
        CHECK(res.complete);
        CHECK(res.chi_used == k);
        CHECK(verify_colouring(*sys, res.colours).ok());
        CHECK(res.stats.omega == k);
    }
}

TEST_CASE("solver: one-colour fast paths") {
    {
        const ColouringResult res = colour(std::make_shared<const IntervalSystem>());
        CHECK(res.complete);
        CHECK(res.chi_used == 0);
        CHECK(res.colours.empty());
        CHECK(res.pillar_order.empty());
        CHECK(res.stats.bound == 0);
    }
    {
        // nested and disjoint only: clique number 1
        auto sys = std::make_shared<const IntervalSystem>(
            canonicalize({{"outer", 0, 10}, {"inner", 1, 2}, {"right", 11, 12}}));
        const ColouringResult res = colour(sys);
        CHECK(res.complete);
        CHECK(res.chi_used == 1);
        CHECK(res.colours == std::vector<int>{1, 1, 1});
        CHECK(res.stats.omega == 1);
        CHECK(res.stats.bound == 1);
        CHECK_FALSE(res.state.has_value());
        CHECK(verify_colouring(*sys, res.colours).ok());
    }
}

TEST_CASE("solver: worked example stays within its budget") {
    auto sys = fixtures::demo11();
    const ColouringResult res = colour(sys);
    CHECK(res.complete);
    CHECK(verify_colouring(*sys, res.colours).ok());
    CHECK(res.stats.omega == 3);
    CHECK(res.chi_used <= colour_bound(3));
    CHECK(res.stats.pillar_count ==
          static_cast<int>(res.pillar_order.size()));
    CHECK(res.stats.colours_used == res.chi_used);
    REQUIRE(res.state.has_value());
    CHECK(verify_assignment(*res.state).ok());
}

TEST_CASE("solver: random systems, verified, within bound") {
    SplitMix64 rng(1234);
    for (int trial = 0; trial < 120; ++trial) {
        const int m = 1 + static_cast<int>(rng.below(60));
        auto sys = std::make_shared<const IntervalSystem>(
            random_system(m, rng.next()));
        const ColouringResult res =
            colour(sys, SolveOptions{.paranoid = trial % 4 == 0});
        REQUIRE(res.complete);
        REQUIRE(verify_colouring(*sys, res.colours).ok());
        const int w = res.stats.omega;
        REQUIRE(w == omega(*sys).omega);
        if (w >= 2) {
            REQUIRE(res.chi_used <= colour_bound(w));
            REQUIRE(res.stats.max_arch_degree_seen <=
                    intermediate_degree_cap(w));
        } else {
            REQUIRE(res.chi_used <= 1);
        }
    }
}

TEST_CASE("solver: deterministic output") {
    auto sys = std::make_shared<const IntervalSystem>(random_system(500, 99));
    const ColouringResult a = colour(sys);
    const ColouringResult b = colour(sys);
    CHECK(a.colours == b.colours);
    CHECK(a.pillar_order == b.pillar_order);
    CHECK(a.colour_sets == b.colour_sets);
    CHECK(a.chi_used == b.chi_used);
}
