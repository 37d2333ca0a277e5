#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <vector>

#include "circlepaint/core.hpp"
#include "circlepaint/dominance.hpp"
#include "circlepaint/errors.hpp"
#include "circlepaint/oracle.hpp"
#include "circlepaint/prng.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace circlepaint;

namespace {

// Exhaustive maximum pairwise-overlapping subset, for cross-checking omega.
int brute_omega(const IntervalSystem& sys) {
    const int m = sys.size();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        bool ok = true;
        int size = 0;
        for (int i = 0; i < m && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            ++size;
            for (int j = i + 1; j < m && ok; ++j)
                if ((mask >> j & 1) && !overlaps(sys[i], sys[j])) ok = false;
        }
        if (ok) best = std::max(best, size);
    }
    return best;
}

// Exhaustive longest dominance chain over at most ~20 points.
int brute_chain(const std::vector<GridPoint>& pts) {
    int best = 0;
    const int k = static_cast<int>(pts.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<GridPoint> sel;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) sel.push_back(pts[static_cast<size_t>(i)]);
        std::sort(sel.begin(), sel.end(),
                  [](auto a, auto b) { return a.x < b.x; });
        bool chain = true;
        for (size_t i = 1; i < sel.size() && chain; ++i)
            chain = sel[i - 1].x < sel[i].x && sel[i - 1].y < sel[i].y;
        if (chain) best = std::max(best, static_cast<int>(sel.size()));
    }
    return best;
}

}  // namespace

TEST_CASE("heights at a common gap") {
    auto sys = fixtures::demo5();
    const auto entries = heights_at_point(*sys, 5);
    REQUIRE(entries.size() == 5);
    for (const auto& e : entries)
        CHECK(e.height ==
              fixtures::demo5_heights_at_gap5().at((*sys)[e.interval].id));
    CHECK(omega_at_point(*sys, 5) == 3);

    auto sys11 = fixtures::demo11();
    const std::map<std::string, int> expected{{"I6", 1}, {"I7", 1}, {"I8", 2}};
    const auto at13 = heights_at_point(*sys11, 13);
    REQUIRE(at13.size() == 3);
    for (const auto& e : at13)
        CHECK(e.height == expected.at((*sys11)[e.interval].id));
}

TEST_CASE("heights at an empty or single-member gap") {
    const IntervalSystem sys({{"a", 1, 2}, {"b", 3, 4}});
    CHECK(heights_at_point(sys, 2).empty());
    CHECK(omega_at_point(sys, 2) == 0);
    const auto single = heights_at_point(sys, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].height == 1);
}

TEST_CASE("clique number with witness") {
    auto sys = fixtures::demo5();
    const CliqueResult r = omega(*sys);
    CHECK(r.omega == fixtures::demo5_omega);
    REQUIRE(r.witness.size() == 3);
    std::vector<std::string> ids;
    for (int idx : r.witness) ids.push_back((*sys)[idx].id);
    std::sort(ids.begin(), ids.end());
    CHECK(ids == std::vector<std::string>{"A", "C", "E"});

    CHECK(omega(*fixtures::demo11()).omega == fixtures::demo11_omega);

    const IntervalSystem disjoint({{"a", 1, 2}, {"b", 3, 4}, {"c", 5, 6}});
    CHECK(omega(disjoint).omega == 1);
    CHECK(omega(IntervalSystem()).omega == 0);
}

TEST_CASE("omega matches brute force on random systems") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = 1 + static_cast<int>(rng.below(10));
        const IntervalSystem sys = random_system(m, rng.next());
        const CliqueResult r = omega(sys);
        REQUIRE(r.omega == brute_omega(sys));
        REQUIRE(static_cast<int>(r.witness.size()) == r.omega);
        for (size_t i = 0; i < r.witness.size(); ++i)
            for (size_t j = i + 1; j < r.witness.size(); ++j)
                REQUIRE(overlaps(sys[r.witness[i]], sys[r.witness[j]]));
    }
}

TEST_CASE("longest 2d chain") {
    CHECK(longest_chain_2d({{1, 1}, {2, 2}, {3, 3}}).length == 3);
    CHECK(longest_chain_2d({{1, 3}, {2, 2}, {3, 1}}).length == 1);
    CHECK(longest_chain_2d({}).length == 0);

    // 12-point set: [4]x[4] restricted to x<=2 or y<=2. A third chain point
    // would need x >= 3 and y >= 3, which the restriction excludes.
    std::vector<GridPoint> pts;
    for (int x = 1; x <= 4; ++x)
        for (int y = 1; y <= 4; ++y)
            if (x <= 2 || y <= 2) pts.push_back({x, y});
    REQUIRE(pts.size() == 12);
    const ChainResult r = longest_chain_2d(pts);
    CHECK(r.length == 2);
    REQUIRE(static_cast<int>(r.chain.size()) == r.length);
    for (size_t i = 1; i < r.chain.size(); ++i) {
        CHECK(r.chain[i - 1].x < r.chain[i].x);
        CHECK(r.chain[i - 1].y < r.chain[i].y);
    }
}

TEST_CASE("longest chain matches exhaustive search on random point sets") {
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<GridPoint> pts;
        const int k = static_cast<int>(rng.below(13));
        for (int i = 0; i < k; ++i)
            pts.push_back({1 + static_cast<int>(rng.below(8)),
                           1 + static_cast<int>(rng.below(8))});
        REQUIRE(longest_chain_2d(pts).length == brute_chain(pts));
    }
}

TEST_CASE("grid antichain formula matches exhaustive search") {
    CHECK(grid_max_antichain(3, 4) == 6);
    CHECK(grid_max_antichain(1, 1) == 1);
    CHECK(grid_max_antichain(2, 5) == 6);
    CHECK_THROWS_AS(grid_max_antichain(0, 3), PreconditionViolated);
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b)
            REQUIRE(grid_max_antichain(a, b, true) == a + b - 1);
}

TEST_CASE("chain-bounded set size checker") {
    // extremal family {x <= n or y <= n} meets the bound with equality
    for (int n = 1; n <= 5; ++n) {
        const int a = 5, b = 5;
        std::vector<GridPoint> s;
        for (int x = 1; x <= a; ++x)
            for (int y = 1; y <= b; ++y)
                if (x <= n || y <= n) s.push_back({x, y});
        CHECK(static_cast<long long>(s.size()) ==
              static_cast<long long>(n) * (a + b - n));
        CHECK(check_chain_bounded_set_size(s, a, b, n));
    }

    // full [n]x[n] grid: chain length n, size n^2 = n(n+n-n)
    std::vector<GridPoint> grid;
    for (int x = 1; x <= 4; ++x)
        for (int y = 1; y <= 4; ++y) grid.push_back({x, y});
    CHECK(check_chain_bounded_set_size(grid, 4, 4, 4));

    // malformed inputs
    CHECK_THROWS_AS(check_chain_bounded_set_size({{1, 1}, {2, 2}}, 3, 3, 1),
                    PreconditionViolated);  // chain longer than n
    CHECK_THROWS_AS(check_chain_bounded_set_size({{1, 1}, {1, 1}}, 3, 3, 2),
                    PreconditionViolated);  // duplicate point
    CHECK_THROWS_AS(check_chain_bounded_set_size({{4, 1}}, 3, 3, 2),
                    PreconditionViolated);  // outside the grid
    CHECK_THROWS_AS(check_chain_bounded_set_size({}, 3, 3, 0),
                    PreconditionViolated);  // n out of range
}
