#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "circlepaint/core.hpp"

// Two hand-traceable interval systems shared across the test binaries,
// together with the values a correct implementation must reproduce on them.
// Every number below was worked out by hand from the rank/gap conventions;
// tests treat them as frozen expectations, not as things to recompute.

namespace fixtures {

// --- demo5: five mutually interleaved intervals -----------------------------
//
// Raw coordinates (ranks in brackets):
//   A (-5, 2)   -> (1, 7)
//   B (-4, 4)   -> (2, 9)
//   C (-3, 3)   -> (3, 8)
//   D (-2, 1)   -> (4, 6)
//   E (-1, 5)   -> (5, 10)
// All five contain gap 5; their dominance heights there are
// A:1 B:2 C:2 D:1 E:3, so omega = 3 and the overlap graph has 6 edges.

inline std::vector<circlepaint::RawInterval> demo5_raw() {
    return {{"A", -5, 2}, {"B", -4, 4}, {"C", -3, 3}, {"D", -2, 1},
            {"E", -1, 5}};
}

inline std::shared_ptr<const circlepaint::IntervalSystem> demo5() {
    return std::make_shared<const circlepaint::IntervalSystem>(
        circlepaint::canonicalize(demo5_raw()));
}

inline const std::map<std::string, int>& demo5_heights_at_gap5() {
    static const std::map<std::string, int> h{
        {"A", 1}, {"B", 2}, {"C", 2}, {"D", 1}, {"E", 3}};
    return h;
}

// Colouring demo5's gap-5 members from the set {1, 2, 3} assigns each
// interval the colour at its height.
inline const std::map<std::string, int>& demo5_colours_from_123() {
    return demo5_heights_at_gap5();
}

inline constexpr int demo5_omega = 3;
inline constexpr int demo5_edges = 6;

// --- demo11: eleven intervals, full pillar construction ----------------------
//
// Raw coordinates (ranks in brackets):
//   I1  (-7.00, -1.00) -> ( 1,  9)     I7  ( 0.50, 2.25) -> (12, 14)
//   I2  (-6.25, -3.50) -> ( 2,  5)     I8  ( 1.25, 4.00) -> (13, 17)
//   I3  (-5.50, -2.50) -> ( 3,  7)     I9  ( 2.75, 4.75) -> (15, 18)
//   I4  (-4.75, -1.50) -> ( 4,  8)     I10 ( 3.50, 5.25) -> (16, 19)
//   I5  (-3.00,  0.00) -> ( 6, 11)     I11 ( 5.75, 7.00) -> (20, 22)
//   I6  (-0.50,  6.25) -> (10, 21)
//
// Appending pillars at gaps 4, 21, 7, 13, 17 (in that order) colours the
// whole system with 6 colours; the per-pillar traces are frozen below.

inline std::vector<circlepaint::RawInterval> demo11_raw() {
    return {{"I1", -7.0, -1.0},  {"I2", -6.25, -3.5}, {"I3", -5.5, -2.5},
            {"I4", -4.75, -1.5}, {"I5", -3.0, 0.0},   {"I6", -0.5, 6.25},
            {"I7", 0.5, 2.25},   {"I8", 1.25, 4.0},   {"I9", 2.75, 4.75},
            {"I10", 3.5, 5.25},  {"I11", 5.75, 7.0}};
}

inline std::shared_ptr<const circlepaint::IntervalSystem> demo11() {
    return std::make_shared<const circlepaint::IntervalSystem>(
        circlepaint::canonicalize(demo11_raw()));
}

inline constexpr int demo11_omega = 3;
inline constexpr int demo11_chi = 3;  // exact chromatic number, found by hand

inline std::vector<circlepaint::GapPosition> demo11_pillar_gaps() {
    return {4, 21, 7, 13, 17};
}

// Colour set handed out at each pillar, in append order.
inline std::vector<std::vector<int>> demo11_colour_sets() {
    return {{1, 2, 3}, {4}, {5}, {2, 6}, {1, 3}};
}

inline const std::map<std::string, int>& demo11_colours() {
    static const std::map<std::string, int> psi{
        {"I1", 1}, {"I2", 1}, {"I3", 2}, {"I4", 3},  {"I5", 5}, {"I6", 2},
        {"I7", 2}, {"I8", 6}, {"I9", 1}, {"I10", 3}, {"I11", 4}};
    return psi;
}

inline constexpr int demo11_chi_used = 6;

// Arches once all five pillars stand, left to right.
inline std::vector<std::pair<int, int>> demo11_arches() {
    return {{0, 4}, {4, 7}, {7, 13}, {13, 17}, {17, 21}, {21, 22}};
}

// Foundations of the 4th and 5th pillars (gaps 13 and 17).
inline constexpr std::pair<int, int> demo11_foundation_13{7, 21};
inline constexpr std::pair<int, int> demo11_foundation_17{13, 21};

// Stretch degrees in the finished state.
inline constexpr int demo11_degree_7_13 = 5;
inline constexpr int demo11_degree_21_22 = 1;

}  // namespace fixtures
