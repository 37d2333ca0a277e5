#pragma once

#include <string>
#include <vector>

#include "circlepaint/core.hpp"
#include "circlepaint/lowerbound.hpp"
#include "circlepaint/solver.hpp"

// JSON round-tripping for every format the CLI speaks. Malformed documents
// throw InvalidInput with the parser's complaint in the message.

namespace circlepaint {

// {"intervals": [{"id": string, "left": number, "right": number}, ...]}
// Raw coordinates are fine: the loader canonicalizes into ranks. The saver
// writes the ranks themselves (re-loading reproduces the same system).
IntervalSystem load_system_json(const std::string& text);
std::string save_system_json(const IntervalSystem& sys);

// {"n": int, "chords": [{"a": "p3", "b": "q5", "mult": 2}, ...]}
// with "mult" optional on load (default 1).
ChordDiagram load_diagram_json(const std::string& text);
std::string save_diagram_json(const ChordDiagram& d);

// {"colors": {id: int}, "colour_sets": [{"gap": int, "colors": [int]}],
//  "pillar_order": [int], "chi_used": int, "complete": bool}
// plus "stats" (snake_case SolveStats fields) when one is given.
std::string colouring_json(const IntervalSystem& sys,
                           const std::vector<int>& colours,
                           const std::vector<GapPosition>& pillar_order,
                           const std::vector<std::vector<int>>& colour_sets,
                           int chi_used, bool complete,
                           const SolveStats* stats = nullptr);
std::string colouring_json(const IntervalSystem& sys,
                           const ColouringResult& result, bool with_stats);

// Reads a colour map back against a known system: accepts either the
// colouring document above or a bare {id: int} object. Ids missing from the
// document come back as 0 (uncoloured); ids unknown to the system throw
// InvalidInput.
std::vector<int> load_colours_json(const IntervalSystem& sys,
                                   const std::string& text);

// LowerBoundReport, field for field; chi_lower as {"num": int, "den": int}.
std::string report_json(const LowerBoundReport& rep);

}  // namespace circlepaint
