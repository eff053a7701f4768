#pragma once

// Naive map-based simulator used as a test oracle for the tiled engine.
// It shares no code with symbiote::Grid beyond the state enumeration.

#include <cstdint>
#include <array>
#include <map>
#include <utility>

#include "symbiote/cell_state.hpp"

namespace symbiote::ref {

using ReferenceGrid = std::map<std::pair<std::int64_t, std::int64_t>, int>;  // (y, x) -> state 1..4

inline int reference_birth(int red, int blue, int orange, int green, Ruleset ruleset) {
  // Table-driven reading of the birth rules, one row at a time.
  if (ruleset == Ruleset::Life) return 1;
  if (ruleset == Ruleset::Immigration) return (red + orange > blue + green) ? 1 : 2;
  if (red == 3) return 1;
  if (blue == 3) return 2;
  if (red + orange == 2 || red + orange == 3) return 3;
  return 4;
}

inline ReferenceGrid reference_step(const ReferenceGrid& g, Ruleset ruleset) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::array<int, 5>> counts;
  for (const auto& [pos, state] : g) {
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) continue;
        auto& c = counts[{pos.first + dy, pos.second + dx}];
        c[0] += 1;
        c[state] += 1;
      }
    }
  }
  ReferenceGrid out;
  for (const auto& [pos, c] : counts) {
    auto it = g.find(pos);
    if (it != g.end()) {
      if (c[0] == 2 || c[0] == 3) out[pos] = it->second;
    } else if (c[0] == 3) {
      out[pos] = reference_birth(c[1], c[2], c[3], c[4], ruleset);
    }
  }
  // Live cells with no live neighbours never appear in `counts` and die anyway.
  return out;
}

inline ReferenceGrid reference_run(ReferenceGrid g, int steps, Ruleset ruleset) {
  for (int i = 0; i < steps; ++i) g = reference_step(g, ruleset);
  return g;
}

}  // namespace symbiote::ref
