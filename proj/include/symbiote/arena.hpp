#pragma once

#include <algorithm>
#include <cstdint>
#include <string_view>

#include "cell_state.hpp"
#include "genome.hpp"
#include "grid.hpp"

namespace symbiote {

struct ArenaConfig {
  std::int64_t time_limit_floor = 1000;
  std::int64_t time_limit_slope = 20;
  std::int64_t extent = Grid::kDefaultExtent;
};

enum class Winner : std::uint8_t { RedWins, BlueWins, Tie };

constexpr std::string_view to_string(Winner w) noexcept {
  switch (w) {
    case Winner::RedWins: return "red";
    case Winner::BlueWins: return "blue";
    case Winner::Tie: return "tie";
  }
  return "?";
}

struct GameOutcome {
  std::int64_t growth_red = 0;
  std::int64_t growth_blue = 0;
  Winner winner = Winner::Tie;
  std::int64_t steps_played = 0;

  /// Score for the red player: 1 for a win, 0.5 for a tie, 0 for a loss.
  double red_score() const noexcept {
    switch (winner) {
      case Winner::RedWins: return 1.0;
      case Winner::BlueWins: return 0.0;
      case Winner::Tie: return 0.5;
    }
    return 0.5;
  }

  friend bool operator==(const GameOutcome&, const GameOutcome&) = default;
};

/// Contest grid: `a` in Red on the left, `b` reflected left-right in Blue to
/// its right after a dead gap of max(width) columns, both centred vertically.
/// Borders stay Purple. place_contest(b, a) is the mirror image of
/// place_contest(a, b) with colours exchanged.
inline Grid place_contest(const Genome& a, const Genome& b,
                          std::int64_t extent = Grid::kDefaultExtent) {
  Grid g(extent);
  const int gap = std::max(a.width(), b.width());
  const int height = std::max(a.height(), b.height());
  a.paint(g, 0, (height - a.height()) / 2, CellState::Red);
  b.mirrored().paint(g, a.width() + gap, (height - b.height()) / 2, CellState::Blue);
  return g;
}

/// Number of steps a contest runs: max(floor, slope * (live_a + live_b)).
inline std::int64_t time_limit(const Genome& a, const Genome& b, const ArenaConfig& config = {}) {
  return std::max(config.time_limit_floor,
                  config.time_limit_slope * (a.live_count() + b.live_count()));
}

/// One Immigration Game with `a` playing Red and `b` playing Blue.
inline GameOutcome play(const Genome& a, const Genome& b, const ArenaConfig& config = {}) {
  Grid g = place_contest(a, b, config.extent);
  const ColourCensus initial = g.census();
  const std::int64_t steps = time_limit(a, b, config);
  g.advance(Ruleset::Immigration, static_cast<std::uint64_t>(steps));
  const ColourCensus final_census = g.census();
  GameOutcome out;
  out.growth_red = final_census.red - initial.red;
  out.growth_blue = final_census.blue - initial.blue;
  out.steps_played = steps;
  out.winner = out.growth_red > out.growth_blue   ? Winner::RedWins
               : out.growth_red < out.growth_blue ? Winner::BlueWins
                                                  : Winner::Tie;
  return out;
}

}  // namespace symbiote
