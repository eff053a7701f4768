#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symbiote {

/// The six cell states shared by the three games. Only Red, Blue, Orange and
/// Green are alive; White is the background and Purple marks part borders at t = 0.
enum class CellState : std::uint8_t {
  White = 0,
  Red = 1,
  Blue = 2,
  Orange = 3,
  Green = 4,
  Purple = 5,
};

constexpr bool is_alive(CellState s) noexcept {
  return s == CellState::Red || s == CellState::Blue || s == CellState::Orange ||
         s == CellState::Green;
}

constexpr std::string_view to_string(CellState s) noexcept {
  switch (s) {
    case CellState::White: return "white";
    case CellState::Red: return "red";
    case CellState::Blue: return "blue";
    case CellState::Orange: return "orange";
    case CellState::Green: return "green";
    case CellState::Purple: return "purple";
  }
  return "?";
}

enum class Ruleset : std::uint8_t { Life, Immigration, Management };

constexpr std::string_view to_string(Ruleset r) noexcept {
  switch (r) {
    case Ruleset::Life: return "life";
    case Ruleset::Immigration: return "immigration";
    case Ruleset::Management: return "management";
  }
  return "?";
}

inline Ruleset ruleset_from_string(std::string_view name) {
  if (name == "life") return Ruleset::Life;
  if (name == "immigration") return Ruleset::Immigration;
  if (name == "management") return Ruleset::Management;
  throw std::invalid_argument("unknown ruleset '" + std::string(name) + "'");
}

/// Live-cell counts per colour.
struct ColourCensus {
  std::int64_t red = 0;
  std::int64_t blue = 0;
  std::int64_t orange = 0;
  std::int64_t green = 0;

  constexpr std::int64_t total() const noexcept { return red + blue + orange + green; }

  constexpr std::int64_t operator[](CellState s) const noexcept {
    switch (s) {
      case CellState::Red: return red;
      case CellState::Blue: return blue;
      case CellState::Orange: return orange;
      case CellState::Green: return green;
      default: return 0;
    }
  }

  constexpr void add(CellState s, std::int64_t n = 1) noexcept {
    switch (s) {
      case CellState::Red: red += n; break;
      case CellState::Blue: blue += n; break;
      case CellState::Orange: orange += n; break;
      case CellState::Green: green += n; break;
      default: break;
    }
  }

  friend constexpr ColourCensus operator-(const ColourCensus& a, const ColourCensus& b) noexcept {
    return {a.red - b.red, a.blue - b.blue, a.orange - b.orange, a.green - b.green};
  }
  friend constexpr bool operator==(const ColourCensus&, const ColourCensus&) = default;
};

/// Colour of a cell born from exactly three live neighbours.
///
/// Life always yields Red (the canonical live colour). Immigration takes the
/// majority of red-class against blue-class neighbours. Management yields Red or
/// Blue only for three pure parents of that colour, otherwise Orange when the
/// red/orange class holds the majority and Green when blue/green does.
inline CellState birth_colour(const ColourCensus& neighbours, Ruleset ruleset) {
  if (neighbours.total() != 3 || neighbours.red < 0 || neighbours.blue < 0 ||
      neighbours.orange < 0 || neighbours.green < 0) {
    throw std::invalid_argument("birth_colour needs exactly three live neighbours");
  }
  const bool red_majority = neighbours.red + neighbours.orange >= 2;
  switch (ruleset) {
    case Ruleset::Life:
      return CellState::Red;
    case Ruleset::Immigration:
      return red_majority ? CellState::Red : CellState::Blue;
    case Ruleset::Management:
      if (neighbours.red == 3) return CellState::Red;
      if (neighbours.blue == 3) return CellState::Blue;
      return red_majority ? CellState::Orange : CellState::Green;
  }
  return CellState::Red;
}

}  // namespace symbiote
