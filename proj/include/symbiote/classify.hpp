#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cell_state.hpp"
#include "genome.hpp"
#include "grid.hpp"
#include "parallel.hpp"

namespace symbiote {

inline constexpr std::uint64_t kAnalysisSteps = 1000;

enum class Role : std::uint8_t { Manager, Worker };
enum class Benefit : std::uint8_t { Insider, Outsider };
enum class Interaction : std::uint8_t { Ensemblist, Soloist };

constexpr std::string_view to_string(Role r) noexcept {
  return r == Role::Manager ? "manager" : "worker";
}
constexpr std::string_view to_string(Benefit b) noexcept {
  return b == Benefit::Insider ? "insider" : "outsider";
}
constexpr std::string_view to_string(Interaction i) noexcept {
  return i == Interaction::Ensemblist ? "ensemblist" : "soloist";
}

/// Focal part Red, every other part Blue, borders Purple: the t = 0 grid of
/// the Management run used to classify one part.
inline Grid recolour_focal(const Genome& symbiote, int part_index) {
  const PartRegion& focal = symbiote.part_at(part_index);
  Grid g;
  for (int y = 0; y < symbiote.height(); ++y) {
    for (int x = 0; x < symbiote.width(); ++x) {
      const CellState c = symbiote.at(x, y);
      if (c == CellState::Purple) {
        g.set(x, y, CellState::Purple);
      } else if (c == CellState::Red) {
        const bool inside = x >= focal.x_offset && x < focal.x_offset + focal.width &&
                            y >= focal.y_offset && y < focal.y_offset + focal.height;
        g.set(x, y, inside ? CellState::Red : CellState::Blue);
      }
    }
  }
  return g;
}

/// Weighted growth in thirds of a cell: 3 red + 0 blue + 2 orange + 1 green.
/// Integer-valued, so comparisons against whole-cell growth are exact.
constexpr std::int64_t weighted_growth_thirds(const ColourCensus& deltas) noexcept {
  return 3 * deltas.red + 2 * deltas.orange + deltas.green;
}

/// Growth credited to the focal colour: red 1, blue 0, orange 2/3, green 1/3.
constexpr double weighted_growth(const ColourCensus& initial, const ColourCensus& final_census) noexcept {
  return static_cast<double>(weighted_growth_thirds(final_census - initial)) / 3.0;
}

/// Manager iff orange strictly outnumbers green at the end of the run.
constexpr Role classify_role(const ColourCensus& final_census) noexcept {
  return final_census.orange > final_census.green ? Role::Manager : Role::Worker;
}

/// Insider iff the weighted inside growth strictly exceeds the growth alone.
constexpr Benefit classify_benefit(const ColourCensus& inside_deltas, std::int64_t growth_alone) noexcept {
  return weighted_growth_thirds(inside_deltas) > 3 * growth_alone ? Benefit::Insider
                                                                   : Benefit::Outsider;
}

/// Ensemblist iff orange plus green growth strictly exceeds red growth.
constexpr Interaction classify_interaction(const ColourCensus& inside_deltas) noexcept {
  return inside_deltas.orange + inside_deltas.green > inside_deltas.red ? Interaction::Ensemblist
                                                                        : Interaction::Soloist;
}

/// Live-cell change of a genome run alone under Life.
inline std::int64_t seed_growth(const Genome& genome, std::uint64_t steps = kAnalysisSteps) {
  Grid g = genome.to_grid();
  const std::int64_t before = g.live_count();
  g.advance(Ruleset::Life, steps);
  return g.live_count() - before;
}

inline std::int64_t solo_growth(const Genome& symbiote, int part_index,
                                std::uint64_t steps = kAnalysisSteps) {
  return seed_growth(symbiote.extract_part(part_index), steps);
}

struct PartClassification {
  int part_index = 0;
  Role role = Role::Worker;
  Benefit benefit = Benefit::Outsider;
  Interaction interaction = Interaction::Soloist;
  double growth_inside = 0.0;
  std::int64_t growth_alone = 0;
  ColourCensus colour_deltas;
  ColourCensus final_census;

  friend bool operator==(const PartClassification&, const PartClassification&) = default;
};

inline PartClassification classify_part(const Genome& symbiote, int part_index,
                                        std::uint64_t steps = kAnalysisSteps) {
  Grid g = recolour_focal(symbiote, part_index);
  const ColourCensus initial = g.census();
  g.advance(Ruleset::Management, steps);
  PartClassification out;
  out.part_index = part_index;
  out.final_census = g.census();
  out.colour_deltas = out.final_census - initial;
  out.growth_inside = weighted_growth(initial, out.final_census);
  out.growth_alone = solo_growth(symbiote, part_index, steps);
  out.role = classify_role(out.final_census);
  out.benefit = classify_benefit(out.colour_deltas, out.growth_alone);
  out.interaction = classify_interaction(out.colour_deltas);
  return out;
}

inline Role classify_role(const Genome& symbiote, int part_index,
                          std::uint64_t steps = kAnalysisSteps) {
  Grid g = recolour_focal(symbiote, part_index);
  g.advance(Ruleset::Management, steps);
  return classify_role(g.census());
}

inline Benefit classify_benefit(const Genome& symbiote, int part_index,
                                std::uint64_t steps = kAnalysisSteps) {
  return classify_part(symbiote, part_index, steps).benefit;
}

inline Interaction classify_interaction(const Genome& symbiote, int part_index,
                                        std::uint64_t steps = kAnalysisSteps) {
  Grid g = recolour_focal(symbiote, part_index);
  const ColourCensus initial = g.census();
  g.advance(Ruleset::Management, steps);
  return classify_interaction(g.census() - initial);
}

/// Per-part labels of one symbiote plus the category counts the tables use.
struct SeedClassification {
  std::vector<PartClassification> parts;

  int count(Role r) const noexcept { return count_if([r](const auto& p) { return p.role == r; }); }
  int count(Benefit b) const noexcept {
    return count_if([b](const auto& p) { return p.benefit == b; });
  }
  int count(Interaction i) const noexcept {
    return count_if([i](const auto& p) { return p.interaction == i; });
  }

 private:
  template <class Pred>
  int count_if(Pred pred) const noexcept {
    int n = 0;
    for (const PartClassification& p : parts) n += pred(p) ? 1 : 0;
    return n;
  }
};

inline SeedClassification classify_seed(const Genome& symbiote, std::uint64_t steps = kAnalysisSteps,
                                        unsigned workers = 1) {
  SeedClassification out;
  out.parts.resize(static_cast<std::size_t>(symbiote.part_count()));
  parallel_for(
      out.parts.size(),
      [&](std::size_t i) { out.parts[i] = classify_part(symbiote, static_cast<int>(i), steps); },
      workers);
  return out;
}

}  // namespace symbiote
