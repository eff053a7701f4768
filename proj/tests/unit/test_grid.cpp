#include <gtest/gtest.h>

#include <random>

#include "support/random_grids.hpp"
#include "support/reference_ca.hpp"
#include "symbiote/grid.hpp"

using namespace symbiote;
using symbiote::ref::random_soup;
using symbiote::ref::to_reference;

namespace {

Grid from_points(std::initializer_list<std::pair<int, int>> pts, CellState s = CellState::Red) {
  Grid g;
  for (auto [x, y] : pts) g.set(x, y, s);
  return g;
}

const std::initializer_list<std::pair<int, int>> kBlock{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
const std::initializer_list<std::pair<int, int>> kRPentomino{{1, 0}, {2, 0}, {0, 1}, {1, 1}, {1, 2}};

}  // namespace

TEST(Grid, BlockIsStillLife) {
  const Grid block = from_points(kBlock);
  EXPECT_EQ(step(block, Ruleset::Management), block);
}

TEST(Grid, BlinkerOscillates) {
  const Grid h = from_points({{0, 1}, {1, 1}, {2, 1}});
  const Grid v = from_points({{1, 0}, {1, 1}, {1, 2}});
  EXPECT_EQ(step(h, Ruleset::Life), v);
  EXPECT_EQ(step(v, Ruleset::Life), h);
  const Grid after = run(h, 1000, Ruleset::Life);
  EXPECT_EQ(after, h);
  EXPECT_EQ(census(after).total(), 3);
  EXPECT_EQ(after.time(), 1000u);
}

TEST(Grid, SingleCellDies) {
  EXPECT_TRUE(step(from_points({{7, -3}}), Ruleset::Immigration).empty());
}

TEST(Grid, EmptyStaysEmpty) {
  for (Ruleset r : {Ruleset::Life, Ruleset::Immigration, Ruleset::Management}) {
    EXPECT_TRUE(run(Grid{}, 1000, r).empty());
  }
}

TEST(Grid, RunZeroIsIdentity) {
  const Grid g = from_points(kRPentomino);
  EXPECT_EQ(run(g, 0, Ruleset::Life), g);
}

TEST(Grid, CensusCountsColours) {
  EXPECT_EQ(census(Grid{}), ColourCensus{});
  EXPECT_EQ(census(from_points(kBlock)), (ColourCensus{4, 0, 0, 0}));
  Grid g;
  g.set(0, 0, CellState::Blue);
  g.set(5, 5, CellState::Orange);
  g.set(-70, 9, CellState::Green);
  g.set(1, 1, CellState::Purple);
  EXPECT_EQ(census(g), (ColourCensus{0, 1, 1, 1}));
  EXPECT_EQ(g.live_count(), 3);
}

TEST(Grid, RPentominoMatchesReferenceAtThousand) {
  const Grid g = run(from_points(kRPentomino), 1000, Ruleset::Life);
  const auto ref = ref::reference_run(to_reference(from_points(kRPentomino)), 1000, Ruleset::Life);
  EXPECT_EQ(census(g).total(), static_cast<std::int64_t>(ref.size()));
  EXPECT_EQ(to_reference(g), ref);
}

TEST(Grid, MatchesReferenceOnRandomSoupsAcrossTileEdges) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Ruleset r = static_cast<Ruleset>(trial % 3);
    const auto& palette = r == Ruleset::Immigration ? ref::kRedBlue : ref::kAllLive;
    // Straddle the tile boundary at the origin and at -64.
    const std::int64_t x0 = trial % 2 == 0 ? -8 : -72, y0 = trial % 4 < 2 ? -9 : 57;
    Grid g = random_soup(rng, 16, 16, 0.375, palette, x0, y0);
    auto ref = to_reference(g);
    for (int s = 0; s < 200; ++s) {
      g.advance(r);
      ref = ref::reference_step(ref, r);
      ASSERT_EQ(to_reference(g), ref) << "trial " << trial << " step " << s + 1;
    }
  }
}

TEST(Grid, ProjectionLawHoldsOnRandomSoups) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Grid imm = random_soup(rng, 16, 16, 0.375, ref::kRedBlue);
    const Grid man = random_soup(rng, 16, 16, 0.375, ref::kAllLive);
    EXPECT_EQ(project_binary(run(imm, 300, Ruleset::Immigration)),
              run(project_binary(imm), 300, Ruleset::Life));
    EXPECT_EQ(project_binary(run(man, 300, Ruleset::Management)),
              run(project_binary(man), 300, Ruleset::Life));
  }
}

TEST(Grid, RecolourMapsManagementColours) {
  Grid g;
  g.set(0, 0, CellState::Red);
  g.set(1, 0, CellState::Blue);
  g.set(2, 0, CellState::Orange);
  g.set(3, 0, CellState::Green);
  g.set(4, 0, CellState::Purple);
  const Grid r = recolour_management_to_immigration(g);
  EXPECT_EQ(r.at(0, 0), CellState::Red);
  EXPECT_EQ(r.at(1, 0), CellState::Blue);
  EXPECT_EQ(r.at(2, 0), CellState::Red);
  EXPECT_EQ(r.at(3, 0), CellState::Blue);
  EXPECT_EQ(r.at(4, 0), CellState::White);
  const Grid all_red = from_points(kRPentomino);
  EXPECT_EQ(recolour_management_to_immigration(all_red), all_red);
}

TEST(Grid, RecolourCommutesWithSimulation) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Grid g = random_soup(rng, 12, 12, 0.4, ref::kRedBlue);
    Grid man = g;
    Grid imm = recolour_management_to_immigration(g);
    for (int s = 0; s < 300; ++s) {
      man.advance(Ruleset::Management);
      imm.advance(Ruleset::Immigration);
      if (s % 50 == 49) {
        ASSERT_EQ(recolour_management_to_immigration(man), imm);
      }
    }
  }
}

TEST(Grid, SingleColourGridsStaySingleColour) {
  std::mt19937_64 rng(3);
  for (CellState colour : {CellState::Red, CellState::Blue}) {
    for (Ruleset r : {Ruleset::Immigration, Ruleset::Management}) {
      Grid g = random_soup(rng, 16, 16, 0.375, {colour});
      for (int s = 0; s < 300; ++s) {
        g.advance(r);
        const ColourCensus c = census(g);
        ASSERT_EQ(c[colour], c.total());
      }
    }
  }
}

TEST(Grid, PurpleIsDeadAndDecays) {
  // Two red cells plus a purple one: the gap cell would be born if purple counted.
  Grid g;
  g.set(0, 0, CellState::Red);
  g.set(2, 0, CellState::Red);
  g.set(1, 2, CellState::Purple);
  EXPECT_EQ(g.at(1, 2), CellState::Purple);
  EXPECT_EQ(g.live_count(), 2);
  const Grid next = step(g, Ruleset::Management);
  EXPECT_TRUE(next.empty());

  // A purple cell with three live neighbours is a birth site.
  Grid h;
  h.set(0, 0, CellState::Red);
  h.set(1, 0, CellState::Red);
  h.set(2, 0, CellState::Red);
  h.set(1, 1, CellState::Purple);
  h.set(9, 9, CellState::Purple);
  const Grid hn = step(h, Ruleset::Management);
  EXPECT_EQ(hn.at(1, 1), CellState::Red);
  for (const Cell& c : hn.cells()) EXPECT_NE(c.state, CellState::Purple);
}

TEST(Grid, PurpleOnlyAtTimeZero) {
  Grid g = from_points(kBlock);
  g.advance(Ruleset::Life);
  EXPECT_THROW(g.set(5, 5, CellState::Purple), std::logic_error);
}

TEST(Grid, RedIsOnlyBornFromThreeRedParents) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    Grid g = random_soup(rng, 16, 16, 0.375, ref::kRedBlue);
    for (int s = 0; s < 200; ++s) {
      const Grid next = step(g, Ruleset::Management);
      for (const Cell& c : next.cells()) {
        if (c.state != CellState::Red || is_alive(g.at(c.x, c.y))) continue;
        int red = 0;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if ((dx != 0 || dy != 0) && g.at(c.x + dx, c.y + dy) == CellState::Red) ++red;
          }
        }
        ASSERT_EQ(red, 3);
      }
      g = next;
    }
  }
}

TEST(Grid, StepIsDeterministic) {
  std::mt19937_64 rng(4);
  const Grid g = random_soup(rng, 20, 20, 0.4, ref::kAllLive);
  EXPECT_EQ(run(g, 250, Ruleset::Management), run(g, 250, Ruleset::Management));
}

TEST(Grid, AllRulesetsShareLiveDynamics) {
  std::mt19937_64 rng(8);
  const Grid g = random_soup(rng, 16, 16, 0.375, ref::kRedBlue);
  const Grid a = project_binary(run(g, 400, Ruleset::Life));
  EXPECT_EQ(project_binary(run(g, 400, Ruleset::Immigration)), a);
  EXPECT_EQ(project_binary(run(g, 400, Ruleset::Management)), a);
}

TEST(Grid, ExtentViolationThrows) {
  Grid g(20);
  EXPECT_THROW(g.set(21, 0, CellState::Red), ExtentError);
  // A glider heading to +x, +y leaves the box within a hundred steps.
  for (auto [x, y] : {std::pair{1, 0}, {2, 1}, {0, 2}, {1, 2}, {2, 2}}) g.set(x, y, CellState::Red);
  EXPECT_THROW(g.advance(Ruleset::Life, 200), ExtentError);
  EXPECT_THROW(Grid(0), std::invalid_argument);
}

TEST(Grid, UnboundedPatternsTravelAcrossTiles) {
  Grid g;
  for (auto [x, y] : {std::pair{1, 0}, {2, 1}, {0, 2}, {1, 2}, {2, 2}}) g.set(x, y, CellState::Blue);
  g.advance(Ruleset::Immigration, 400);
  const auto b = g.bounds();
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->min_x, 100);
  EXPECT_EQ(b->min_y, 100);
  EXPECT_EQ(census(g).blue, 5);
}

TEST(Grid, CellsAreSortedByRowThenColumn) {
  Grid g;
  g.set(70, -1, CellState::Red);
  g.set(-70, -1, CellState::Green);
  g.set(3, 2, CellState::Purple);
  g.set(0, 2, CellState::Blue);
  const auto cells = g.cells();
  ASSERT_EQ(cells.size(), 4u);
  EXPECT_EQ(cells[0].x, -70);
  EXPECT_EQ(cells[1].x, 70);
  EXPECT_EQ(cells[2].state, CellState::Blue);
  EXPECT_EQ(cells[3].state, CellState::Purple);
  const auto b = g.bounds();
  EXPECT_EQ(b->min_x, -70);
  EXPECT_EQ(b->max_x, 70);
  EXPECT_EQ(b->min_y, -1);
  EXPECT_EQ(b->max_y, 2);
}

TEST(Grid, SetWhiteRemovesCell) {
  Grid g = from_points(kBlock);
  g.set(0, 0, CellState::White);
  EXPECT_EQ(g.live_count(), 3);
  EXPECT_EQ(g.at(0, 0), CellState::White);
  g.set(1, 0, CellState::Orange);
  EXPECT_EQ(g.at(1, 0), CellState::Orange);
}
