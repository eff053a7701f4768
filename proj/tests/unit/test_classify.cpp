#include <gtest/gtest.h>

#include <random>

#include "symbiote/classify.hpp"
#include "symbiote/evolution.hpp"

using namespace symbiote;

namespace {

// Table 9 delta rows (red, blue, orange, green) and the growths apart.
const ColourCensus kAB{-10, -15, 7, 29};
const ColourCensus kCD{-5, -20, 0, 36};
const ColourCensus kEF{-10, -8, 29, 0};

}  // namespace

TEST(WeightedGrowth, TableNineRows) {
  EXPECT_NEAR(weighted_growth({}, kAB), 4.33, 0.01);
  EXPECT_NEAR(weighted_growth({}, kCD), 7.00, 0.01);
  EXPECT_NEAR(weighted_growth({}, kEF), 9.33, 0.01);
  EXPECT_EQ(weighted_growth_thirds(kAB), 13);
  EXPECT_EQ(weighted_growth_thirds(kCD), 21);
  EXPECT_EQ(weighted_growth_thirds(kEF), 28);
}

TEST(WeightedGrowth, LinearAndZeroAtZero) {
  EXPECT_EQ(weighted_growth({}, {}), 0.0);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> d(-100, 100);
  for (int i = 0; i < 100; ++i) {
    const ColourCensus a{d(rng), d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng), d(rng)};
    const ColourCensus sum{a.red + b.red, a.blue + b.blue, a.orange + b.orange, a.green + b.green};
    EXPECT_EQ(weighted_growth_thirds(sum), weighted_growth_thirds(a) + weighted_growth_thirds(b));
    EXPECT_EQ(weighted_growth({}, sum) * 3, static_cast<double>(weighted_growth_thirds(sum)));
  }
}

TEST(WeightedGrowth, UsesDeltasNotLevels) {
  const ColourCensus initial{12, 9, 0, 0};
  const ColourCensus final_census{2, 0, 7, 29};
  EXPECT_NEAR(weighted_growth(initial, final_census), 13.0 / 3.0, 1e-12);
}

TEST(Classify, RolesFromFinalCensus) {
  EXPECT_EQ(classify_role(ColourCensus{0, 0, 29, 0}), Role::Manager);
  EXPECT_EQ(classify_role(ColourCensus{0, 0, 7, 29}), Role::Worker);
  EXPECT_EQ(classify_role(ColourCensus{5, 5, 4, 4}), Role::Worker);
}

TEST(Classify, BenefitFromGrowths) {
  EXPECT_EQ(classify_benefit(kAB, 3), Benefit::Insider);
  EXPECT_EQ(classify_benefit(kCD, 50), Benefit::Outsider);
  EXPECT_EQ(classify_benefit(kEF, 79), Benefit::Outsider);
  EXPECT_EQ(classify_benefit(ColourCensus{7, 0, 0, 0}, 7), Benefit::Outsider);
  // 13/3 against 4 and 5: exact thirds avoid rounding the boundary.
  EXPECT_EQ(classify_benefit(kAB, 4), Benefit::Insider);
  EXPECT_EQ(classify_benefit(kAB, 5), Benefit::Outsider);
}

TEST(Classify, InteractionFromRawDeltas) {
  EXPECT_EQ(classify_interaction(kAB), Interaction::Ensemblist);
  EXPECT_EQ(classify_interaction(kCD), Interaction::Ensemblist);
  EXPECT_EQ(classify_interaction(kEF), Interaction::Ensemblist);
  EXPECT_EQ(classify_interaction(ColourCensus{10, 0, 3, 3}), Interaction::Soloist);
  EXPECT_EQ(classify_interaction(ColourCensus{}), Interaction::Soloist);
}

TEST(RecolourFocal, FocalRedOthersBlue) {
  const Genome g = Genome::from_rows({"o.|.o", ".o|o."});
  const Grid left = recolour_focal(g, 0);
  EXPECT_EQ(left.at(0, 0), CellState::Red);
  EXPECT_EQ(left.at(1, 1), CellState::Red);
  EXPECT_EQ(left.at(2, 0), CellState::Purple);
  EXPECT_EQ(left.at(4, 0), CellState::Blue);
  EXPECT_EQ(left.at(3, 1), CellState::Blue);
  EXPECT_EQ(census(left), (ColourCensus{2, 2, 0, 0}));
  EXPECT_THROW(recolour_focal(g, 2), std::out_of_range);
}

TEST(RecolourFocal, EveryFocalChoiceGivesTheSameShape) {
  const Genome g = Genome::from_rows({"o.|.o|oo", ".o|o.|.o"});
  const Grid shape = project_binary(recolour_focal(g, 0));
  for (int p = 1; p < g.part_count(); ++p) EXPECT_EQ(project_binary(recolour_focal(g, p)), shape);
}

TEST(SoloGrowth, DyingAndStillParts) {
  const Genome g = Genome::from_rows({"o..|oo", "...|oo", "o.o|.."});
  EXPECT_EQ(solo_growth(g, 0), -3);
  EXPECT_EQ(solo_growth(g, 1), 0);
}

TEST(Classify, SeparatedStillLifesAreWorkerSoloists) {
  const Genome g = Genome::from_rows({"....|....", ".oo.|.oo.", ".oo.|.oo.", "....|...."});
  const SeedClassification s = classify_seed(g);
  ASSERT_EQ(s.parts.size(), 2u);
  for (const PartClassification& p : s.parts) {
    EXPECT_EQ(p.colour_deltas.orange, 0);
    EXPECT_EQ(p.colour_deltas.green, 0);
    EXPECT_EQ(p.role, Role::Worker);
    EXPECT_EQ(p.interaction, Interaction::Soloist);
    EXPECT_EQ(p.benefit, Benefit::Outsider);
    EXPECT_EQ(p.growth_alone, 0);
  }
  EXPECT_EQ(s.count(Role::Worker), 2);
  EXPECT_EQ(s.count(Interaction::Soloist), 2);
}

TEST(Classify, LabelsAreConsistentWithDeltas) {
  Rng rng(3);
  for (int i = 0; i < 6; ++i) {
    const auto g = fuse_layer4(random_seed(rng, 5, 5, 0.4), random_seed(rng, 5, 5, 0.4));
    ASSERT_TRUE(g.has_value());
    const SeedClassification s = classify_seed(*g, kAnalysisSteps, 2);
    ASSERT_EQ(static_cast<int>(s.parts.size()), g->part_count());
    EXPECT_EQ(s.count(Role::Manager) + s.count(Role::Worker), g->part_count());
    EXPECT_EQ(s.count(Benefit::Insider) + s.count(Benefit::Outsider), g->part_count());
    EXPECT_EQ(s.count(Interaction::Ensemblist) + s.count(Interaction::Soloist), g->part_count());
    for (int p = 0; p < g->part_count(); ++p) {
      const PartClassification& c = s.parts[static_cast<std::size_t>(p)];
      EXPECT_EQ(c.role, classify_role(c.final_census));
      EXPECT_EQ(c.benefit, classify_benefit(c.colour_deltas, c.growth_alone));
      EXPECT_EQ(c.interaction, classify_interaction(c.colour_deltas));
      EXPECT_EQ(c.role, classify_role(*g, p));
      EXPECT_EQ(c.interaction, classify_interaction(*g, p));
      EXPECT_EQ(c.growth_alone, solo_growth(*g, p));
    }
  }
}

TEST(Classify, TranslationInvariant) {
  Rng rng(4);
  const auto g = fuse_layer4(random_seed(rng, 5, 5, 0.4), random_seed(rng, 4, 6, 0.4));
  ASSERT_TRUE(g.has_value());
  const Grid base = recolour_focal(*g, 1);
  Grid shifted;
  for (const Cell& c : base.cells()) shifted.set(c.x + 1000, c.y - 777, c.state);
  EXPECT_EQ(census(run(base, 1000, Ruleset::Management)), census(run(shifted, 1000, Ruleset::Management)));
}

TEST(Classify, SeedGrowthIsTheSameUnderEveryRuleset) {
  Rng rng(5);
  const Genome g = random_seed(rng, 5, 5, 0.375);
  const std::int64_t life = seed_growth(g);
  Grid imm = g.to_grid(CellState::Blue);
  imm.advance(Ruleset::Immigration, kAnalysisSteps);
  EXPECT_EQ(imm.live_count() - g.live_count(), life);
}
