#include <gtest/gtest.h>

#include "symbiote/lineage.hpp"

using namespace symbiote;

namespace {

Genome genome_with_parts(int parts) {
  std::string row = "o";
  for (int i = 1; i < parts; ++i) row += "|o";
  return Genome::from_rows({row});
}

struct ArchiveBuilder {
  RunArchive archive;

  ArchiveBuilder& add(std::vector<std::uint64_t> parents, Provenance p, int parts) {
    LineageRecord r;
    r.id = r.birth_index = archive.records.size();
    r.parent_ids = std::move(parents);
    r.layer_provenance = p;
    r.part_count = parts;
    r.genome = genome_with_parts(parts);
    archive.records.push_back(std::move(r));
    return *this;
  }
  ArchiveBuilder& seeds(int n) {
    for (int i = 0; i < n; ++i) add({}, Provenance::InitialRandom, 1);
    return *this;
  }
};

}  // namespace

TEST(Species, NoFusionsNoSpecies) {
  ArchiveBuilder b;
  b.seeds(3).add({0}, Provenance::Mutation, 1).add({1, 2}, Provenance::Crossover, 1);
  EXPECT_TRUE(build_species(b.archive).empty());
}

TEST(Species, LoneFusionIsSingleton) {
  ArchiveBuilder b;
  b.seeds(2).add({0, 1}, Provenance::Fusion, 2);
  const auto species = build_species(b.archive);
  ASSERT_EQ(species.size(), 1u);
  EXPECT_EQ(species[0].root_id, 2u);
  EXPECT_EQ(species[0].member_ids, (std::vector<std::uint64_t>{2}));
  EXPECT_EQ(species[0].part_count, 2);
  const LineageIndex index(b.archive);
  EXPECT_TRUE(prolific_pairs(species, index).empty());
}

TEST(Species, FusionOfAMemberStartsANewSpecies) {
  ArchiveBuilder b;
  b.seeds(2)
      .add({0, 1}, Provenance::Fusion, 2)    // 2: root A
      .add({2}, Provenance::Mutation, 2)     // 3: A
      .add({3, 0}, Provenance::Fusion, 3)    // 4: root B
      .add({4}, Provenance::Resize, 3)       // 5: B
      .add({3, 2}, Provenance::Crossover, 2) // 6: A
      .add({0}, Provenance::Mutation, 1);    // 7: not a symbiote
  const auto species = build_species(b.archive);
  ASSERT_EQ(species.size(), 2u);
  EXPECT_EQ(species[0].root_id, 2u);
  EXPECT_EQ(species[0].member_ids, (std::vector<std::uint64_t>{2, 3, 6}));
  EXPECT_EQ(species[1].root_id, 4u);
  EXPECT_EQ(species[1].member_ids, (std::vector<std::uint64_t>{4, 5}));
  EXPECT_EQ(species[1].part_count, 3);
}

TEST(Species, RejectsPartCountDriftWithoutFusion) {
  ArchiveBuilder b;
  b.seeds(2).add({0, 1}, Provenance::Fusion, 2).add({2}, Provenance::Mutation, 3);
  EXPECT_THROW(build_species(b.archive), std::invalid_argument);
}

TEST(LineageIndex, CountsEveryDistinctParent) {
  ArchiveBuilder b;
  b.seeds(2).add({0, 1}, Provenance::Crossover, 1).add({0, 0}, Provenance::Crossover, 1).add({0}, Provenance::Mutation, 1);
  const LineageIndex index(b.archive);
  EXPECT_EQ(index.children(0), 3u);
  EXPECT_EQ(index.children(1), 1u);
  EXPECT_EQ(index.children(4), 0u);
  EXPECT_EQ(index.record(3).parent_ids.size(), 2u);
  EXPECT_THROW(index.record(99), std::out_of_range);
}

TEST(LineageIndex, RejectsUnknownParentsAndDuplicates) {
  ArchiveBuilder b;
  b.seeds(1).add({7}, Provenance::Mutation, 1);
  EXPECT_THROW(LineageIndex{b.archive}, std::invalid_argument);
  ArchiveBuilder d;
  d.seeds(2);
  d.archive.records[1].id = 0;
  EXPECT_THROW(LineageIndex{d.archive}, std::invalid_argument);
}

TEST(ProlificPairs, MostAndLeastByChildren) {
  ArchiveBuilder b;
  b.seeds(2).add({0, 1}, Provenance::Fusion, 2);  // 2
  b.add({2}, Provenance::Mutation, 2);            // 3: zero children
  for (int i = 0; i < 5; ++i) b.add({2}, Provenance::Mutation, 2);  // 2 gets 5 children
  // Members 4..8 have no children either; 3 wins the least tie by birth order.
  const LineageIndex index(b.archive);
  const auto species = build_species(b.archive);
  const auto pairs = prolific_pairs(species, index);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].most_prolific, 2u);
  EXPECT_EQ(pairs[0].least_prolific, 3u);
  EXPECT_EQ(pairs[0].part_count, 2);
  EXPECT_EQ(pairs[0].species_root, 2u);
  EXPECT_GE(index.children(pairs[0].most_prolific), index.children(pairs[0].least_prolific));
}

TEST(ProlificPairs, AllEqualChildrenKeepsPair) {
  ArchiveBuilder b;
  b.seeds(2)
      .add({0, 1}, Provenance::Fusion, 2)  // 2: root
      .add({2}, Provenance::Mutation, 2)   // 3: member
      .add({3, 0}, Provenance::Fusion, 3); // 4: gives 3 its only child
  const LineageIndex index(b.archive);
  EXPECT_EQ(index.children(2), 1u);
  EXPECT_EQ(index.children(3), 1u);
  const auto pairs = prolific_pairs(build_species(b.archive), index);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].most_prolific, 2u);
  EXPECT_EQ(pairs[0].least_prolific, 2u);
}
