#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "classify.hpp"
#include "fisher.hpp"
#include "lineage.hpp"
#include "parallel.hpp"
#include "tables.hpp"

namespace symbiote {

struct AnalyzedSeed {
  std::uint64_t id = 0;
  std::uint64_t children = 0;
  Genome genome;
  SeedClassification classification;
  std::int64_t growth = 0;  // isolated Life run
};

struct AnalyzedPair {
  std::size_t run = 0;
  SpeciesPair pair;
  AnalyzedSeed most;
  AnalyzedSeed least;
};

struct FisherResult {
  std::string name;
  ContingencyTable table;
  double odds_ratio = 0.0;
  double p_value = 1.0;
};

/// Row-total shifts (most minus least prolific) in the three dimensions.
struct TrendSummary {
  std::int64_t zero_managers = 0;
  std::int64_t one_manager = 0;
  std::int64_t zero_outsiders = 0;
  std::int64_t two_outsiders = 0;
  std::int64_t zero_soloists = 0;
  std::int64_t one_soloist = 0;

  bool toward_one_manager() const noexcept { return one_manager > 0; }
  bool toward_zero_outsiders() const noexcept { return zero_outsiders > 0; }
  bool toward_zero_soloists() const noexcept { return zero_soloists > 0; }
  int matching_dimensions() const noexcept {
    return int{toward_one_manager()} + int{toward_zero_outsiders()} + int{toward_zero_soloists()};
  }
};

struct AnalysisReport {
  std::vector<std::vector<Species>> species;  // per run
  std::vector<AnalyzedPair> pairs;
  CountMatrix managers_most, managers_least, managers_diff;
  CountMatrix outsiders_most, outsiders_least, outsiders_diff;
  CountMatrix soloists_most, soloists_least, soloists_diff;
  std::vector<GrowthRow> growth;
  std::vector<FisherResult> fisher;
  TrendSummary trend;
};

namespace detail {

inline FisherResult fisher_result(std::string name, const ContingencyTable& t) {
  FisherResult r{std::move(name), t, odds_ratio(t), 1.0};
  if (t.a + t.b + t.c + t.d > 0) r.p_value = fisher_exact(t);
  return r;
}

// Rows most/least; columns: seeds with `first` focal parts, seeds with `second`.
inline ContingencyTable adjacent_table(const CountMatrix& most, const CountMatrix& least,
                                       int first, int second) {
  return {most.row_total(first), most.row_total(second), least.row_total(first),
          least.row_total(second)};
}

}  // namespace detail

/// Species, prolific pairs, per-part classification and the summary tables,
/// pooled over any number of archives.
inline AnalysisReport analyze(std::span<const RunArchive> archives,
                              std::uint64_t steps = kAnalysisSteps,
                              unsigned workers = worker_count()) {
  AnalysisReport report;
  std::vector<LineageIndex> indices;
  indices.reserve(archives.size());
  for (std::size_t run = 0; run < archives.size(); ++run) {
    indices.emplace_back(archives[run]);
    report.species.push_back(build_species(archives[run]));
    for (const SpeciesPair& p : prolific_pairs(report.species.back(), indices.back())) {
      AnalyzedPair ap;
      ap.run = run;
      ap.pair = p;
      ap.most.id = p.most_prolific;
      ap.least.id = p.least_prolific;
      report.pairs.push_back(std::move(ap));
    }
  }

  // Two seeds per pair; each job writes only its own slot.
  parallel_for(
      report.pairs.size() * 2,
      [&](std::size_t job) {
        AnalyzedPair& ap = report.pairs[job / 2];
        AnalyzedSeed& seed = job % 2 == 0 ? ap.most : ap.least;
        const LineageIndex& index = indices[ap.run];
        seed.genome = index.record(seed.id).genome;
        seed.children = index.children(seed.id);
        seed.classification = classify_seed(seed.genome, steps, 1);
        seed.growth = seed_growth(seed.genome, steps);
      },
      workers);

  std::vector<SeedClassification> most, least;
  std::vector<PairGrowth> growth;
  for (const AnalyzedPair& ap : report.pairs) {
    most.push_back(ap.most.classification);
    least.push_back(ap.least.classification);
    growth.push_back({ap.pair.part_count, ap.least.growth, ap.most.growth});
  }
  report.managers_most = category_matrix(most, manager_split);
  report.managers_least = category_matrix(least, manager_split);
  report.managers_diff = diff_matrix(report.managers_most, report.managers_least);
  report.outsiders_most = category_matrix(most, outsider_split);
  report.outsiders_least = category_matrix(least, outsider_split);
  report.outsiders_diff = diff_matrix(report.outsiders_most, report.outsiders_least);
  report.soloists_most = category_matrix(most, soloist_split);
  report.soloists_least = category_matrix(least, soloist_split);
  report.soloists_diff = diff_matrix(report.soloists_most, report.soloists_least);
  report.growth = growth_summary(growth);

  const CountMatrix& mm = report.managers_most;
  const CountMatrix& ml = report.managers_least;
  const CountMatrix& om = report.outsiders_most;
  const CountMatrix& ol = report.outsiders_least;
  const CountMatrix& sm = report.soloists_most;
  const CountMatrix& sl = report.soloists_least;
  report.fisher = {
      detail::fisher_result("one_manager", focal_category_table(mm, ml, 1)),
      detail::fisher_result("zero_outsiders", focal_category_table(om, ol, 0)),
      detail::fisher_result("two_outsiders", focal_category_table(om, ol, 2)),
      detail::fisher_result("zero_soloists", focal_category_table(sm, sl, 0)),
      detail::fisher_result("one_soloist", focal_category_table(sm, sl, 1)),
      detail::fisher_result("one_vs_zero_managers", detail::adjacent_table(mm, ml, 1, 0)),
      detail::fisher_result("zero_vs_two_outsiders", detail::adjacent_table(om, ol, 0, 2)),
      detail::fisher_result("zero_vs_one_soloists", detail::adjacent_table(sm, sl, 0, 1)),
  };

  report.trend.zero_managers = report.managers_diff.row_total(0);
  report.trend.one_manager = report.managers_diff.row_total(1);
  report.trend.zero_outsiders = report.outsiders_diff.row_total(0);
  report.trend.two_outsiders = report.outsiders_diff.row_total(2);
  report.trend.zero_soloists = report.soloists_diff.row_total(0);
  report.trend.one_soloist = report.soloists_diff.row_total(1);
  return report;
}

}  // namespace symbiote
