#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "fisher.hpp"

namespace symbiote {

/// Seeds counted by (M, N): M parts in the focal category, N in the other,
/// with M + N at most 5.
struct CountMatrix {
  static constexpr int kMax = 5;
  std::array<std::array<std::int64_t, kMax + 1>, kMax + 1> cells{};

  std::int64_t& at(int m, int n) {
    check(m, n);
    return cells[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
  }
  std::int64_t at(int m, int n) const {
    check(m, n);
    return cells[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
  }

  std::int64_t row_total(int m) const {
    std::int64_t s = 0;
    for (int n = 0; m + n <= kMax; ++n) s += at(m, n);
    return s;
  }
  std::int64_t column_total(int n) const {
    std::int64_t s = 0;
    for (int m = 0; m + n <= kMax; ++m) s += at(m, n);
    return s;
  }
  std::int64_t total() const {
    std::int64_t s = 0;
    for (int m = 0; m <= kMax; ++m) s += row_total(m);
    return s;
  }

  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

 private:
  static void check(int m, int n) {
    if (m < 0 || n < 0 || m + n > kMax) {
      throw std::out_of_range("matrix cell (" + std::to_string(m) + ", " + std::to_string(n) +
                              ") outside M + N <= 5");
    }
  }
};

/// (focal count, other count) for one classified seed.
using CategorySplit = std::function<std::pair<int, int>(const SeedClassification&)>;

inline std::pair<int, int> manager_split(const SeedClassification& s) {
  return {s.count(Role::Manager), s.count(Role::Worker)};
}
inline std::pair<int, int> outsider_split(const SeedClassification& s) {
  return {s.count(Benefit::Outsider), s.count(Benefit::Insider)};
}
inline std::pair<int, int> soloist_split(const SeedClassification& s) {
  return {s.count(Interaction::Soloist), s.count(Interaction::Ensemblist)};
}

inline CountMatrix category_matrix(std::span<const SeedClassification> seeds,
                                   const CategorySplit& split) {
  CountMatrix m;
  for (const SeedClassification& s : seeds) {
    const auto [focal, other] = split(s);
    ++m.at(focal, other);
  }
  return m;
}

/// Seeds by (M managers, N workers).
inline CountMatrix role_matrix(std::span<const SeedClassification> seeds) {
  return category_matrix(seeds, manager_split);
}

/// Classifies every genome, then counts (M managers, N workers).
inline CountMatrix role_matrix(std::span<const Genome> seeds, std::uint64_t steps = kAnalysisSteps) {
  CountMatrix m;
  for (const Genome& g : seeds) {
    int managers = 0;
    for (int p = 0; p < g.part_count(); ++p) managers += classify_role(g, p, steps) == Role::Manager;
    ++m.at(managers, g.part_count() - managers);
  }
  return m;
}

inline CountMatrix diff_matrix(const CountMatrix& most, const CountMatrix& least) {
  CountMatrix d;
  for (int m = 0; m <= CountMatrix::kMax; ++m) {
    for (int n = 0; m + n <= CountMatrix::kMax; ++n) d.at(m, n) = most.at(m, n) - least.at(m, n);
  }
  return d;
}

/// Rows: most prolific, least prolific. Columns: seeds whose focal-category
/// count equals `focal_count`, and the rest.
inline ContingencyTable focal_category_table(const CountMatrix& most, const CountMatrix& least,
                                             int focal_count) {
  return {most.row_total(focal_count), most.total() - most.row_total(focal_count),
          least.row_total(focal_count), least.total() - least.row_total(focal_count)};
}

struct PairGrowth {
  int part_count = 0;
  std::int64_t least_growth = 0;
  std::int64_t most_growth = 0;
};

struct GrowthRow {
  std::string label;  // part count, or "all"
  double least_mean = 0.0;
  double most_mean = 0.0;
  std::int64_t least_count = 0;
  std::int64_t most_count = 0;
};

/// Mean isolated growth of least and most prolific seeds, by part count
/// (descending) and overall. Empty input gives an empty table.
inline std::vector<GrowthRow> growth_summary(std::span<const PairGrowth> pairs) {
  std::vector<GrowthRow> rows;
  if (pairs.empty()) return rows;
  std::map<int, std::vector<const PairGrowth*>, std::greater<>> by_parts;
  for (const PairGrowth& p : pairs) by_parts[p.part_count].push_back(&p);
  auto summarise = [](std::string label, const std::vector<const PairGrowth*>& group) {
    GrowthRow r{std::move(label)};
    double least = 0.0, most = 0.0;
    for (const PairGrowth* p : group) {
      least += static_cast<double>(p->least_growth);
      most += static_cast<double>(p->most_growth);
    }
    r.least_count = r.most_count = static_cast<std::int64_t>(group.size());
    r.least_mean = least / static_cast<double>(group.size());
    r.most_mean = most / static_cast<double>(group.size());
    return r;
  };
  std::vector<const PairGrowth*> all;
  for (const auto& [parts, group] : by_parts) {
    rows.push_back(summarise(std::to_string(parts), group));
    all.insert(all.end(), group.begin(), group.end());
  }
  rows.push_back(summarise("all", all));
  return rows;
}

}  // namespace symbiote
