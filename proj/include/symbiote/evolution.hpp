#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arena.hpp"
#include "genome.hpp"
#include "parallel.hpp"

namespace symbiote {

struct EvolutionConfig {
  int population_size = 200;
  int generations = 100;
  int seed_width = 5;
  int seed_height = 5;
  double initial_density = 0.375;
  int tournament_size = 2;
  double mutation_rate = 0.01;
  bool force_mutation = true;
  double resize_probability = 0.2;
  double crossover_probability = 0.8;
  double fusion_probability = 0.005;
  double similarity_threshold = 0.8;
  int max_parts = 5;
  std::int64_t time_limit_floor = 1000;
  std::int64_t time_limit_slope = 20;
  std::int64_t extent = Grid::kDefaultExtent;
  std::uint64_t rng_seed = 0;

  ArenaConfig arena() const noexcept { return {time_limit_floor, time_limit_slope, extent}; }

  void validate() const {
    auto probability = [](double p, const char* name) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
      }
    };
    probability(initial_density, "initial_density");
    probability(mutation_rate, "mutation_rate");
    probability(resize_probability, "resize_probability");
    probability(crossover_probability, "crossover_probability");
    probability(fusion_probability, "fusion_probability");
    probability(similarity_threshold, "similarity_threshold");
    if (population_size < 2) throw std::invalid_argument("population_size must be at least 2");
    if (generations < 1) throw std::invalid_argument("generations must be positive");
    if (seed_width < 1 || seed_height < 1) throw std::invalid_argument("seed dims must be positive");
    if (tournament_size < 1) throw std::invalid_argument("tournament_size must be positive");
    if (max_parts < 1) throw std::invalid_argument("max_parts must be positive");
    if (time_limit_floor < 1 || time_limit_slope < 0) {
      throw std::invalid_argument("time limit floor must be positive and slope non-negative");
    }
    if (extent < 1) throw std::invalid_argument("extent must be positive");
  }

  friend bool operator==(const EvolutionConfig&, const EvolutionConfig&) = default;
};

enum class Provenance : std::uint8_t { InitialRandom, Mutation, Resize, Crossover, Fusion };

constexpr std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::InitialRandom: return "InitialRandom";
    case Provenance::Mutation: return "Mutation";
    case Provenance::Resize: return "Resize";
    case Provenance::Crossover: return "Crossover";
    case Provenance::Fusion: return "Fusion";
  }
  return "?";
}

inline Provenance provenance_from_string(std::string_view s) {
  for (Provenance p : {Provenance::InitialRandom, Provenance::Mutation, Provenance::Resize,
                       Provenance::Crossover, Provenance::Fusion}) {
    if (to_string(p) == s) return p;
  }
  throw std::invalid_argument("unknown provenance '" + std::string(s) + "'");
}

struct LineageRecord {
  std::uint64_t id = 0;
  std::vector<std::uint64_t> parent_ids;
  Provenance layer_provenance = Provenance::InitialRandom;
  int part_count = 1;
  Genome genome;
  std::uint64_t birth_index = 0;
  double fitness_at_birth = 0.0;

  friend bool operator==(const LineageRecord&, const LineageRecord&) = default;
};

struct RunArchive {
  EvolutionConfig config;
  std::vector<LineageRecord> records;

  friend bool operator==(const RunArchive&, const RunArchive&) = default;
};

struct Individual {
  Genome genome;
  double fitness = 0.0;
  std::uint64_t children_count = 0;
  std::uint64_t id = 0;
  std::uint64_t birth_index = 0;
};

using Rng = std::mt19937_64;

inline bool chance(Rng& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

/// Random single-part seed; each cell is live with probability `density`.
/// All-dead draws are redrawn, up to `max_attempts` times.
inline Genome random_seed(Rng& rng, int width, int height, double density,
                          int max_attempts = 1000) {
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
  const auto n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<CellState> cells(n, CellState::White);
    bool any = false;
    for (CellState& c : cells) {
      if (chance(rng, density)) {
        c = CellState::Red;
        any = true;
      }
    }
    if (any) return Genome(width, height, std::move(cells));
  }
  throw std::runtime_error("random_seed: no live cell after " + std::to_string(max_attempts) +
                           " draws (density " + std::to_string(density) + ")");
}

/// Index of the tournament winner: `tournament_size` distinct members drawn
/// uniformly, the fittest wins, ties go to the lower id.
inline std::size_t tournament_select(std::span<const Individual> population, int tournament_size,
                                     Rng& rng) {
  if (population.empty()) throw std::invalid_argument("tournament over an empty population");
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(tournament_size),
                                              population.size());
  std::uniform_int_distribution<std::size_t> pick(0, population.size() - 1);
  std::vector<std::size_t> drawn;
  drawn.reserve(k);
  while (drawn.size() < k) {
    const std::size_t i = pick(rng);
    if (std::find(drawn.begin(), drawn.end(), i) == drawn.end()) drawn.push_back(i);
  }
  std::size_t best = drawn.front();
  for (std::size_t i : drawn) {
    const Individual& c = population[i];
    const Individual& b = population[best];
    if (c.fitness > b.fitness || (c.fitness == b.fitness && c.id < b.id)) best = i;
  }
  return best;
}

/// Layer 1: flips each non-border cell with probability `rate`. When nothing
/// flipped and `force` is set, one uniformly chosen non-border cell flips.
inline Genome mutate_layer1(const Genome& genome, double rate, bool force, Rng& rng) {
  Genome out = genome;
  std::vector<std::pair<int, int>> free_cells;
  for (int y = 0; y < genome.height(); ++y) {
    for (int x = 0; x < genome.width(); ++x) {
      if (genome.at(x, y) != CellState::Purple) free_cells.emplace_back(x, y);
    }
  }
  bool flipped = false;
  for (const auto& [x, y] : free_cells) {
    if (chance(rng, rate)) {
      out.set_live(x, y, !out.is_live(x, y));
      flipped = true;
    }
  }
  if (!flipped && force && !free_cells.empty()) {
    const auto& [x, y] =
        free_cells[std::uniform_int_distribution<std::size_t>(0, free_cells.size() - 1)(rng)];
    out.set_live(x, y, !out.is_live(x, y));
  }
  return out;
}

enum class ResizeMove : std::uint8_t { AppendRow, AppendColumn, RemoveRow, RemoveColumn };

/// Moves that keep every dimension (and the last part's width) at least 1.
inline std::vector<ResizeMove> legal_resize_moves(const Genome& g) {
  std::vector<ResizeMove> moves{ResizeMove::AppendRow, ResizeMove::AppendColumn};
  if (g.height() > 1) moves.push_back(ResizeMove::RemoveRow);
  if (g.parts().back().width > 1) moves.push_back(ResizeMove::RemoveColumn);
  return moves;
}

/// Rows are added or removed at the bottom, columns at the right edge.
inline Genome apply_resize(const Genome& g, ResizeMove move) {
  int w = g.width(), h = g.height();
  switch (move) {
    case ResizeMove::AppendRow: ++h; break;
    case ResizeMove::AppendColumn: ++w; break;
    case ResizeMove::RemoveRow: --h; break;
    case ResizeMove::RemoveColumn: --w; break;
  }
  std::vector<CellState> cells(static_cast<std::size_t>(w) * static_cast<std::size_t>(h),
                               CellState::White);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      CellState c = CellState::White;
      if (x < g.width() && y < g.height()) c = g.at(x, y);
      else if (x < g.width() && g.is_border_column(x)) c = CellState::Purple;
      cells[static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x)] = c;
    }
  }
  return Genome::from_matrix(w, h, std::move(cells));
}

struct ResizeResult {
  Genome genome;
  bool resized = false;
};

/// Layer 2: with probability `probability`, one legal resize move chosen uniformly.
inline ResizeResult resize_layer2(const Genome& genome, double probability, Rng& rng) {
  if (!chance(rng, probability)) return {genome, false};
  const auto moves = legal_resize_moves(genome);
  const ResizeMove m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
  return {apply_resize(genome, m), true};
}

/// Product of the width ratio and the height ratio, each min/max.
inline double dimension_similarity(const Genome& a, const Genome& b) noexcept {
  const double wr = static_cast<double>(std::min(a.width(), b.width())) / std::max(a.width(), b.width());
  const double hr =
      static_cast<double>(std::min(a.height(), b.height())) / std::max(a.height(), b.height());
  return wr * hr;
}

/// Layer 3: copies `a` and overwrites a random sub-block (within the shared
/// extent) with the matching cells of `b`. Border cells of either parent are
/// never copied. Returns nullopt when the parents are not similar enough.
inline std::optional<Genome> crossover_layer3(const Genome& a, const Genome& b, double threshold,
                                              Rng& rng) {
  if (a.part_count() != b.part_count()) return std::nullopt;
  if (dimension_similarity(a, b) < threshold) return std::nullopt;
  const int w = std::min(a.width(), b.width());
  const int h = std::min(a.height(), b.height());
  std::uniform_int_distribution<int> px(0, w - 1), py(0, h - 1);
  int x0 = px(rng), x1 = px(rng), y0 = py(rng), y1 = py(rng);
  if (x0 > x1) std::swap(x0, x1);
  if (y0 > y1) std::swap(y0, y1);
  Genome child = a;
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      if (a.at(x, y) == CellState::Purple || b.at(x, y) == CellState::Purple) continue;
      child.set_live(x, y, b.is_live(x, y));
    }
  }
  return child;
}

/// Layer 4: `a`, a border column, then `b`, centred vertically. Returns
/// nullopt when the result would have more than `max_parts` parts.
inline std::optional<Genome> fuse_layer4(const Genome& a, const Genome& b, int max_parts = 5) {
  if (a.part_count() + b.part_count() > max_parts) return std::nullopt;
  const int w = a.width() + 1 + b.width();
  const int h = std::max(a.height(), b.height());
  std::vector<CellState> cells(static_cast<std::size_t>(w) * static_cast<std::size_t>(h),
                               CellState::White);
  auto put = [&](int x, int y, CellState c) {
    cells[static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x)] = c;
  };
  const int ay = (h - a.height()) / 2, by = (h - b.height()) / 2;
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) put(x, y + ay, a.at(x, y));
  }
  for (int y = 0; y < h; ++y) put(a.width(), y, CellState::Purple);
  // Padding rows inside a border column of either parent stay Purple.
  for (int x = 0; x < a.width(); ++x) {
    if (!a.is_border_column(x)) continue;
    for (int y = 0; y < h; ++y) put(x, y, CellState::Purple);
  }
  for (int y = 0; y < b.height(); ++y) {
    for (int x = 0; x < b.width(); ++x) put(a.width() + 1 + x, y + by, b.at(x, y));
  }
  for (int x = 0; x < b.width(); ++x) {
    if (!b.is_border_column(x)) continue;
    for (int y = 0; y < h; ++y) put(a.width() + 1 + x, y, CellState::Purple);
  }
  return Genome::from_matrix(w, h, std::move(cells));
}

/// Mean score of `genome` playing Red against every opponent. Opponents with
/// an identical genome score 0.5 without a game.
inline double fitness(const Genome& genome, std::span<const Genome> opponents,
                      const ArenaConfig& arena = {}, unsigned workers = worker_count()) {
  if (opponents.empty()) throw std::invalid_argument("fitness needs at least one opponent");
  std::vector<double> scores(opponents.size(), 0.5);
  parallel_for(
      opponents.size(),
      [&](std::size_t i) {
        if (opponents[i] == genome) return;
        scores[i] = play(genome, opponents[i], arena).red_score();
      },
      workers);
  double sum = 0.0;
  for (double s : scores) sum += s;
  return sum / static_cast<double>(scores.size());
}

/// Steady-state evolution with the four reproduction layers.
class Evolution {
 public:
  explicit Evolution(EvolutionConfig config, unsigned workers = worker_count())
      : config_(config), rng_(config.rng_seed), workers_(workers) {
    config_.validate();
    archive_.config = config_;
  }

  const EvolutionConfig& config() const noexcept { return config_; }
  const std::vector<Individual>& population() const noexcept { return population_; }
  const RunArchive& archive() const noexcept { return archive_; }
  RunArchive take_archive() { return std::move(archive_); }

  /// Generation zero: random seeds, each scored against the whole initial population.
  void seed_population() {
    if (!population_.empty()) throw std::logic_error("population already seeded");
    const auto n = static_cast<std::size_t>(config_.population_size);
    for (std::size_t i = 0; i < n; ++i) {
      Individual ind;
      ind.genome = random_seed(rng_, config_.seed_width, config_.seed_height, config_.initial_density);
      ind.id = ind.birth_index = next_birth_++;
      population_.push_back(std::move(ind));
    }
    // score[i][j] + score[j][i] == 1 because play() is colour-swap antisymmetric.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::vector<double> red_scores(pairs.size(), 0.5);
    const ArenaConfig arena = config_.arena();
    parallel_for(
        pairs.size(),
        [&](std::size_t k) {
          const auto [i, j] = pairs[k];
          if (population_[i].genome == population_[j].genome) return;
          red_scores[k] = play(population_[i].genome, population_[j].genome, arena).red_score();
        },
        workers_);
    std::vector<double> totals(n, 0.5);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      totals[pairs[k].first] += red_scores[k];
      totals[pairs[k].second] += 1.0 - red_scores[k];
    }
    for (std::size_t i = 0; i < n; ++i) {
      Individual& ind = population_[i];
      ind.fitness = totals[i] / static_cast<double>(n);
      archive_.records.push_back({ind.id, {}, Provenance::InitialRandom, 1, ind.genome,
                                  ind.birth_index, ind.fitness});
    }
  }

  /// One birth through layers 4 to 1; the child replaces the least fit member.
  const LineageRecord& reproduce_once() {
    if (population_.empty()) seed_population();
    std::vector<std::size_t> parents;
    Provenance provenance = Provenance::Mutation;
    Genome child;
    bool fused = false;

    if (chance(rng_, config_.fusion_probability)) {
      const std::size_t a = tournament_select(population_, config_.tournament_size, rng_);
      const std::size_t b = tournament_select(population_, config_.tournament_size, rng_);
      if (auto f = fuse_layer4(population_[a].genome, population_[b].genome, config_.max_parts)) {
        child = std::move(*f);
        parents = {a, b};
        provenance = Provenance::Fusion;
        fused = true;
      }
    }
    if (!fused) {
      if (chance(rng_, config_.crossover_probability)) {
        const std::size_t a = tournament_select(population_, config_.tournament_size, rng_);
        const std::size_t b = tournament_select(population_, config_.tournament_size, rng_);
        if (auto x = crossover_layer3(population_[a].genome, population_[b].genome,
                                      config_.similarity_threshold, rng_)) {
          child = std::move(*x);
          parents = {a, b};
          provenance = Provenance::Crossover;
        } else {
          child = population_[a].genome;
          parents = {a};
        }
      } else {
        const std::size_t a = tournament_select(population_, config_.tournament_size, rng_);
        child = population_[a].genome;
        parents = {a};
      }
      ResizeResult resized = resize_layer2(child, config_.resize_probability, rng_);
      if (resized.resized && provenance == Provenance::Mutation) provenance = Provenance::Resize;
      child = mutate_layer1(resized.genome, config_.mutation_rate, config_.force_mutation, rng_);
    }
    // Selection order is kept: the first parent is the one the child was copied from.
    // A self-fusion keeps both ids so that part counts still add up.
    if (provenance != Provenance::Fusion && parents.size() == 2 && parents[0] == parents[1]) {
      parents.pop_back();
    }
    return admit(std::move(child), provenance, parents);
  }

  RunArchive evolve(const std::function<void(std::size_t births)>& progress = {}) {
    if (population_.empty()) seed_population();
    const std::size_t births = static_cast<std::size_t>(config_.population_size) *
                               static_cast<std::size_t>(config_.generations);
    for (std::size_t i = 0; i < births; ++i) {
      reproduce_once();
      if (progress) progress(i + 1);
    }
    return archive_;
  }

 private:
  const LineageRecord& admit(Genome child, Provenance provenance,
                             const std::vector<std::size_t>& parent_slots) {
    std::vector<Genome> opponents;
    opponents.reserve(population_.size());
    for (const Individual& ind : population_) opponents.push_back(ind.genome);
    const double child_fitness = fitness(child, opponents, config_.arena(), workers_);

    LineageRecord rec;
    rec.id = next_birth_;
    rec.birth_index = next_birth_;
    ++next_birth_;
    for (std::size_t p : parent_slots) {
      rec.parent_ids.push_back(population_[p].id);
      ++population_[p].children_count;
    }
    rec.layer_provenance = provenance;
    rec.part_count = child.part_count();
    rec.genome = child;
    rec.fitness_at_birth = child_fitness;

    std::size_t victim = 0;
    for (std::size_t i = 1; i < population_.size(); ++i) {
      const Individual& c = population_[i];
      const Individual& v = population_[victim];
      if (c.fitness < v.fitness || (c.fitness == v.fitness && c.birth_index < v.birth_index)) {
        victim = i;
      }
    }
    population_[victim] = Individual{std::move(child), child_fitness, 0, rec.id, rec.birth_index};
    archive_.records.push_back(std::move(rec));
    return archive_.records.back();
  }

  EvolutionConfig config_;
  Rng rng_;
  unsigned workers_;
  std::vector<Individual> population_;
  RunArchive archive_;
  std::uint64_t next_birth_ = 0;
};

/// Full run: generation zero plus generations x population_size births.
inline RunArchive evolve(const EvolutionConfig& config,
                         const std::function<void(std::size_t births)>& progress = {}) {
  Evolution e(config);
  e.evolve(progress);
  return e.take_archive();
}

}  // namespace symbiote
