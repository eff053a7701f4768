#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "evolution.hpp"

namespace symbiote {

/// A family tree rooted at one fusion birth. Members share the root's part count.
struct Species {
  std::uint64_t root_id = 0;
  std::vector<std::uint64_t> member_ids;  // by birth_index, root first
  int part_count = 0;

  friend bool operator==(const Species&, const Species&) = default;
};

struct SpeciesPair {
  std::uint64_t most_prolific = 0;
  std::uint64_t least_prolific = 0;
  int part_count = 0;
  std::uint64_t species_root = 0;

  friend bool operator==(const SpeciesPair&, const SpeciesPair&) = default;
};

/// Id lookup and child counts for one archive. Every distinct parent of a
/// birth is credited with one child.
class LineageIndex {
 public:
  explicit LineageIndex(const RunArchive& archive) : archive_(&archive) {
    slots_.reserve(archive.records.size());
    for (std::size_t i = 0; i < archive.records.size(); ++i) {
      const LineageRecord& r = archive.records[i];
      if (!slots_.emplace(r.id, i).second) {
        throw std::invalid_argument("duplicate record id " + std::to_string(r.id));
      }
    }
    for (const LineageRecord& r : archive.records) {
      for (std::size_t k = 0; k < r.parent_ids.size(); ++k) {
        const std::uint64_t p = r.parent_ids[k];
        if (std::find(r.parent_ids.begin(), r.parent_ids.begin() + static_cast<std::ptrdiff_t>(k),
                      p) != r.parent_ids.begin() + static_cast<std::ptrdiff_t>(k)) {
          continue;
        }
        if (!slots_.contains(p)) {
          throw std::invalid_argument("record " + std::to_string(r.id) + " names unknown parent " +
                                      std::to_string(p));
        }
        ++children_[p];
      }
    }
  }

  const LineageRecord& record(std::uint64_t id) const {
    auto it = slots_.find(id);
    if (it == slots_.end()) throw std::out_of_range("unknown record id " + std::to_string(id));
    return archive_->records[it->second];
  }

  bool contains(std::uint64_t id) const { return slots_.contains(id); }

  std::uint64_t children(std::uint64_t id) const {
    auto it = children_.find(id);
    return it == children_.end() ? 0 : it->second;
  }

  const RunArchive& archive() const noexcept { return *archive_; }

 private:
  const RunArchive* archive_;
  std::unordered_map<std::uint64_t, std::size_t> slots_;
  std::unordered_map<std::uint64_t, std::uint64_t> children_;
};

/// Partitions symbiotic records into species. A fusion birth roots a new
/// species; any other symbiote joins the species of its first parent (the
/// genome it was copied from). Non-symbiotes are skipped.
inline std::vector<Species> build_species(const RunArchive& archive) {
  std::vector<const LineageRecord*> order;
  order.reserve(archive.records.size());
  for (const LineageRecord& r : archive.records) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(), [](const LineageRecord* a, const LineageRecord* b) {
    return a->birth_index < b->birth_index;
  });

  std::vector<Species> species;
  std::unordered_map<std::uint64_t, std::size_t> species_of;
  for (const LineageRecord* r : order) {
    if (r->layer_provenance == Provenance::Fusion) {
      species_of[r->id] = species.size();
      species.push_back({r->id, {r->id}, r->part_count});
      continue;
    }
    if (r->part_count < 2) continue;
    if (r->parent_ids.empty()) {
      throw std::invalid_argument("symbiote " + std::to_string(r->id) + " has no parent");
    }
    auto it = species_of.find(r->parent_ids.front());
    if (it == species_of.end()) {
      throw std::invalid_argument("symbiote " + std::to_string(r->id) +
                                  " descends from a record outside any species");
    }
    Species& s = species[it->second];
    if (s.part_count != r->part_count) {
      throw std::invalid_argument("record " + std::to_string(r->id) +
                                  " changes part count without fusion");
    }
    s.member_ids.push_back(r->id);
    species_of[r->id] = it->second;
  }
  return species;
}

/// Most and least prolific member of every species with two or more members.
/// Ties on child count go to the lower birth_index.
inline std::vector<SpeciesPair> prolific_pairs(std::span<const Species> species,
                                               const LineageIndex& index) {
  std::vector<SpeciesPair> pairs;
  for (const Species& s : species) {
    if (s.member_ids.size() < 2) continue;
    auto key = [&](std::uint64_t id) {
      return std::pair{index.children(id), index.record(id).birth_index};
    };
    std::uint64_t most = s.member_ids.front(), least = s.member_ids.front();
    for (std::uint64_t id : s.member_ids) {
      const auto [kids, birth] = key(id);
      const auto [most_kids, most_birth] = key(most);
      const auto [least_kids, least_birth] = key(least);
      if (kids > most_kids || (kids == most_kids && birth < most_birth)) most = id;
      if (kids < least_kids || (kids == least_kids && birth < least_birth)) least = id;
    }
    pairs.push_back({most, least, s.part_count, s.root_id});
  }
  return pairs;
}

}  // namespace symbiote
