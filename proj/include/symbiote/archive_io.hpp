#pragma once

// Configuration documents and the newline-delimited JSON run archive.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "evolution.hpp"
#include "rle.hpp"

namespace symbiote {

inline constexpr std::string_view kArchiveFormat = "symbiote-archive";
inline constexpr int kArchiveVersion = 1;

class ArchiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct ConfigField {
  std::string_view key;
  std::function<void(EvolutionConfig&, const nlohmann::json&)> read;
  std::function<nlohmann::json(const EvolutionConfig&)> write;
};

template <class T>
ConfigField field(std::string_view key, T EvolutionConfig::*member) {
  return {key,
          [member, key](EvolutionConfig& c, const nlohmann::json& v) {
            const bool ok = std::is_same_v<T, bool>       ? v.is_boolean()
                            : std::is_floating_point_v<T> ? v.is_number()
                            : std::is_unsigned_v<T>       ? v.is_number_unsigned()
                                                          : v.is_number_integer();
            if (!ok) throw ConfigError("config key '" + std::string(key) + "' has the wrong type");
            c.*member = v.get<T>();
          },
          [member](const EvolutionConfig& c) { return nlohmann::json(c.*member); }};
}

inline const std::vector<ConfigField>& config_fields() {
  static const std::vector<ConfigField> fields = {
      field("population_size", &EvolutionConfig::population_size),
      field("generations", &EvolutionConfig::generations),
      field("seed_width", &EvolutionConfig::seed_width),
      field("seed_height", &EvolutionConfig::seed_height),
      field("initial_density", &EvolutionConfig::initial_density),
      field("tournament_size", &EvolutionConfig::tournament_size),
      field("mutation_rate", &EvolutionConfig::mutation_rate),
      field("force_mutation", &EvolutionConfig::force_mutation),
      field("resize_probability", &EvolutionConfig::resize_probability),
      field("crossover_probability", &EvolutionConfig::crossover_probability),
      field("fusion_probability", &EvolutionConfig::fusion_probability),
      field("similarity_threshold", &EvolutionConfig::similarity_threshold),
      field("max_parts", &EvolutionConfig::max_parts),
      field("time_limit_floor", &EvolutionConfig::time_limit_floor),
      field("time_limit_slope", &EvolutionConfig::time_limit_slope),
      field("extent", &EvolutionConfig::extent),
      field("rng_seed", &EvolutionConfig::rng_seed),
  };
  return fields;
}

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline nlohmann::json config_to_json(const EvolutionConfig& config) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& f : detail::config_fields()) j[std::string(f.key)] = f.write(config);
  return j;
}

inline EvolutionConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be an object");
  EvolutionConfig c;
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const auto& f : detail::config_fields()) {
      if (f.key != key) continue;
      known = true;
      try {
        f.read(c, value);
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config key '" + key + "': " + e.what());
      }
    }
    if (!known) throw ConfigError("unknown config key '" + key + "'");
  }
  c.validate();
  return c;
}

/// Flat "key = value" document; '#' starts a comment. Unset keys keep defaults.
inline EvolutionConfig parse_config(std::string_view text) {
  nlohmann::json j = nlohmann::json::object();
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string value(detail::trim(line.substr(eq + 1)));
    const nlohmann::json parsed = nlohmann::json::parse(value, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_primitive() || parsed.is_null()) {
      throw ConfigError("config line " + std::to_string(line_no) + ": bad value '" + value + "'");
    }
    j[key] = parsed;
  }
  try {
    return config_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

inline std::string format_config(const EvolutionConfig& config) {
  std::string out;
  for (const auto& f : detail::config_fields()) {
    out += std::string(f.key) + " = " + f.write(config).dump() + "\n";
  }
  return out;
}

inline nlohmann::json record_to_json(const LineageRecord& r) {
  return {{"id", r.id},
          {"parent_ids", r.parent_ids},
          {"layer_provenance", std::string(to_string(r.layer_provenance))},
          {"part_count", r.part_count},
          {"genome", genome_to_rle(r.genome, 0)},
          {"birth_index", r.birth_index},
          {"fitness_at_birth", r.fitness_at_birth}};
}

inline LineageRecord record_from_json(const nlohmann::json& j) {
  LineageRecord r;
  r.id = j.at("id").get<std::uint64_t>();
  r.parent_ids = j.at("parent_ids").get<std::vector<std::uint64_t>>();
  r.layer_provenance = provenance_from_string(j.at("layer_provenance").get<std::string>());
  r.part_count = j.at("part_count").get<int>();
  r.genome = genome_from_rle(j.at("genome").get<std::string>());
  r.birth_index = j.at("birth_index").get<std::uint64_t>();
  r.fitness_at_birth = j.at("fitness_at_birth").get<double>();
  if (r.genome.part_count() != r.part_count) {
    throw std::invalid_argument("part_count does not match the genome's border columns");
  }
  if (r.parent_ids.size() > 2) throw std::invalid_argument("more than two parents");
  return r;
}

inline void write_archive(std::ostream& out, const RunArchive& archive) {
  const nlohmann::json header = {{"format", std::string(kArchiveFormat)},
                                 {"version", kArchiveVersion},
                                 {"config", config_to_json(archive.config)}};
  out << header.dump() << '\n';
  for (const LineageRecord& r : archive.records) out << record_to_json(r).dump() << '\n';
}

inline RunArchive read_archive(std::istream& in) {
  RunArchive archive;
  std::string line;
  if (!std::getline(in, line) || detail::trim(line).empty()) throw ArchiveError("missing header");
  const nlohmann::json header = nlohmann::json::parse(line, nullptr, false);
  if (header.is_discarded() || !header.is_object() || !header.contains("format") ||
      header["format"] != kArchiveFormat) {
    throw ArchiveError("missing header: first line is not a symbiote archive header");
  }
  if (!header.contains("version") || header["version"] != kArchiveVersion) {
    throw ArchiveError("unsupported archive version " +
                       (header.contains("version") ? header["version"].dump() : "<none>"));
  }
  try {
    archive.config = config_from_json(header.at("config"));
  } catch (const std::exception& e) {
    throw ArchiveError(std::string("bad config in header: ") + e.what());
  }
  std::size_t index = 0;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) continue;
    try {
      const nlohmann::json j = nlohmann::json::parse(line);
      archive.records.push_back(record_from_json(j));
    } catch (const std::exception& e) {
      throw ArchiveError("record " + std::to_string(index) + " (line " + std::to_string(index + 2) +
                         "): " + e.what());
    }
    ++index;
  }
  return archive;
}

inline void save_archive(const RunArchive& archive, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArchiveError("cannot open '" + path.string() + "' for writing");
  write_archive(out, archive);
  if (!out) throw ArchiveError("write to '" + path.string() + "' failed");
}

inline RunArchive load_archive(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArchiveError("cannot open '" + path.string() + "'");
  return read_archive(in);
}

}  // namespace symbiote
