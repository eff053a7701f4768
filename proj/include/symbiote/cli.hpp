#pragma once

// Command-line front end: evolve, analyze, classify, play, fisher, replay.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "analysis.hpp"
#include "archive_io.hpp"
#include "arena.hpp"
#include "classify.hpp"
#include "evolution.hpp"
#include "fisher.hpp"
#include "report.hpp"
#include "rle.hpp"

namespace symbiote {

namespace detail {

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// An --rle argument is a file path when such a file exists, else inline RLE text.
inline std::string rle_argument(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_text_file(arg);
  return arg;
}

inline EvolutionConfig load_config_file(const std::string& path) {
  if (path.empty()) return {};
  return parse_config(read_text_file(path));
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  CLI::App app{"Evolve and analyse symbiotic Game of Life seeds", "symbiote"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string config_path, out_path;
  std::optional<std::uint64_t> rng_seed;
  auto* evolve_cmd = app.add_subcommand("evolve", "Run an evolution and write its archive");
  evolve_cmd->add_option("--config", config_path, "key = value configuration file")
      ->check(CLI::ExistingFile);
  evolve_cmd->add_option("--out", out_path, "archive to write")->required();
  evolve_cmd->add_option("--rng-seed", rng_seed, "overrides rng_seed from the config");
  bool quiet = false;
  evolve_cmd->add_flag("--quiet", quiet, "no progress output");

  std::vector<std::string> archive_paths;
  std::uint64_t steps = kAnalysisSteps;
  std::string analyze_out;
  auto* analyze_cmd = app.add_subcommand("analyze", "Species, pairs, classifications and tables");
  analyze_cmd->add_option("--archive", archive_paths, "archive file (repeat to pool runs)")
      ->required()
      ->check(CLI::ExistingFile);
  analyze_cmd->add_option("--out", analyze_out, "output directory")->required();
  analyze_cmd->add_option("--steps", steps, "Management/Life steps per run");

  std::string classify_rle;
  std::uint64_t classify_steps = kAnalysisSteps;
  auto* classify_cmd = app.add_subcommand("classify", "Classify every part of one symbiote");
  classify_cmd->add_option("--rle", classify_rle, "RLE file or inline RLE text")->required();
  classify_cmd->add_option("--steps", classify_steps, "Management steps");

  std::vector<std::string> play_rles;
  std::string play_config;
  auto* play_cmd = app.add_subcommand("play", "One Immigration Game between two seeds");
  play_cmd->add_option("--rle", play_rles, "red seed, then blue seed")->required()->expected(2);
  play_cmd->add_option("--config", play_config, "configuration with time-limit keys")
      ->check(CLI::ExistingFile);

  std::vector<std::int64_t> fisher_cells;
  auto* fisher_cmd = app.add_subcommand("fisher", "Two-tailed Fisher exact p-value for [[a,b],[c,d]]");
  fisher_cmd->add_option("cells", fisher_cells, "a b c d")->required()->expected(4);

  std::string replay_archive, replay_out, replay_ruleset = "life";
  std::uint64_t replay_id = 0, replay_steps = kAnalysisSteps, replay_every = 0;
  std::optional<int> replay_focal;
  auto* replay_cmd = app.add_subcommand("replay", "Re-simulate an archived genome and export RLE frames");
  replay_cmd->add_option("--archive", replay_archive, "archive file")->required()->check(CLI::ExistingFile);
  replay_cmd->add_option("--id", replay_id, "record id")->required();
  replay_cmd->add_option("--steps", replay_steps, "steps to simulate");
  replay_cmd->add_option("--out", replay_out, "output directory")->required();
  replay_cmd->add_option("--every", replay_every, "frame interval (default: first and last only)");
  replay_cmd->add_option("--ruleset", replay_ruleset, "life, immigration or management")
      ->check(CLI::IsMember({"life", "immigration", "management"}));
  replay_cmd->add_option("--focal", replay_focal, "colour this part red, others blue (management)");

  std::vector<std::string> argv_store{"symbiote"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*evolve_cmd) {
      EvolutionConfig config = detail::load_config_file(config_path);
      if (rng_seed) config.rng_seed = *rng_seed;
      config.validate();
      const std::size_t per_gen = static_cast<std::size_t>(config.population_size);
      RunArchive archive = evolve(config, [&](std::size_t births) {
        if (!quiet && births % per_gen == 0) {
          err << "generation " << births / per_gen << "/" << config.generations << '\n';
        }
      });
      save_archive(archive, out_path);
      out << "wrote " << archive.records.size() << " records to " << out_path << '\n';
      return 0;
    }
    if (*analyze_cmd) {
      std::vector<RunArchive> archives;
      for (const std::string& p : archive_paths) archives.push_back(load_archive(p));
      const AnalysisReport report = analyze(archives, steps);
      write_report(report, analyze_out);
      out << "species: ";
      std::size_t total_species = 0;
      for (const auto& s : report.species) total_species += s.size();
      out << total_species << ", pairs: " << report.pairs.size() << '\n';
      write_stats_csv(out, report);
      return 0;
    }
    if (*classify_cmd) {
      const Genome g = genome_from_rle(detail::rle_argument(classify_rle));
      const SeedClassification s = classify_seed(g, classify_steps, worker_count());
      out << "part,role,benefit,interaction,delta_red,delta_blue,delta_orange,delta_green,"
             "weighted_inside,growth_alone\n";
      for (const PartClassification& c : s.parts) {
        out << c.part_index << ',' << to_string(c.role) << ',' << to_string(c.benefit) << ','
            << to_string(c.interaction) << ',' << c.colour_deltas.red << ','
            << c.colour_deltas.blue << ',' << c.colour_deltas.orange << ','
            << c.colour_deltas.green << ',' << format_fixed(c.growth_inside) << ','
            << c.growth_alone << '\n';
      }
      return 0;
    }
    if (*play_cmd) {
      const Genome red = genome_from_rle(detail::rle_argument(play_rles.at(0)));
      const Genome blue = genome_from_rle(detail::rle_argument(play_rles.at(1)));
      const EvolutionConfig config = detail::load_config_file(play_config);
      const GameOutcome o = play(red, blue, config.arena());
      out << "growth_red = " << o.growth_red << "\ngrowth_blue = " << o.growth_blue
          << "\nwinner = " << to_string(o.winner) << "\nsteps_played = " << o.steps_played << '\n';
      return 0;
    }
    if (*fisher_cmd) {
      const ContingencyTable t{fisher_cells[0], fisher_cells[1], fisher_cells[2], fisher_cells[3]};
      out << format_general(fisher_exact(t)) << '\n';
      return 0;
    }
    if (*replay_cmd) {
      const RunArchive archive = load_archive(replay_archive);
      const LineageIndex index(archive);
      const Genome& g = index.record(replay_id).genome;
      const Ruleset ruleset = ruleset_from_string(replay_ruleset);
      Grid grid = replay_focal ? recolour_focal(g, *replay_focal) : g.to_grid();
      std::filesystem::create_directories(replay_out);
      const std::uint64_t every = replay_every == 0 ? std::max<std::uint64_t>(replay_steps, 1) : replay_every;
      std::size_t frames = 0;
      auto write_frame = [&] {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%06llu.rle",
                      static_cast<unsigned long long>(grid.time()));
        std::ofstream f(std::filesystem::path(replay_out) / name, std::ios::binary);
        f << emit_rle(grid, rule_name(ruleset));
        ++frames;
      };
      write_frame();
      while (grid.time() < replay_steps) {
        const std::uint64_t n = std::min(every, replay_steps - grid.time());
        grid.advance(ruleset, n);
        write_frame();
      }
      out << "wrote " << frames << " frames to " << replay_out << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace symbiote
