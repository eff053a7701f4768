#pragma once

// CSV emission for analysis reports. Headers follow the row and column labels
// of the published tables so the outputs can be compared side by side.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>

#include "analysis.hpp"

namespace symbiote {

inline std::string format_fixed(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

inline std::string format_general(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  std::string s = buf;
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

/// Matrix in the published layout: rows M = 5..0, columns N = 0..5, with
/// row totals, a column-total row and the grand total.
inline void write_matrix_csv(std::ostream& out, const CountMatrix& m, std::string_view focal,
                             std::string_view other) {
  out << "M " << focal << " \\ N " << other;
  for (int n = 0; n <= CountMatrix::kMax; ++n) out << ',' << n;
  out << ",Row total\n";
  for (int mi = CountMatrix::kMax; mi >= 0; --mi) {
    out << mi;
    for (int n = 0; n <= CountMatrix::kMax; ++n) {
      out << ',';
      if (mi + n <= CountMatrix::kMax) out << m.at(mi, n);
    }
    out << ',' << m.row_total(mi) << '\n';
  }
  out << "Column total";
  for (int n = 0; n <= CountMatrix::kMax; ++n) out << ',' << m.column_total(n);
  out << ',' << m.total() << '\n';
}

inline void write_species_csv(std::ostream& out, const AnalysisReport& r) {
  out << "run,root_id,part_count,members\n";
  for (std::size_t run = 0; run < r.species.size(); ++run) {
    for (const Species& s : r.species[run]) {
      out << run << ',' << s.root_id << ',' << s.part_count << ',' << s.member_ids.size() << '\n';
    }
  }
}

inline void write_pairs_csv(std::ostream& out, const AnalysisReport& r) {
  out << "run,species_root,part_count,most_id,most_children,least_id,least_children\n";
  for (const AnalyzedPair& p : r.pairs) {
    out << p.run << ',' << p.pair.species_root << ',' << p.pair.part_count << ',' << p.most.id
        << ',' << p.most.children << ',' << p.least.id << ',' << p.least.children << '\n';
  }
}

inline void write_classifications_csv(std::ostream& out, const AnalysisReport& r) {
  out << "run,species_root,rank,seed_id,part,role,benefit,interaction,"
         "delta_red,delta_blue,delta_orange,delta_green,weighted_inside,growth_alone\n";
  for (const AnalyzedPair& p : r.pairs) {
    for (const auto* seed : {&p.most, &p.least}) {
      for (const PartClassification& c : seed->classification.parts) {
        out << p.run << ',' << p.pair.species_root << ',' << (seed == &p.most ? "most" : "least")
            << ',' << seed->id << ',' << c.part_index << ',' << to_string(c.role) << ','
            << to_string(c.benefit) << ',' << to_string(c.interaction) << ','
            << c.colour_deltas.red << ',' << c.colour_deltas.blue << ',' << c.colour_deltas.orange
            << ',' << c.colour_deltas.green << ',' << format_fixed(c.growth_inside) << ','
            << c.growth_alone << '\n';
      }
    }
  }
}

inline void write_growth_csv(std::ostream& out, const AnalysisReport& r) {
  out << "Number of parts in seed,Average growth least prolific,Average growth most prolific,"
         "Count least prolific,Count most prolific\n";
  for (const GrowthRow& g : r.growth) {
    out << g.label << ',' << format_fixed(g.least_mean, 1) << ',' << format_fixed(g.most_mean, 1)
        << ',' << g.least_count << ',' << g.most_count << '\n';
  }
}

/// Per-part growth together (weighted colours) and apart, one row each.
inline void write_part_growth_csv(std::ostream& out, const AnalysisReport& r) {
  out << "run,seed_id,rank,part,setting,Red,Blue,Orange,Green,Weighted total\n";
  for (const AnalyzedPair& p : r.pairs) {
    for (const auto* seed : {&p.most, &p.least}) {
      const char* rank = seed == &p.most ? "most" : "least";
      for (const PartClassification& c : seed->classification.parts) {
        const ColourCensus& d = c.colour_deltas;
        out << p.run << ',' << seed->id << ',' << rank << ',' << c.part_index << ",together,"
            << d.red << ',' << d.blue << ',' << d.orange << ',' << d.green << ','
            << format_fixed(c.growth_inside) << '\n';
        out << p.run << ',' << seed->id << ',' << rank << ',' << c.part_index << ",apart,"
            << c.growth_alone << ",0,0,0," << format_fixed(static_cast<double>(c.growth_alone))
            << '\n';
      }
    }
  }
}

inline void write_stats_csv(std::ostream& out, const AnalysisReport& r) {
  out << "test,a,b,c,d,odds_ratio,p_value\n";
  for (const FisherResult& f : r.fisher) {
    out << f.name << ',' << f.table.a << ',' << f.table.b << ',' << f.table.c << ',' << f.table.d
        << ',' << format_general(f.odds_ratio) << ',' << format_general(f.p_value) << '\n';
  }
}

inline void write_trend_csv(std::ostream& out, const AnalysisReport& r) {
  const TrendSummary& t = r.trend;
  out << "dimension,row,shift,expected_sign,matches\n";
  out << "management,zero managers," << t.zero_managers << ",-,\n";
  out << "management,one manager," << t.one_manager << ",+," << t.toward_one_manager() << '\n';
  out << "mutualism,zero outsiders," << t.zero_outsiders << ",+," << t.toward_zero_outsiders()
      << '\n';
  out << "mutualism,two outsiders," << t.two_outsiders << ",-,\n";
  out << "interaction,zero soloists," << t.zero_soloists << ",+," << t.toward_zero_soloists()
      << '\n';
  out << "interaction,one soloist," << t.one_soloist << ",-,\n";
}

/// Writes every report file into `dir`, creating it if needed.
inline void write_report(const AnalysisReport& r, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto emit = [&](const char* name, auto&& writer) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    writer(out);
  };
  emit("species.csv", [&](std::ostream& o) { write_species_csv(o, r); });
  emit("pairs.csv", [&](std::ostream& o) { write_pairs_csv(o, r); });
  emit("classifications.csv", [&](std::ostream& o) { write_classifications_csv(o, r); });
  emit("table5.csv", [&](std::ostream& o) { write_growth_csv(o, r); });
  emit("table6.csv", [&](std::ostream& o) { write_matrix_csv(o, r.managers_most, "managers", "workers"); });
  emit("table7.csv", [&](std::ostream& o) { write_matrix_csv(o, r.managers_least, "managers", "workers"); });
  emit("table8.csv", [&](std::ostream& o) { write_matrix_csv(o, r.managers_diff, "managers", "workers"); });
  emit("table9.csv", [&](std::ostream& o) { write_part_growth_csv(o, r); });
  emit("table10.csv", [&](std::ostream& o) { write_matrix_csv(o, r.outsiders_diff, "outsiders", "insiders"); });
  emit("table11.csv", [&](std::ostream& o) { write_matrix_csv(o, r.soloists_diff, "soloists", "ensemblists"); });
  emit("stats.csv", [&](std::ostream& o) { write_stats_csv(o, r); });
  emit("trend.csv", [&](std::ostream& o) { write_trend_csv(o, r); });
}

}  // namespace symbiote
