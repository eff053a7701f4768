#pragma once

// Golly-compatible multi-state run-length encoding.
//
// State 0 is written '.', states 1..5 are 'A'..'E'. A "#CXRLE Pos=x,y" line
// carries the grid origin so that grids away from (0, 0) round-trip exactly.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cell_state.hpp"
#include "genome.hpp"
#include "grid.hpp"

namespace symbiote {

class RleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string_view rule_name(Ruleset r) noexcept {
  switch (r) {
    case Ruleset::Life: return "B3/S23";
    case Ruleset::Immigration: return "Immigration";
    case Ruleset::Management: return "Management";
  }
  return "Management";
}

struct RleDocument {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::int64_t origin_x = 0;
  std::int64_t origin_y = 0;
  std::string rule;
  Grid grid;
};

namespace detail {

class RleReader {
 public:
  explicit RleReader(std::string_view text) : text_(text) {}

  RleDocument read() {
    RleDocument doc;
    bool have_header = false;
    while (pos_ < text_.size()) {
      const std::size_t line_end = text_.find('\n', pos_);
      std::string_view line = text_.substr(pos_, line_end == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : line_end - pos_);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      const std::string_view trimmed = trim(line);
      if (trimmed.empty()) {
        next_line(line_end);
        continue;
      }
      if (trimmed.front() == '#') {
        if (trimmed.starts_with("#CXRLE")) read_cxrle(trimmed, doc);
        next_line(line_end);
        continue;
      }
      if (trimmed.front() == 'x') {
        read_header(trimmed, doc);
        have_header = true;
        next_line(line_end);
        break;
      }
      fail("expected header line 'x = W, y = H'");
    }
    if (!have_header) fail("missing header line");
    doc.grid = Grid(std::max<std::int64_t>(
        {Grid::kDefaultExtent, std::abs(doc.origin_x) + doc.width,
         std::abs(doc.origin_y) + doc.height}));
    read_body(doc);
    return doc;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw RleError("RLE line " + std::to_string(line_) + ", column " +
                   std::to_string(pos_ - line_start_ + 1) + " (offset " + std::to_string(pos_) +
                   "): " + what);
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }

  void next_line(std::size_t line_end) {
    pos_ = line_end == std::string_view::npos ? text_.size() : line_end + 1;
    line_start_ = pos_;
    ++line_;
  }

  static std::int64_t to_int(std::string_view s, bool& ok) {
    s = trim(s);
    ok = false;
    if (s.empty()) return 0;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) return 0;
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return 0;
      v = v * 10 + (s[i] - '0');
      if (v > (std::int64_t{1} << 40)) return 0;
    }
    ok = true;
    return neg ? -v : v;
  }

  void read_cxrle(std::string_view line, RleDocument& doc) {
    const std::size_t p = line.find("Pos=");
    if (p == std::string_view::npos) return;
    std::string_view rest = line.substr(p + 4);
    rest = rest.substr(0, rest.find(' '));
    const std::size_t comma = rest.find(',');
    bool okx = false, oky = false;
    if (comma != std::string_view::npos) {
      doc.origin_x = to_int(rest.substr(0, comma), okx);
      doc.origin_y = to_int(rest.substr(comma + 1), oky);
    }
    if (!okx || !oky) fail("malformed Pos in #CXRLE line");
  }

  void read_header(std::string_view line, RleDocument& doc) {
    bool have_x = false, have_y = false;
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string_view::npos) comma = line.size();
      const std::string_view item = line.substr(start, comma - start);
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) fail("malformed header item '" + std::string(item) + "'");
      const std::string_view key = trim(item.substr(0, eq));
      const std::string_view value = trim(item.substr(eq + 1));
      bool ok = false;
      if (key == "x") {
        doc.width = to_int(value, ok);
        have_x = ok && doc.width >= 0;
      } else if (key == "y") {
        doc.height = to_int(value, ok);
        have_y = ok && doc.height >= 0;
      } else if (key == "rule") {
        doc.rule = std::string(value);
      } else {
        fail("unknown header key '" + std::string(key) + "'");
      }
      start = comma + 1;
    }
    if (!have_x || !have_y) fail("header must give non-negative x and y");
  }

  void read_body(RleDocument& doc) {
    std::int64_t x = 0, y = 0;
    std::int64_t run = 0;
    bool have_run = false;
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == '\n') {
        ++pos_;
        line_start_ = pos_;
        ++line_;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        run = run * 10 + (ch - '0');
        if (run > (std::int64_t{1} << 40)) fail("run count too large");
        have_run = true;
        ++pos_;
        continue;
      }
      const std::int64_t n = have_run ? run : 1;
      if (have_run && n == 0) fail("zero run count");
      run = 0;
      have_run = false;
      if (ch == '!') {
        ++pos_;
        return;
      }
      if (ch == '$') {
        y += n;
        x = 0;
        if (y > doc.height) fail("more rows than the declared height");
        ++pos_;
        continue;
      }
      int state = -1;
      if (ch == '.' || ch == 'b') state = 0;
      else if (ch == 'o') state = 1;
      else if (ch >= 'A' && ch <= 'E') state = ch - 'A' + 1;
      if (state < 0) fail(std::string("unexpected character '") + ch + "'");
      if (y >= doc.height) fail("cells below the declared height");
      if (x + n > doc.width) fail("row longer than the declared width");
      if (state != 0) {
        for (std::int64_t i = 0; i < n; ++i) {
          doc.grid.set(doc.origin_x + x + i, doc.origin_y + y, static_cast<CellState>(state));
        }
      }
      x += n;
      ++pos_;
    }
    fail("unexpected end of input, missing '!'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  std::size_t line_ = 1;
};

inline char rle_symbol(CellState s) noexcept {
  return s == CellState::White ? '.' : static_cast<char>('A' + static_cast<int>(s) - 1);
}

class RleWriter {
 public:
  explicit RleWriter(std::size_t wrap) : wrap_(wrap) {}

  void token(std::int64_t n, char symbol) {
    std::string t = n > 1 ? std::to_string(n) : std::string();
    t += symbol;
    if (wrap_ != 0 && line_len_ + t.size() > wrap_) {
      body_ += '\n';
      line_len_ = 0;
    }
    body_ += t;
    line_len_ += t.size();
  }

  std::string take() { return std::move(body_); }

 private:
  std::string body_;
  std::size_t wrap_;
  std::size_t line_len_ = 0;
};

// Writes the cells within [x0, x0 + width) x [y0, y0 + height).
inline std::string emit_box(const Grid& grid, std::int64_t x0, std::int64_t y0,
                            std::int64_t width, std::int64_t height, std::string_view rule,
                            std::size_t wrap) {
  std::ostringstream out;
  if (x0 != 0 || y0 != 0 || grid.time() != 0) {
    out << "#CXRLE Pos=" << x0 << ',' << y0;
    if (grid.time() != 0) out << " Gen=" << grid.time();
    out << '\n';
  }
  out << "x = " << width << ", y = " << height << ", rule = " << rule << '\n';
  RleWriter w(wrap);
  std::int64_t cur_y = 0, cur_x = 0;
  std::int64_t pending_rows = 0;
  CellState run_state = CellState::White;
  std::int64_t run_len = 0;
  auto flush_run = [&] {
    if (run_len > 0) w.token(run_len, rle_symbol(run_state));
    run_len = 0;
  };
  for (const Cell& c : grid.cells()) {
    const std::int64_t cx = c.x - x0, cy = c.y - y0;
    if (cx < 0 || cy < 0 || cx >= width || cy >= height) continue;
    if (cy != cur_y) {
      flush_run();
      pending_rows += cy - cur_y;
      cur_y = cy;
      cur_x = 0;
    }
    if (pending_rows > 0) {
      w.token(pending_rows, '$');
      pending_rows = 0;
    }
    if (cx > cur_x) {
      if (run_state != CellState::White) flush_run();
      run_state = CellState::White;
      run_len += cx - cur_x;
    }
    if (run_state != c.state) flush_run();
    run_state = c.state;
    ++run_len;
    cur_x = cx + 1;
  }
  flush_run();
  w.token(1, '!');
  out << w.take() << '\n';
  return out.str();
}

}  // namespace detail

/// Parses a multi-state RLE pattern; errors carry line, column and offset.
inline RleDocument parse_rle(std::string_view text) { return detail::RleReader(text).read(); }

/// Canonical RLE for the bounding box of `grid`.
inline std::string emit_rle(const Grid& grid, std::string_view rule = rule_name(Ruleset::Management),
                            std::size_t wrap = 70) {
  const auto b = grid.bounds();
  if (!b) return detail::emit_box(grid, 0, 0, 0, 0, rule, wrap);
  return detail::emit_box(grid, b->min_x, b->min_y, b->width(), b->height(), rule, wrap);
}

/// RLE of a genome at its full matrix size (dead margins preserved).
inline std::string genome_to_rle(const Genome& genome, std::size_t wrap = 70) {
  return detail::emit_box(genome.to_grid(), 0, 0, genome.width(), genome.height(),
                          rule_name(Ruleset::Management), wrap);
}

inline Genome genome_from_rle(std::string_view text) {
  RleDocument doc = parse_rle(text);
  if (doc.width <= 0 || doc.height <= 0) throw RleError("genome RLE must have positive x and y");
  std::vector<CellState> cells(static_cast<std::size_t>(doc.width * doc.height), CellState::White);
  for (const Cell& c : doc.grid.cells()) {
    const std::int64_t x = c.x - doc.origin_x, y = c.y - doc.origin_y;
    cells[static_cast<std::size_t>(y * doc.width + x)] = c.state;
  }
  try {
    return Genome::from_matrix(static_cast<int>(doc.width), static_cast<int>(doc.height),
                               std::move(cells));
  } catch (const std::invalid_argument& e) {
    throw RleError(std::string("invalid genome: ") + e.what());
  }
}

}  // namespace symbiote
