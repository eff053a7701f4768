#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cell_state.hpp"
#include "grid.hpp"

namespace symbiote {

/// A rectangular sub-region of a genome occupied by one fused part.
struct PartRegion {
  int x_offset = 0;
  int y_offset = 0;
  int width = 0;
  int height = 0;

  friend auto operator<=>(const PartRegion&, const PartRegion&) = default;
};

/// The heritable t = 0 seed matrix.
///
/// Cells are White, Red (the generic live state) or Purple. Purple only ever
/// appears as complete, width-1 columns separating parts; every part spans the
/// full height, so the parts plus the border columns tile the matrix exactly
/// and the part list is a function of the matrix.
class Genome {
 public:
  Genome() = default;

  /// Single-part genome; `cells` is row-major and must not contain Purple.
  Genome(int width, int height, std::vector<CellState> cells)
      : width_(width), height_(height), cells_(std::move(cells)) {
    normalise();
  }

  /// Builds a genome from rows of text: 'o' or '*' live, '.' dead, '|' border.
  static Genome from_rows(const std::vector<std::string_view>& rows) {
    if (rows.empty()) throw std::invalid_argument("genome needs at least one row");
    const auto width = static_cast<int>(rows.front().size());
    std::vector<CellState> cells;
    cells.reserve(rows.size() * rows.front().size());
    for (std::string_view row : rows) {
      if (static_cast<int>(row.size()) != width) {
        throw std::invalid_argument("genome rows must have equal length");
      }
      for (char ch : row) {
        switch (ch) {
          case '.': cells.push_back(CellState::White); break;
          case 'o':
          case '*': cells.push_back(CellState::Red); break;
          case '|': cells.push_back(CellState::Purple); break;
          default: throw std::invalid_argument(std::string("bad genome character '") + ch + "'");
        }
      }
    }
    return Genome(width, static_cast<int>(rows.size()), std::move(cells), kAllowBorders);
  }

  /// Genome from an arbitrary matrix; any live state counts as live.
  static Genome from_matrix(int width, int height, std::vector<CellState> cells) {
    return Genome(width, height, std::move(cells), kAllowBorders);
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  const std::vector<CellState>& cells() const noexcept { return cells_; }
  const std::vector<PartRegion>& parts() const noexcept { return parts_; }
  int part_count() const noexcept { return static_cast<int>(parts_.size()); }
  bool is_symbiote() const noexcept { return parts_.size() > 1; }

  CellState at(int x, int y) const { return cells_.at(index(x, y)); }
  bool is_live(int x, int y) const { return at(x, y) == CellState::Red; }
  bool is_border_column(int x) const { return at(x, 0) == CellState::Purple; }

  /// Sets a non-border cell live or dead.
  void set_live(int x, int y, bool live) {
    CellState& c = cells_.at(index(x, y));
    if (c == CellState::Purple) throw std::logic_error("cannot overwrite a border cell");
    c = live ? CellState::Red : CellState::White;
  }

  std::int64_t live_count() const noexcept {
    return std::count(cells_.begin(), cells_.end(), CellState::Red);
  }

  std::int64_t live_count(const PartRegion& part) const {
    std::int64_t n = 0;
    for (int y = part.y_offset; y < part.y_offset + part.height; ++y) {
      for (int x = part.x_offset; x < part.x_offset + part.width; ++x) n += is_live(x, y);
    }
    return n;
  }

  /// The matrix of one part, as a stand-alone single-part genome.
  Genome extract_part(int part_index) const {
    const PartRegion& p = part_at(part_index);
    std::vector<CellState> out;
    out.reserve(static_cast<std::size_t>(p.width) * static_cast<std::size_t>(p.height));
    for (int y = p.y_offset; y < p.y_offset + p.height; ++y) {
      for (int x = p.x_offset; x < p.x_offset + p.width; ++x) out.push_back(at(x, y));
    }
    return Genome(p.width, p.height, std::move(out));
  }

  /// Left-right reflection; part order reverses.
  Genome mirrored() const {
    std::vector<CellState> out;
    out.reserve(cells_.size());
    for (int y = 0; y < height_; ++y) {
      for (int x = width_ - 1; x >= 0; --x) out.push_back(at(x, y));
    }
    return Genome(width_, height_, std::move(out), kAllowBorders);
  }

  const PartRegion& part_at(int part_index) const {
    if (part_index < 0 || part_index >= part_count()) {
      throw std::out_of_range("part index " + std::to_string(part_index) + " out of range for " +
                              std::to_string(part_count()) + "-part genome");
    }
    return parts_[static_cast<std::size_t>(part_index)];
  }

  /// Places the genome on a t = 0 grid with its top-left corner at (x0, y0).
  /// Live cells take `live_colour`; borders stay Purple.
  void paint(Grid& grid, std::int64_t x0, std::int64_t y0, CellState live_colour) const {
    for (int y = 0; y < height_; ++y) {
      for (int x = 0; x < width_; ++x) {
        const CellState c = at(x, y);
        if (c == CellState::Red) grid.set(x0 + x, y0 + y, live_colour);
        else if (c == CellState::Purple) grid.set(x0 + x, y0 + y, CellState::Purple);
      }
    }
  }

  Grid to_grid(CellState live_colour = CellState::Red, std::int64_t x0 = 0,
               std::int64_t y0 = 0) const {
    Grid g;
    paint(g, x0, y0, live_colour);
    return g;
  }

  friend bool operator==(const Genome& a, const Genome& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.cells_ == b.cells_;
  }

  /// Total order used to canonicalise contest placement.
  friend std::strong_ordering operator<=>(const Genome& a, const Genome& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    if (auto c = a.height_ <=> b.height_; c != 0) return c;
    return a.cells_ <=> b.cells_;
  }

 private:
  struct AllowBorders {};
  static constexpr AllowBorders kAllowBorders{};

  Genome(int width, int height, std::vector<CellState> cells, AllowBorders)
      : width_(width), height_(height), cells_(std::move(cells)) {
    normalise(true);
  }

  std::size_t index(int x, int y) const {
    if (x < 0 || y < 0 || x >= width_ || y >= height_) {
      throw std::out_of_range("genome cell (" + std::to_string(x) + ", " + std::to_string(y) +
                              ") outside " + std::to_string(width_) + "x" +
                              std::to_string(height_));
    }
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  void normalise(bool allow_borders = false) {
    if (width_ <= 0 || height_ <= 0) throw std::invalid_argument("genome dimensions must be positive");
    if (cells_.size() != static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_)) {
      throw std::invalid_argument("genome cell count does not match its dimensions");
    }
    for (CellState& c : cells_) {
      if (is_alive(c)) c = CellState::Red;
      if (c == CellState::Purple && !allow_borders) {
        throw std::invalid_argument("single-part genome cannot contain border cells");
      }
    }
    parts_.clear();
    int start = 0;
    for (int x = 0; x <= width_; ++x) {
      const bool border = x < width_ && column_is_border(x);
      if (x == width_ || border) {
        if (x == start) throw std::invalid_argument("border column at genome edge or doubled");
        parts_.push_back({start, 0, x - start, height_});
        start = x + 1;
      }
    }
  }

  bool column_is_border(int x) const {
    int purple = 0;
    for (int y = 0; y < height_; ++y) purple += at(x, y) == CellState::Purple;
    if (purple != 0 && purple != height_) {
      throw std::invalid_argument("border column " + std::to_string(x) + " is incomplete");
    }
    return purple == height_;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<CellState> cells_;
  std::vector<PartRegion> parts_;
};

}  // namespace symbiote
