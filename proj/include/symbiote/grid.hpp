#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cell_state.hpp"

namespace symbiote {

struct Cell {
  std::int64_t x = 0;
  std::int64_t y = 0;
  CellState state = CellState::White;

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct Bounds {
  std::int64_t min_x = 0;
  std::int64_t min_y = 0;
  std::int64_t max_x = 0;
  std::int64_t max_y = 0;

  std::int64_t width() const noexcept { return max_x - min_x + 1; }
  std::int64_t height() const noexcept { return max_y - min_y + 1; }
};

/// Raised when a live cell leaves the configured safety extent.
class ExtentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct BitCount {
  std::uint64_t b0, b1, b2;
};

// Bit-sliced population count of eight neighbour words, modulo 8.
inline BitCount count8(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d,
                       std::uint64_t e, std::uint64_t f, std::uint64_t g,
                       std::uint64_t h) noexcept {
  const std::uint64_t s_abc = a ^ b ^ c;
  const std::uint64_t c_abc = (a & b) | (c & (a ^ b));
  const std::uint64_t s_def = d ^ e ^ f;
  const std::uint64_t c_def = (d & e) | (f & (d ^ e));
  const std::uint64_t s_gh = g ^ h;
  const std::uint64_t c_gh = g & h;
  const std::uint64_t b0 = s_abc ^ s_def ^ s_gh;
  const std::uint64_t c_ones = (s_abc & s_def) | (s_gh & (s_abc ^ s_def));
  const std::uint64_t t = c_abc ^ c_def ^ c_gh;
  const std::uint64_t t_carry = (c_abc & c_def) | (c_gh & (c_abc ^ c_def));
  const std::uint64_t b1 = t ^ c_ones;
  const std::uint64_t b2 = t_carry ^ (t & c_ones);
  return {b0, b1, b2};
}

}  // namespace detail

/// Sparse, unbounded grid of cell states.
///
/// Live cells are stored in 64x64 tiles of three bit planes: `alive`, `ro`
/// (red or orange) and `pure` (red or blue). Only tiles holding at least one
/// live cell are kept, sorted by (tile_y, tile_x), so two grids holding the
/// same cells always have identical storage. Purple border cells are kept in a
/// separate sorted list and only exist while time() == 0.
class Grid {
 public:
  static constexpr std::int64_t kDefaultExtent = 10'000;

  Grid() = default;
  explicit Grid(std::int64_t extent) : extent_(extent) {
    if (extent <= 0) throw std::invalid_argument("grid extent must be positive");
  }

  std::uint64_t time() const noexcept { return time_; }
  std::int64_t extent() const noexcept { return extent_; }
  void set_extent(std::int64_t extent) {
    if (extent <= 0) throw std::invalid_argument("grid extent must be positive");
    extent_ = extent;
  }

  bool empty() const noexcept { return tiles_.empty() && purple_.empty(); }

  CellState at(std::int64_t x, std::int64_t y) const {
    if (const Tile* t = find({y >> kShift, x >> kShift})) {
      const std::uint64_t bit = std::uint64_t{1} << (x & kMask);
      const auto r = static_cast<std::size_t>(y & kMask);
      if (t->alive[r] & bit) return decode(t->ro[r] & bit, t->pure[r] & bit);
    }
    if (std::binary_search(purple_.begin(), purple_.end(), std::pair{y, x})) {
      return CellState::Purple;
    }
    return CellState::White;
  }

  void set(std::int64_t x, std::int64_t y, CellState state) {
    if (state != CellState::White) check_extent(x, y);
    const auto purple_it = std::lower_bound(purple_.begin(), purple_.end(), std::pair{y, x});
    const bool was_purple = purple_it != purple_.end() && *purple_it == std::pair{y, x};
    if (state == CellState::Purple) {
      if (time_ != 0) throw std::logic_error("purple cells may only exist at t = 0");
      clear_live(x, y);
      if (!was_purple) purple_.insert(purple_it, {y, x});
      return;
    }
    if (was_purple) purple_.erase(purple_it);
    if (state == CellState::White) {
      clear_live(x, y);
      return;
    }
    const TileKey key{y >> kShift, x >> kShift};
    auto it = std::lower_bound(tiles_.begin(), tiles_.end(), key,
                               [](const Tile& t, const TileKey& k) { return t.key < k; });
    if (it == tiles_.end() || it->key != key) it = tiles_.insert(it, Tile{key});
    const std::uint64_t bit = std::uint64_t{1} << (x & kMask);
    const auto r = static_cast<std::size_t>(y & kMask);
    const bool ro = state == CellState::Red || state == CellState::Orange;
    const bool pure = state == CellState::Red || state == CellState::Blue;
    it->alive[r] |= bit;
    it->ro[r] = ro ? (it->ro[r] | bit) : (it->ro[r] & ~bit);
    it->pure[r] = pure ? (it->pure[r] | bit) : (it->pure[r] & ~bit);
  }

  std::int64_t live_count() const noexcept {
    std::int64_t n = 0;
    for (const Tile& t : tiles_) {
      for (std::uint64_t w : t.alive) n += std::popcount(w);
    }
    return n;
  }

  ColourCensus census() const noexcept {
    ColourCensus c;
    for (const Tile& t : tiles_) {
      for (std::size_t r = 0; r < kSize; ++r) {
        const std::uint64_t a = t.alive[r], ro = t.ro[r], pure = t.pure[r];
        c.red += std::popcount(ro & pure);
        c.blue += std::popcount(pure & ~ro);
        c.orange += std::popcount(ro & ~pure);
        c.green += std::popcount(a & ~ro & ~pure);
      }
    }
    return c;
  }

  /// Every non-White cell, ordered by row then column.
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    for (const Tile& t : tiles_) {
      for (std::size_t r = 0; r < kSize; ++r) {
        std::uint64_t w = t.alive[r];
        while (w != 0) {
          const int b = std::countr_zero(w);
          w &= w - 1;
          const std::uint64_t bit = std::uint64_t{1} << b;
          out.push_back({t.key.tx * kSpan + b, t.key.ty * kSpan + static_cast<std::int64_t>(r),
                         decode(t.ro[r] & bit, t.pure[r] & bit)});
        }
      }
    }
    for (const auto& [y, x] : purple_) out.push_back({x, y, CellState::Purple});
    std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) {
      return std::pair{a.y, a.x} < std::pair{b.y, b.x};
    });
    return out;
  }

  /// Bounding box of all non-White cells, or nullopt for an empty grid.
  std::optional<Bounds> bounds() const {
    if (empty()) return std::nullopt;
    Bounds b{INT64_MAX, INT64_MAX, INT64_MIN, INT64_MIN};
    auto include = [&b](std::int64_t x, std::int64_t y) {
      b.min_x = std::min(b.min_x, x);
      b.max_x = std::max(b.max_x, x);
      b.min_y = std::min(b.min_y, y);
      b.max_y = std::max(b.max_y, y);
    };
    for (const Tile& t : tiles_) {
      std::uint64_t any = 0;
      for (std::size_t r = 0; r < kSize; ++r) {
        if (t.alive[r] == 0) continue;
        any |= t.alive[r];
        const std::int64_t y = t.key.ty * kSpan + static_cast<std::int64_t>(r);
        b.min_y = std::min(b.min_y, y);
        b.max_y = std::max(b.max_y, y);
      }
      b.min_x = std::min(b.min_x, t.key.tx * kSpan + std::countr_zero(any));
      b.max_x = std::max(b.max_x, t.key.tx * kSpan + 63 - std::countl_zero(any));
    }
    for (const auto& [y, x] : purple_) include(x, y);
    return b;
  }

  /// Advances one B3/S23 step in place. On ExtentError the grid is unchanged.
  void advance(Ruleset ruleset) {
    std::vector<Tile> next;
    step_into(next, ruleset);
    tiles_.swap(next);
    purple_.clear();
    ++time_;
  }

  void advance(Ruleset ruleset, std::uint64_t steps) {
    std::vector<Tile> next;
    for (std::uint64_t i = 0; i < steps; ++i) {
      step_into(next, ruleset);
      tiles_.swap(next);
      purple_.clear();
      ++time_;
    }
  }

  /// Every live cell becomes Red; Purple is dropped.
  Grid projected_binary() const {
    Grid g = *this;
    g.purple_.clear();
    for (Tile& t : g.tiles_) {
      t.ro = t.alive;
      t.pure = t.alive;
    }
    return g;
  }

  /// Orange becomes Red, Green becomes Blue, Purple becomes White.
  Grid recoloured_to_immigration() const {
    Grid g = *this;
    g.purple_.clear();
    for (Tile& t : g.tiles_) t.pure = t.alive;
    return g;
  }

  /// Cell-for-cell equality; time and extent are not compared.
  friend bool operator==(const Grid& a, const Grid& b) {
    return a.tiles_ == b.tiles_ && a.purple_ == b.purple_;
  }

 private:
  static constexpr int kShift = 6;
  static constexpr std::int64_t kMask = 63;
  static constexpr std::size_t kSize = 64;
  static constexpr std::int64_t kSpan = 64;
  using Plane = std::array<std::uint64_t, kSize>;

  struct TileKey {
    std::int64_t ty = 0;
    std::int64_t tx = 0;
    friend auto operator<=>(const TileKey&, const TileKey&) = default;
  };

  struct Tile {
    TileKey key;
    Plane alive{};
    Plane ro{};
    Plane pure{};

    bool is_empty() const noexcept {
      for (std::uint64_t w : alive) {
        if (w != 0) return false;
      }
      return true;
    }
    friend bool operator==(const Tile&, const Tile&) = default;
  };

  static CellState decode(bool ro, bool pure) noexcept {
    if (ro) return pure ? CellState::Red : CellState::Orange;
    return pure ? CellState::Blue : CellState::Green;
  }

  const Tile* find(TileKey key) const noexcept {
    auto it = std::lower_bound(tiles_.begin(), tiles_.end(), key,
                               [](const Tile& t, const TileKey& k) { return t.key < k; });
    return (it != tiles_.end() && it->key == key) ? &*it : nullptr;
  }

  void check_extent(std::int64_t x, std::int64_t y) const {
    if (x < -extent_ || x > extent_ || y < -extent_ || y > extent_) {
      throw ExtentError("cell (" + std::to_string(x) + ", " + std::to_string(y) +
                        ") lies outside the safety extent of " + std::to_string(extent_));
    }
  }

  void clear_live(std::int64_t x, std::int64_t y) {
    const TileKey key{y >> kShift, x >> kShift};
    auto it = std::lower_bound(tiles_.begin(), tiles_.end(), key,
                               [](const Tile& t, const TileKey& k) { return t.key < k; });
    if (it == tiles_.end() || it->key != key) return;
    const std::uint64_t keep = ~(std::uint64_t{1} << (x & kMask));
    const auto r = static_cast<std::size_t>(y & kMask);
    it->alive[r] &= keep;
    it->ro[r] &= keep;
    it->pure[r] &= keep;
    if (it->is_empty()) tiles_.erase(it);
  }

  // Keys of every tile that can hold a live cell after the next step.
  std::vector<TileKey> step_targets() const {
    std::vector<TileKey> keys;
    keys.reserve(tiles_.size() * 3);
    for (const Tile& t : tiles_) {
      std::uint64_t left = 0, right = 0;
      for (std::uint64_t w : t.alive) {
        left |= w & 1;
        right |= w >> 63;
      }
      const bool top = t.alive.front() != 0, bottom = t.alive.back() != 0;
      const auto [ty, tx] = t.key;
      keys.push_back(t.key);
      if (top) keys.push_back({ty - 1, tx});
      if (bottom) keys.push_back({ty + 1, tx});
      if (left) keys.push_back({ty, tx - 1});
      if (right) keys.push_back({ty, tx + 1});
      if (t.alive.front() & 1) keys.push_back({ty - 1, tx - 1});
      if (t.alive.front() >> 63) keys.push_back({ty - 1, tx + 1});
      if (t.alive.back() & 1) keys.push_back({ty + 1, tx - 1});
      if (t.alive.back() >> 63) keys.push_back({ty + 1, tx + 1});
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
  }

  void step_into(std::vector<Tile>& next, Ruleset ruleset) const {
    next.clear();
    for (const TileKey& key : step_targets()) {
      std::array<std::array<const Tile*, 3>, 3> nb{};
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) nb[dy + 1][dx + 1] = find({key.ty + dy, key.tx + dx});
      }
      Tile out{key};
      if (compute_tile(nb, ruleset, out)) {
        check_tile_extent(out);
        next.push_back(out);
      }
    }
  }

  struct Window {
    std::uint64_t west, mid, east;
  };

  // Row k of the 66-row window around the centre tile (k = 0 is the row above).
  template <class PlaneFn>
  static Window window_row(const std::array<std::array<const Tile*, 3>, 3>& nb, int k,
                           PlaneFn plane) noexcept {
    const int yy = k - 1;
    const int band = yy < 0 ? 0 : (yy >= 64 ? 2 : 1);
    const auto r = static_cast<std::size_t>(yy & 63);
    const std::uint64_t w = nb[band][0] ? plane(*nb[band][0], r) : 0;
    const std::uint64_t c = nb[band][1] ? plane(*nb[band][1], r) : 0;
    const std::uint64_t e = nb[band][2] ? plane(*nb[band][2], r) : 0;
    return {(c << 1) | (w >> 63), c, (c >> 1) | (e << 63)};
  }

  template <class PlaneFn>
  static detail::BitCount plane_count(const std::array<std::array<const Tile*, 3>, 3>& nb,
                                      int r, PlaneFn plane) noexcept {
    const Window up = window_row(nb, r, plane);
    const Window row = window_row(nb, r + 1, plane);
    const Window down = window_row(nb, r + 2, plane);
    return detail::count8(up.west, up.mid, up.east, row.west, row.east, down.west, down.mid,
                          down.east);
  }

  static bool compute_tile(const std::array<std::array<const Tile*, 3>, 3>& nb, Ruleset ruleset,
                           Tile& out) noexcept {
    std::array<Window, 66> win;
    std::array<std::uint64_t, 66> any;
    const auto alive_plane = [](const Tile& t, std::size_t r) { return t.alive[r]; };
    for (int k = 0; k < 66; ++k) {
      win[k] = window_row(nb, k, alive_plane);
      any[k] = win[k].west | win[k].mid | win[k].east;
    }
    const Tile* centre = nb[1][1];
    bool nonempty = false;
    for (int r = 0; r < 64; ++r) {
      if ((any[r] | any[r + 1] | any[r + 2]) == 0) continue;
      const Window& up = win[r];
      const Window& row = win[r + 1];
      const Window& down = win[r + 2];
      const detail::BitCount n = detail::count8(up.west, up.mid, up.east, row.west, row.east,
                                                down.west, down.mid, down.east);
      const std::uint64_t three = n.b0 & n.b1 & ~n.b2;
      const std::uint64_t two = ~n.b0 & n.b1 & ~n.b2;
      const std::uint64_t alive = row.mid;
      const std::uint64_t survive = alive & (two | three);
      const std::uint64_t birth = three & ~alive;
      const auto ri = static_cast<std::size_t>(r);
      std::uint64_t ro = centre ? centre->ro[ri] & survive : 0;
      std::uint64_t pure = centre ? centre->pure[ri] & survive : 0;
      if (birth != 0) {
        switch (ruleset) {
          case Ruleset::Life:
            ro |= birth;
            pure |= birth;
            break;
          case Ruleset::Immigration: {
            const auto c = plane_count(nb, r, [](const Tile& t, std::size_t i) { return t.ro[i]; });
            ro |= birth & (c.b1 | c.b2);
            pure |= birth;
            break;
          }
          case Ruleset::Management: {
            const auto c = plane_count(nb, r, [](const Tile& t, std::size_t i) { return t.ro[i]; });
            const auto red = plane_count(
                nb, r, [](const Tile& t, std::size_t i) { return t.ro[i] & t.pure[i]; });
            const auto blue = plane_count(
                nb, r, [](const Tile& t, std::size_t i) { return t.pure[i] & ~t.ro[i]; });
            // Within the birth mask every count is at most 3.
            ro |= birth & (c.b1 | c.b2);
            pure |= birth & ((red.b0 & red.b1) | (blue.b0 & blue.b1));
            break;
          }
        }
      }
      const std::uint64_t next_alive = survive | birth;
      out.alive[ri] = next_alive;
      out.ro[ri] = ro;
      out.pure[ri] = pure;
      nonempty |= next_alive != 0;
    }
    return nonempty;
  }

  void check_tile_extent(const Tile& t) const {
    const std::int64_t x0 = t.key.tx * kSpan, y0 = t.key.ty * kSpan;
    if (x0 >= -extent_ && x0 + 63 <= extent_ && y0 >= -extent_ && y0 + 63 <= extent_) return;
    for (std::size_t r = 0; r < kSize; ++r) {
      std::uint64_t w = t.alive[r];
      while (w != 0) {
        const int b = std::countr_zero(w);
        w &= w - 1;
        check_extent(x0 + b, y0 + static_cast<std::int64_t>(r));
      }
    }
  }

  std::vector<Tile> tiles_;
  std::vector<std::pair<std::int64_t, std::int64_t>> purple_;  // (y, x), sorted
  std::uint64_t time_ = 0;
  std::int64_t extent_ = kDefaultExtent;
};

inline Grid step(const Grid& grid, Ruleset ruleset) {
  Grid next = grid;
  next.advance(ruleset);
  return next;
}

inline Grid run(Grid grid, std::uint64_t steps, Ruleset ruleset) {
  grid.advance(ruleset, steps);
  return grid;
}

inline ColourCensus census(const Grid& grid) noexcept { return grid.census(); }

inline Grid project_binary(const Grid& grid) { return grid.projected_binary(); }

inline Grid recolour_management_to_immigration(const Grid& grid) {
  return grid.recoloured_to_immigration();
}

}  // namespace symbiote
