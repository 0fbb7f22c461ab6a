#pragma once

#include <bitset>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "mincorner/errors.hpp"

namespace mincorner {

// Cell color code. 0 is white, 1..k are the palette colors.
using Color = std::uint8_t;

inline constexpr Color kWhite = 0;

// A set of color codes, used as the fill domain K of a K-extension.
class ColorSet {
 public:
  ColorSet() = default;
  ColorSet(std::initializer_list<int> colors) {
    for (int c : colors) bits_.set(static_cast<std::size_t>(c));
  }

  // {0, 1, ..., k}
  static ColorSet all(int palette_size) {
    ColorSet s;
    for (int c = 0; c <= palette_size; ++c) bits_set(s, c);
    return s;
  }
  // {0, c}
  static ColorSet restricted_to(Color c) { return ColorSet{0, c}; }

  void insert(Color c) { bits_.set(c); }
  bool contains(Color c) const { return bits_.test(c); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  std::vector<Color> to_vector() const;

  bool operator==(const ColorSet&) const = default;

 private:
  static void bits_set(ColorSet& s, int c) { s.bits_.set(static_cast<std::size_t>(c)); }
  std::bitset<256> bits_;
};

// A corner count: a finite number of corners or the infinite count assigned
// to the undefined row coloring. Kept as a real two-state value so that no
// arithmetic can ever overflow an "infinity" sentinel into a wrong minimum.
class CornerCount {
 public:
  constexpr CornerCount() = default;

  static constexpr CornerCount finite(std::uint64_t v) {
    CornerCount c;
    c.value_ = v;
    return c;
  }
  static constexpr CornerCount infinite() {
    CornerCount c;
    c.infinite_ = true;
    return c;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  std::uint64_t value() const {
    if (infinite_) throw Error("corner count is infinite");
    return value_;
  }

  friend CornerCount operator+(CornerCount a, CornerCount b) {
    if (a.infinite_ || b.infinite_) return infinite();
    return finite(a.value_ + b.value_);
  }
  CornerCount& operator+=(CornerCount o) { return *this = *this + o; }

  friend bool operator==(CornerCount a, CornerCount b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(CornerCount a, CornerCount b) {
    if (a.infinite_ || b.infinite_)
      return (a.infinite_ ? 1 : 0) <=> (b.infinite_ ? 1 : 0);
    return a.value_ <=> b.value_;
  }

 private:
  bool infinite_ = false;
  std::uint64_t value_ = 0;
};

// A row (or column) coloring of fixed length, or the undefined coloring
// produced by a conflicting merge. Cells are addressed 1-based.
class RowColoring {
 public:
  RowColoring() = default;  // length-0 row
  explicit RowColoring(std::vector<Color> cells) : cells_(std::move(cells)) {}

  static RowColoring bottom() {
    RowColoring r;
    r.bottom_ = true;
    return r;
  }
  static RowColoring white(std::size_t n) { return RowColoring(std::vector<Color>(n, kWhite)); }

  bool is_bottom() const { return bottom_; }
  std::size_t size() const {
    require_defined();
    return cells_.size();
  }
  Color at(std::size_t j) const {
    require_defined();
    if (j < 1 || j > cells_.size()) throw Error("row cell index out of range");
    return cells_[j - 1];
  }
  std::span<const Color> cells() const& {
    require_defined();
    return cells_;
  }
  std::span<const Color> cells() && = delete;
  const std::vector<Color>& cell_vector() const& {
    require_defined();
    return cells_;
  }
  std::vector<Color> cell_vector() && {
    require_defined();
    return std::move(cells_);
  }

  // Defined rows sort before bottom; defined rows compare lexicographically.
  auto operator<=>(const RowColoring&) const = default;

 private:
  void require_defined() const {
    if (bottom_) throw Error("operation on the undefined row coloring");
  }
  bool bottom_ = false;
  std::vector<Color> cells_;
};

// An m x n colored grid over palette {0, 1, ..., k}. Rows and columns are
// addressed 1-based; padded_at additionally exposes the all-white border at
// indices 0 and m+1 / n+1. Immutable after construction.
class ColorGrid {
 public:
  ColorGrid() = default;
  ColorGrid(std::size_t rows, std::size_t cols, int palette_size)
      : ColorGrid(rows, cols, palette_size, std::vector<Color>(rows * cols, kWhite)) {}
  ColorGrid(std::size_t rows, std::size_t cols, int palette_size, std::vector<Color> cells);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int palette_size() const { return palette_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Color at(std::size_t i, std::size_t j) const;
  Color padded_at(std::size_t i, std::size_t j) const;

  RowColoring row(std::size_t i) const;
  RowColoring column(std::size_t j) const;

  const std::vector<Color>& cells() const& { return cells_; }
  std::vector<Color> cells() && { return std::move(cells_); }
  std::size_t white_cell_count() const;

  bool operator==(const ColorGrid&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int palette_ = 1;
  std::vector<Color> cells_;
};

// One 2x2 window of cells.
struct Region2x2 {
  Color top_left = kWhite;
  Color top_right = kWhite;
  Color bottom_left = kWhite;
  Color bottom_right = kWhite;
};

// Corners of color c at the center of a 2x2 window; c must not be white.
int delta_c(const Region2x2& region, Color c);

// All c-corners of the grid (sum of delta_c over the padded grid's windows).
// The result is always even; an odd result is an internal error.
CornerCount count_corners_color(const ColorGrid& grid, Color c);

// Total corners over all palette colors.
CornerCount count_corners(const ColorGrid& grid);

// Corners between two consecutive rows (the padded pair g over h).
// Infinite when either row is undefined.
CornerCount corners_between_rows(const RowColoring& g, const RowColoring& h);
CornerCount corners_between_rows_color(const RowColoring& g, const RowColoring& h, Color c);

// Corners of the row viewed as a 1 x n grid.
CornerCount row_corners(const RowColoring& g);
CornerCount row_corners_color(const RowColoring& g, Color c);

// c-corners excluding the four windows centered at the grid's corner points.
CornerCount internal_corners_color(const ColorGrid& grid, Color c);

// Structural operators. Indices are 1-based; insert accepts rows()+1 (append).
ColorGrid insert_row(const ColorGrid& grid, std::size_t i, const RowColoring& g);
ColorGrid remove_row(const ColorGrid& grid, std::size_t i);
ColorGrid insert_column(const ColorGrid& grid, std::size_t j, const RowColoring& g);
ColorGrid remove_column(const ColorGrid& grid, std::size_t j);

// Cellwise merge of two rows; conflicting non-white cells yield bottom.
RowColoring merge_rows(const RowColoring& g, const RowColoring& h);

// Left fold of merge_rows over rows i..j of the grid.
RowColoring merge_range(const ColorGrid& grid, std::size_t i, std::size_t j);

// One left-to-right sweep filling each white cell with its (already swept)
// left neighbor's color. The first cell has no neighbor and stays unchanged.
RowColoring eta(const RowColoring& g);

ColorGrid transpose(const ColorGrid& grid);

// True iff candidate preserves every colored cell of base and fills every
// base-white cell with a color from `allowed`.
bool is_extension(const ColorGrid& base, const ColorGrid& candidate, const ColorSet& allowed);

}  // namespace mincorner
