#include "mincorner/grid.hpp"

#include <algorithm>
#include <array>

namespace mincorner {

std::vector<Color> ColorSet::to_vector() const {
  std::vector<Color> out;
  for (std::size_t c = 0; c < 256; ++c)
    if (bits_.test(c)) out.push_back(static_cast<Color>(c));
  return out;
}

ColorGrid::ColorGrid(std::size_t rows, std::size_t cols, int palette_size, std::vector<Color> cells)
    : rows_(rows), cols_(cols), palette_(palette_size), cells_(std::move(cells)) {
  if (palette_ < 1) throw Error("palette size must be at least 1");
  if (palette_ > 255) throw Error("palette size must be at most 255");
  if (cells_.size() != rows_ * cols_) throw Error("cell matrix does not match grid dimensions");
  for (Color c : cells_)
    if (c > palette_) throw Error("cell color exceeds palette size");
}

Color ColorGrid::at(std::size_t i, std::size_t j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) throw Error("cell index out of range");
  return cells_[(i - 1) * cols_ + (j - 1)];
}

Color ColorGrid::padded_at(std::size_t i, std::size_t j) const {
  if (i > rows_ + 1 || j > cols_ + 1) throw Error("padded cell index out of range");
  if (i < 1 || i > rows_ || j < 1 || j > cols_) return kWhite;
  return cells_[(i - 1) * cols_ + (j - 1)];
}

RowColoring ColorGrid::row(std::size_t i) const {
  if (i < 1 || i > rows_) throw Error("row index out of range");
  return RowColoring(std::vector<Color>(cells_.begin() + static_cast<std::ptrdiff_t>((i - 1) * cols_),
                                        cells_.begin() + static_cast<std::ptrdiff_t>(i * cols_)));
}

RowColoring ColorGrid::column(std::size_t j) const {
  if (j < 1 || j > cols_) throw Error("column index out of range");
  std::vector<Color> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = cells_[i * cols_ + (j - 1)];
  return RowColoring(std::move(out));
}

std::size_t ColorGrid::white_cell_count() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), kWhite));
}

int delta_c(const Region2x2& r, Color c) {
  if (c == kWhite) throw Error("white has no corners");
  int v = (r.top_left == c) + (r.bottom_right == c) - (r.top_right == c) - (r.bottom_left == c);
  return v < 0 ? -v : v;
}

namespace {

// Sum of delta_c over the distinct non-white colors present in the window.
inline int window_corners(Color a, Color b, Color c, Color d) {
  std::array<Color, 4> seen{};
  int n_seen = 0;
  int total = 0;
  for (Color col : {a, b, c, d}) {
    if (col == kWhite) continue;
    bool dup = false;
    for (int t = 0; t < n_seen; ++t)
      if (seen[t] == col) dup = true;
    if (dup) continue;
    seen[n_seen++] = col;
    int v = (a == col) + (d == col) - (b == col) - (c == col);
    total += v < 0 ? -v : v;
  }
  return total;
}

inline int window_corners_color(Color a, Color b, Color c, Color d, Color col) {
  int v = (a == col) + (d == col) - (b == col) - (c == col);
  return v < 0 ? -v : v;
}

}  // namespace

CornerCount count_corners_color(const ColorGrid& grid, Color c) {
  if (c == kWhite) throw Error("white has no corners");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i <= grid.rows(); ++i)
    for (std::size_t j = 0; j <= grid.cols(); ++j)
      total += static_cast<std::uint64_t>(window_corners_color(
          grid.padded_at(i, j), grid.padded_at(i, j + 1), grid.padded_at(i + 1, j),
          grid.padded_at(i + 1, j + 1), c));
  if (total % 2 != 0) throw VerificationError("per-color corner count must be even");
  return CornerCount::finite(total);
}

CornerCount count_corners(const ColorGrid& grid) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i <= grid.rows(); ++i)
    for (std::size_t j = 0; j <= grid.cols(); ++j)
      total += static_cast<std::uint64_t>(
          window_corners(grid.padded_at(i, j), grid.padded_at(i, j + 1), grid.padded_at(i + 1, j),
                         grid.padded_at(i + 1, j + 1)));
  return CornerCount::finite(total);
}

namespace {

inline Color padded_cell(const RowColoring& g, std::size_t x) {
  // x ranges over 0..n+1; 0 and n+1 are the white padding cells.
  const auto& v = g.cell_vector();
  if (x < 1 || x > v.size()) return kWhite;
  return v[x - 1];
}

}  // namespace

CornerCount corners_between_rows(const RowColoring& g, const RowColoring& h) {
  if (g.is_bottom() || h.is_bottom()) return CornerCount::infinite();
  if (g.size() != h.size()) throw Error("rows must have equal length");
  const std::size_t n = g.size();
  std::uint64_t total = 0;
  for (std::size_t x = 0; x <= n; ++x)
    total += static_cast<std::uint64_t>(window_corners(padded_cell(g, x), padded_cell(g, x + 1),
                                                       padded_cell(h, x), padded_cell(h, x + 1)));
  return CornerCount::finite(total);
}

CornerCount corners_between_rows_color(const RowColoring& g, const RowColoring& h, Color c) {
  if (c == kWhite) throw Error("white has no corners");
  if (g.is_bottom() || h.is_bottom()) return CornerCount::infinite();
  if (g.size() != h.size()) throw Error("rows must have equal length");
  const std::size_t n = g.size();
  std::uint64_t total = 0;
  for (std::size_t x = 0; x <= n; ++x)
    total += static_cast<std::uint64_t>(window_corners_color(
        padded_cell(g, x), padded_cell(g, x + 1), padded_cell(h, x), padded_cell(h, x + 1), c));
  return CornerCount::finite(total);
}

CornerCount row_corners(const RowColoring& g) {
  if (g.is_bottom()) return CornerCount::infinite();
  RowColoring w = RowColoring::white(g.size());
  return corners_between_rows(w, g) + corners_between_rows(g, w);
}

CornerCount row_corners_color(const RowColoring& g, Color c) {
  if (g.is_bottom()) return CornerCount::infinite();
  RowColoring w = RowColoring::white(g.size());
  return corners_between_rows_color(w, g, c) + corners_between_rows_color(g, w, c);
}

CornerCount internal_corners_color(const ColorGrid& grid, Color c) {
  if (c == kWhite) throw Error("white has no corners");
  CornerCount all = count_corners_color(grid, c);
  std::uint64_t corner_windows = 0;
  const std::size_t m = grid.rows(), n = grid.cols();
  for (std::size_t i : {std::size_t{0}, m})
    for (std::size_t j : {std::size_t{0}, n})
      corner_windows += static_cast<std::uint64_t>(
          window_corners_color(grid.padded_at(i, j), grid.padded_at(i, j + 1),
                               grid.padded_at(i + 1, j), grid.padded_at(i + 1, j + 1), c));
  return CornerCount::finite(all.value() - corner_windows);
}

ColorGrid insert_row(const ColorGrid& grid, std::size_t i, const RowColoring& g) {
  if (g.is_bottom()) throw Error("cannot insert the undefined row");
  if (g.size() != grid.cols()) throw Error("inserted row has wrong length");
  if (i < 1 || i > grid.rows() + 1) throw Error("row insert index out of range");
  std::vector<Color> cells;
  cells.reserve((grid.rows() + 1) * grid.cols());
  const auto& old = grid.cells();
  const std::size_t before = (i - 1) * grid.cols();
  cells.insert(cells.end(), old.begin(), old.begin() + static_cast<std::ptrdiff_t>(before));
  cells.insert(cells.end(), g.cell_vector().begin(), g.cell_vector().end());
  cells.insert(cells.end(), old.begin() + static_cast<std::ptrdiff_t>(before), old.end());
  return ColorGrid(grid.rows() + 1, grid.cols(), grid.palette_size(), std::move(cells));
}

ColorGrid remove_row(const ColorGrid& grid, std::size_t i) {
  if (i < 1 || i > grid.rows()) throw Error("row remove index out of range");
  std::vector<Color> cells;
  cells.reserve((grid.rows() - 1) * grid.cols());
  const auto& old = grid.cells();
  cells.insert(cells.end(), old.begin(), old.begin() + static_cast<std::ptrdiff_t>((i - 1) * grid.cols()));
  cells.insert(cells.end(), old.begin() + static_cast<std::ptrdiff_t>(i * grid.cols()), old.end());
  return ColorGrid(grid.rows() - 1, grid.cols(), grid.palette_size(), std::move(cells));
}

ColorGrid insert_column(const ColorGrid& grid, std::size_t j, const RowColoring& g) {
  return transpose(insert_row(transpose(grid), j, g));
}

ColorGrid remove_column(const ColorGrid& grid, std::size_t j) {
  return transpose(remove_row(transpose(grid), j));
}

RowColoring merge_rows(const RowColoring& g, const RowColoring& h) {
  if (g.is_bottom() || h.is_bottom()) return RowColoring::bottom();
  if (g.size() != h.size()) throw Error("rows must have equal length");
  std::vector<Color> out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    Color a = g.cell_vector()[x], b = h.cell_vector()[x];
    if (a == b || b == kWhite)
      out[x] = a;
    else if (a == kWhite)
      out[x] = b;
    else
      return RowColoring::bottom();
  }
  return RowColoring(std::move(out));
}

RowColoring merge_range(const ColorGrid& grid, std::size_t i, std::size_t j) {
  if (i < 1 || j > grid.rows() || i > j) throw Error("merge range invalid");
  RowColoring acc = grid.row(i);
  for (std::size_t r = i + 1; r <= j; ++r) acc = merge_rows(acc, grid.row(r));
  return acc;
}

RowColoring eta(const RowColoring& g) {
  if (g.is_bottom()) return RowColoring::bottom();
  std::vector<Color> out = g.cell_vector();
  for (std::size_t x = 1; x < out.size(); ++x)
    if (out[x] == kWhite) out[x] = out[x - 1];
  return RowColoring(std::move(out));
}

ColorGrid transpose(const ColorGrid& grid) {
  std::vector<Color> cells(grid.rows() * grid.cols());
  for (std::size_t i = 0; i < grid.rows(); ++i)
    for (std::size_t j = 0; j < grid.cols(); ++j)
      cells[j * grid.rows() + i] = grid.cells()[i * grid.cols() + j];
  return ColorGrid(grid.cols(), grid.rows(), grid.palette_size(), std::move(cells));
}

bool is_extension(const ColorGrid& base, const ColorGrid& candidate, const ColorSet& allowed) {
  if (base.rows() != candidate.rows() || base.cols() != candidate.cols())
    throw Error("extension dimensions do not match");
  if (base.palette_size() != candidate.palette_size())
    throw Error("extension palette does not match");
  for (std::size_t x = 0; x < base.cells().size(); ++x) {
    Color b = base.cells()[x], c = candidate.cells()[x];
    if (b != kWhite) {
      if (c != b) return false;
    } else {
      if (!allowed.contains(c)) return false;
    }
  }
  return true;
}

}  // namespace mincorner
