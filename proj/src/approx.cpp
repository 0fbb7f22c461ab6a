#include "mincorner/approx.hpp"

#include <algorithm>

#include "mincorner/errors.hpp"

namespace mincorner {

namespace {

struct TableRun {
  std::vector<CornerCount> table;     // A(0..m)
  std::vector<std::size_t> pred;      // block start - 1 for each i
};

TableRun run_table(const ColorGrid& grid, ApproxStats* stats) {
  const std::size_t m = grid.rows(), n = grid.cols();
  TableRun run;
  run.table.assign(m + 1, CornerCount::finite(0));
  run.pred.assign(m + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    RowColoring merged = RowColoring::white(n);
    CornerCount best = CornerCount::infinite();
    std::size_t best_j = i - 1;
    for (std::size_t j = i; j-- > 0;) {
      merged = merge_rows(merged, grid.row(j + 1));
      if (stats) {
        ++stats->inner_iterations;
        stats->cells_touched += 3 * n + 1;  // merge, sweep, corner scan
      }
      if (merged.is_bottom()) break;  // all longer blocks merge to bottom too
      CornerCount cand = run.table[j] + row_corners(eta(merged));
      if (cand <= best) {  // ties prefer the longer block
        best = cand;
        best_j = j;
      }
    }
    run.table[i] = best;
    run.pred[i] = best_j;
  }
  return run;
}

ApproxResult reconstruct(const ColorGrid& grid, const TableRun& run) {
  const std::size_t m = grid.rows(), n = grid.cols();
  ApproxResult result;
  result.value = run.table[m];

  std::vector<std::size_t> starts;  // block start indices, collected backwards
  for (std::size_t i = m; i > 0; i = run.pred[i]) starts.push_back(run.pred[i] + 1);

  std::vector<Color> cells(m * n, kWhite);
  std::size_t end = m;
  for (std::size_t s : starts) {
    RowColoring fill = eta(merge_range(grid, s, end));
    for (std::size_t r = s; r <= end; ++r)
      for (std::size_t c = 0; c < n; ++c) cells[(r - 1) * n + c] = fill.cell_vector()[c];
    result.block_boundaries.push_back(end);
    end = s - 1;
  }
  std::reverse(result.block_boundaries.begin(), result.block_boundaries.end());
  result.extension = ColorGrid(m, n, grid.palette_size(), std::move(cells));

  if (!is_extension(grid, result.extension, ColorSet::all(grid.palette_size())))
    throw VerificationError("reconstructed block extension is invalid");
  if (count_corners(result.extension) > result.value)
    throw VerificationError("reconstructed block extension exceeds the table value");
  return result;
}

}  // namespace

CornerCount approx_value(const ColorGrid& grid, ApproxStats* stats) {
  if (grid.empty()) return CornerCount::finite(0);
  return run_table(grid, stats).table[grid.rows()];
}

ApproxResult approx_extension(const ColorGrid& grid, bool try_transposed) {
  if (grid.empty()) return {CornerCount::finite(0), {}, grid};
  ApproxResult by_rows = reconstruct(grid, run_table(grid, nullptr));
  if (!try_transposed) return by_rows;

  ColorGrid flipped = transpose(grid);
  ApproxResult by_cols = reconstruct(flipped, run_table(flipped, nullptr));
  if (by_cols.value < by_rows.value) {
    by_cols.extension = transpose(by_cols.extension);
    by_cols.transposed = true;
    return by_cols;
  }
  return by_rows;
}

}  // namespace mincorner
