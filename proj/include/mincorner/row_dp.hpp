#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mincorner/grid.hpp"

namespace mincorner {

// What a solver minimizes: all corners, or the corners of one color only
// (the restricted variant, where the other color's corners are fixed).
enum class Objective { total, single_color };

struct DpObjective {
  Objective kind = Objective::total;
  Color color = 0;
};

// Supplies the candidate extensions of row i (1-based). An empty list makes
// the whole table infinite, which is the bounded decider's "no" signal.
using ExtensionProvider = std::function<std::vector<RowColoring>(std::size_t row_index)>;

struct RowDpResult {
  CornerCount value;
  // One row per grid row when a witness was requested and the value is
  // finite; empty otherwise.
  std::vector<RowColoring> witness_rows;
};

// Row-by-row dynamic program: layer i holds, per candidate extension g of
// row i, the minimum corner count of rows 1..i with row i fixed to g; the
// answer reads off the final all-white virtual row. Ties prefer the
// lexicographically smallest predecessor.
RowDpResult run_row_dp(const ColorGrid& grid, const ExtensionProvider& provider,
                       const DpObjective& objective, bool want_witness);

// Every extension that attains the optimum, in lexicographic cell order.
// Throws ResourceLimitError when there are more than max_results of them.
std::vector<ColorGrid> run_row_dp_all_optima(const ColorGrid& grid,
                                             const ExtensionProvider& provider,
                                             const DpObjective& objective,
                                             std::size_t max_results);

namespace detail {

// Corners between two consecutive rows, restricted to the given colors.
// Exposed for equivalence testing against corners_between_rows.
std::uint64_t dbar_masked(const std::vector<std::uint64_t>& top,
                          const std::vector<std::uint64_t>& bottom, std::size_t n);

std::vector<std::uint64_t> row_masks(const RowColoring& row, const std::vector<Color>& colors);

}  // namespace detail

}  // namespace mincorner
