#pragma once

#include <cstdint>
#include <vector>

#include "mincorner/grid.hpp"
#include "mincorner/row_dp.hpp"

namespace mincorner {

struct SolveOptions {
  // Fill domain for white cells.
  ColorSet allowed;
  // What to minimize (and report).
  Objective objective = Objective::total;
  Color objective_color = 0;
  // Upper bound on the number of candidate extensions of any single line;
  // exceeding it is a resource-limit error, not a wrong answer.
  std::uint64_t per_row_cap = std::uint64_t{1} << 22;
  // Run the table along the axis whose worst line has fewer white cells.
  bool auto_orient = true;
};

struct SolveResult {
  CornerCount optimum;
  ColorGrid extension;
};

// All `allowed`-extensions of the row, in lexicographic order. Fixed colored
// cells are kept; each white cell ranges over `allowed` ascending.
std::vector<RowColoring> enumerate_row_extensions(const RowColoring& row, const ColorSet& allowed);

// Number of such extensions, saturating at 2^63 to stay overflow-safe.
std::uint64_t count_row_extensions(const RowColoring& row, const ColorSet& allowed);

// Minimum-corner extension by exhaustive row dynamic programming.
SolveResult solve_exact(const ColorGrid& grid, const SolveOptions& opts);

// Value-only variant keeping two table layers.
CornerCount optimal_value(const ColorGrid& grid, const SolveOptions& opts);

// Every optimal extension, lexicographic, capped by max_results.
std::vector<ColorGrid> enumerate_exact_optima(const ColorGrid& grid, const SolveOptions& opts,
                                              std::size_t max_results);

}  // namespace mincorner
