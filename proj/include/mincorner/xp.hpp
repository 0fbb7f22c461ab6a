#pragma once

#include <cstdint>
#include <vector>

#include "mincorner/grid.hpp"

namespace mincorner {

// A row coloring as maximal same-color runs: breakpoints are the 1-based
// positions p where cells p and p+1 differ; one color per run.
struct Segmentation {
  std::vector<std::size_t> breakpoints;
  std::vector<Color> segment_colors;
};

Segmentation segmentation_of(const RowColoring& row);
RowColoring row_from_segmentation(std::size_t n, const Segmentation& seg);

// All `allowed`-extensions of the row whose own corner count is at most
// `budget`, deduplicated, in lexicographic order. Small rows are enumerated
// outright; wide rows go through breakpoint/segment enumeration, which
// caps the candidate count by the budget rather than the width.
std::vector<RowColoring> bounded_row_extensions(const RowColoring& row, std::uint64_t budget,
                                                const ColorSet& allowed,
                                                std::uint64_t cap = std::uint64_t{1} << 22);

// Budget decision for the total corner count, running the row table over
// bounded extension sets only. A row without any candidate makes the
// answer "no".
bool xp_decide(const ColorGrid& grid, std::uint64_t budget, const ColorSet& allowed,
               std::uint64_t per_row_cap = std::uint64_t{1} << 22);

}  // namespace mincorner
