#pragma once

#include <cstdint>
#include <vector>

#include "mincorner/grid.hpp"

namespace mincorner {

// Work counters for the row-merging table, used to check the quadratic
// work bound without relying on wall clocks.
struct ApproxStats {
  std::uint64_t inner_iterations = 0;  // one per (i, j) pair visited
  std::uint64_t cells_touched = 0;     // cells read or written inside the loop
};

struct ApproxResult {
  // The table value A(m); an upper bound on the optimum within a factor
  // of half the optimum.
  CornerCount value;
  // End line index of each block, increasing, last entry = m. Within a block
  // every extension line equals the eta-filled merge of the block's lines.
  std::vector<std::size_t> block_boundaries;
  ColorGrid extension;
  // Set when the transposed run won; block boundaries then index columns.
  bool transposed = false;
};

// Value of the row-merging table. Each entry i scans j = i-1 .. 0 with a
// running merge; once the merge is undefined all longer blocks are too and
// the scan stops.
CornerCount approx_value(const ColorGrid& grid, ApproxStats* stats = nullptr);

// Value plus the block partition and the reconstructed extension, whose
// corner count never exceeds the table value. When `try_transposed` is set
// the solver also runs on the transpose and keeps the better of the two
// (row-wise result on ties).
ApproxResult approx_extension(const ColorGrid& grid, bool try_transposed = false);

}  // namespace mincorner
