#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mincorner/grid.hpp"

namespace mincorner {

enum class Axis { row, column };

// One preprocessing step, recorded with the 1-based index it was applied at
// in the grid of that moment, so the sequence can be inverted.
struct KernelStep {
  enum class Kind { removed_empty_line, merged_lines };
  Kind kind;
  Axis axis;
  std::size_t index;
  Color color = kWhite;  // the single color of a merged pair
};

struct KernelTrace {
  std::vector<KernelStep> steps;
  // Shapes at both ends of the reduction, for mismatch detection on lift.
  std::size_t original_rows = 0, original_cols = 0;
  std::size_t kernel_rows = 0, kernel_cols = 0;
};

// Which axis each reduction pass tries first. The optimum is order
// independent; the trace and kernel shape are not.
enum class KernelOrder { rows_first, columns_first };

// Exhaustively removes empty lines and merges consecutive single-color
// lines until neither rule applies.
std::pair<ColorGrid, KernelTrace> kernelize(const ColorGrid& grid,
                                            KernelOrder order = KernelOrder::rows_first);

// Replays the trace backwards on an extension of the kernel, duplicating the
// adjacent solved line at each undone step. The result is a valid extension
// of the original grid with the same corner count.
ColorGrid lift_solution(const KernelTrace& trace, const ColorGrid& kernel_extension);

struct KernelBound {
  std::size_t r;      // cells not colored with the dominant single-line color
  std::size_t bound;  // 2r + 1
};

// Computes the size bound and checks the actual kernel against it.
KernelBound kernel_size_bound(const ColorGrid& grid);

// True when neither rule applies to any row or column.
bool is_kernel_fixpoint(const ColorGrid& grid);

}  // namespace mincorner
