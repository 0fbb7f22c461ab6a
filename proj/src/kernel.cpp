#include "mincorner/kernel.hpp"

#include <array>
#include <optional>

#include "mincorner/errors.hpp"

namespace mincorner {

namespace {

std::size_t line_count(const ColorGrid& g, Axis axis) {
  return axis == Axis::row ? g.rows() : g.cols();
}

RowColoring get_line(const ColorGrid& g, Axis axis, std::size_t i) {
  return axis == Axis::row ? g.row(i) : g.column(i);
}

ColorGrid remove_line(const ColorGrid& g, Axis axis, std::size_t i) {
  return axis == Axis::row ? remove_row(g, i) : remove_column(g, i);
}

ColorGrid insert_line(const ColorGrid& g, Axis axis, std::size_t i, const RowColoring& line) {
  return axis == Axis::row ? insert_row(g, i, line) : insert_column(g, i, line);
}

bool line_is_empty(const RowColoring& line) {
  for (Color c : line.cell_vector())
    if (c != kWhite) return false;
  return true;
}

// The unique non-white color of the line, if it has exactly one.
std::optional<Color> single_color_of(const RowColoring& line) {
  Color found = kWhite;
  for (Color c : line.cell_vector()) {
    if (c == kWhite) continue;
    if (found == kWhite)
      found = c;
    else if (found != c)
      return std::nullopt;
  }
  if (found == kWhite) return std::nullopt;
  return found;
}

// Color of a mergeable pair at lines i, i+1, if any.
std::optional<Color> mergeable_pair_color(const ColorGrid& g, Axis axis, std::size_t i) {
  auto a = single_color_of(get_line(g, axis, i));
  auto b = single_color_of(get_line(g, axis, i + 1));
  if (a && b && *a == *b) return a;
  return std::nullopt;
}

ColorGrid merge_pair(const ColorGrid& g, Axis axis, std::size_t i) {
  RowColoring merged = merge_rows(get_line(g, axis, i), get_line(g, axis, i + 1));
  if (merged.is_bottom()) throw VerificationError("single-color lines merged to bottom");
  ColorGrid shrunk = remove_line(g, axis, i + 1);
  shrunk = remove_line(shrunk, axis, i);
  return insert_line(shrunk, axis, i, merged);
}

}  // namespace

std::pair<ColorGrid, KernelTrace> kernelize(const ColorGrid& grid, KernelOrder order) {
  ColorGrid cur = grid;
  KernelTrace trace;
  const std::array<Axis, 2> axes = order == KernelOrder::rows_first
                                       ? std::array<Axis, 2>{Axis::row, Axis::column}
                                       : std::array<Axis, 2>{Axis::column, Axis::row};
  bool progress = true;
  while (progress) {
    progress = false;
    for (Axis axis : axes) {
      for (std::size_t i = 1; i <= line_count(cur, axis);) {
        if (line_is_empty(get_line(cur, axis, i))) {
          cur = remove_line(cur, axis, i);
          trace.steps.push_back({KernelStep::Kind::removed_empty_line, axis, i, kWhite});
          progress = true;
        } else {
          ++i;
        }
      }
    }
    for (Axis axis : axes) {
      for (std::size_t i = 1; i + 1 <= line_count(cur, axis);) {
        if (auto c = mergeable_pair_color(cur, axis, i)) {
          cur = merge_pair(cur, axis, i);
          trace.steps.push_back({KernelStep::Kind::merged_lines, axis, i, *c});
          progress = true;
        } else {
          ++i;
        }
      }
    }
  }
  if (trace.steps.size() > grid.rows() + grid.cols())
    throw VerificationError("kernelization took more steps than lines");
  trace.original_rows = grid.rows();
  trace.original_cols = grid.cols();
  trace.kernel_rows = cur.rows();
  trace.kernel_cols = cur.cols();
  return {std::move(cur), std::move(trace)};
}

ColorGrid lift_solution(const KernelTrace& trace, const ColorGrid& kernel_extension) {
  if (kernel_extension.rows() != trace.kernel_rows ||
      kernel_extension.cols() != trace.kernel_cols)
    throw Error("trace does not match the extension");
  ColorGrid cur = kernel_extension;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    const KernelStep& step = *it;
    const std::size_t count = line_count(cur, step.axis);
    if (step.index > count + 1) throw Error("trace does not match the extension");
    switch (step.kind) {
      case KernelStep::Kind::removed_empty_line: {
        // Duplicate the line now at the removal point (or append a white
        // line when the grid has no line to copy); either way no corners
        // are added between two identical neighbors.
        RowColoring line =
            count == 0
                ? RowColoring::white(step.axis == Axis::row ? cur.cols() : cur.rows())
                : get_line(cur, step.axis, std::min(step.index, count));
        cur = insert_line(cur, step.axis, step.index, line);
        break;
      }
      case KernelStep::Kind::merged_lines: {
        if (step.index > count) throw Error("trace does not match the extension");
        cur = insert_line(cur, step.axis, step.index, get_line(cur, step.axis, step.index));
        break;
      }
    }
  }
  return cur;
}

KernelBound kernel_size_bound(const ColorGrid& grid) {
  const int k = grid.palette_size();
  std::vector<std::size_t> singular(static_cast<std::size_t>(k) + 1, 0);
  for (std::size_t i = 1; i <= grid.rows(); ++i)
    if (auto c = single_color_of(grid.row(i))) ++singular[*c];
  for (std::size_t j = 1; j <= grid.cols(); ++j)
    if (auto c = single_color_of(grid.column(j))) ++singular[*c];

  Color dominant = 1;
  for (int c = 2; c <= k; ++c)
    if (singular[static_cast<std::size_t>(c)] > singular[dominant])
      dominant = static_cast<Color>(c);

  std::size_t r = 0;
  for (Color c : grid.cells())
    if (c != kWhite && c != dominant) ++r;

  KernelBound result{r, 2 * r + 1};
  ColorGrid kernel = kernelize(grid).first;
  if (kernel.rows() > result.bound || kernel.cols() > result.bound)
    throw VerificationError("kernel exceeds its size bound");
  return result;
}

bool is_kernel_fixpoint(const ColorGrid& grid) {
  for (Axis axis : {Axis::row, Axis::column}) {
    const std::size_t count = line_count(grid, axis);
    for (std::size_t i = 1; i <= count; ++i)
      if (line_is_empty(get_line(grid, axis, i))) return false;
    for (std::size_t i = 1; i + 1 <= count; ++i)
      if (mergeable_pair_color(grid, axis, i)) return false;
  }
  return true;
}

}  // namespace mincorner
