#include "mincorner/exact.hpp"

#include <algorithm>

#include "mincorner/errors.hpp"

namespace mincorner {

std::vector<RowColoring> enumerate_row_extensions(const RowColoring& row, const ColorSet& allowed) {
  if (row.is_bottom()) throw Error("cannot extend the undefined row");
  if (allowed.empty()) throw Error("the fill domain must not be empty");
  const std::vector<Color> domain = allowed.to_vector();
  std::vector<Color> cells = row.cell_vector();
  std::vector<std::size_t> whites;
  for (std::size_t x = 0; x < cells.size(); ++x)
    if (cells[x] == kWhite) whites.push_back(x);

  std::vector<RowColoring> out;
  std::vector<std::size_t> digit(whites.size(), 0);
  while (true) {
    for (std::size_t w = 0; w < whites.size(); ++w) cells[whites[w]] = domain[digit[w]];
    out.emplace_back(cells);
    // Odometer with the rightmost white cell fastest: lexicographic rows.
    std::size_t w = whites.size();
    while (w > 0 && digit[w - 1] == domain.size() - 1) digit[--w] = 0;
    if (w == 0) break;
    ++digit[w - 1];
  }
  return out;
}

std::uint64_t count_row_extensions(const RowColoring& row, const ColorSet& allowed) {
  constexpr std::uint64_t kSat = std::uint64_t{1} << 63;
  std::uint64_t count = 1;
  for (Color c : row.cell_vector())
    if (c == kWhite) {
      count *= allowed.size();
      if (count >= kSat) return kSat;
    }
  return count;
}

namespace {

void validate(const ColorGrid& grid, const SolveOptions& opts) {
  if (opts.allowed.empty()) throw Error("the fill domain must not be empty");
  for (Color c : opts.allowed.to_vector())
    if (c > grid.palette_size()) throw Error("fill color exceeds palette size");
  if (opts.objective == Objective::single_color) {
    if (opts.objective_color == kWhite || opts.objective_color > grid.palette_size())
      throw Error("objective color out of range");
  }
}

void check_caps(const ColorGrid& grid, const SolveOptions& opts) {
  for (std::size_t i = 1; i <= grid.rows(); ++i)
    if (count_row_extensions(grid.row(i), opts.allowed) > opts.per_row_cap)
      throw ResourceLimitError("row extension count exceeds the enumeration cap");
}

// True when the table should run along columns instead of rows.
bool prefer_transposed(const ColorGrid& grid) {
  auto max_line_whites = [](const ColorGrid& g, bool by_rows) {
    std::size_t worst = 0;
    const std::size_t lines = by_rows ? g.rows() : g.cols();
    for (std::size_t l = 1; l <= lines; ++l) {
      RowColoring line = by_rows ? g.row(l) : g.column(l);
      std::size_t whites = 0;
      for (Color c : line.cell_vector())
        if (c == kWhite) ++whites;
      worst = std::max(worst, whites);
    }
    return worst;
  };
  return max_line_whites(grid, false) < max_line_whites(grid, true);
}

CornerCount measured(const ColorGrid& extension, const SolveOptions& opts) {
  return opts.objective == Objective::single_color
             ? count_corners_color(extension, opts.objective_color)
             : count_corners(extension);
}

DpObjective dp_objective(const SolveOptions& opts) {
  return DpObjective{opts.objective, opts.objective_color};
}

ExtensionProvider full_provider(const ColorGrid& grid, const SolveOptions& opts) {
  return [&grid, allowed = opts.allowed](std::size_t i) {
    return enumerate_row_extensions(grid.row(i), allowed);
  };
}

}  // namespace

SolveResult solve_exact(const ColorGrid& grid, const SolveOptions& opts) {
  validate(grid, opts);
  if (grid.empty()) return {CornerCount::finite(0), grid};

  if (opts.auto_orient && prefer_transposed(grid)) {
    SolveOptions inner = opts;
    inner.auto_orient = false;
    SolveResult r = solve_exact(transpose(grid), inner);
    return {r.optimum, transpose(r.extension)};
  }

  check_caps(grid, opts);
  RowDpResult dp = run_row_dp(grid, full_provider(grid, opts), dp_objective(opts), true);
  if (dp.value.is_infinite())
    throw VerificationError("exhaustive table produced no extension");

  std::vector<Color> cells;
  cells.reserve(grid.rows() * grid.cols());
  for (const auto& row : dp.witness_rows) {
    const auto& v = row.cell_vector();
    cells.insert(cells.end(), v.begin(), v.end());
  }
  ColorGrid extension(grid.rows(), grid.cols(), grid.palette_size(), std::move(cells));

  if (!is_extension(grid, extension, opts.allowed))
    throw VerificationError("solver witness is not a valid extension");
  if (measured(extension, opts) != dp.value)
    throw VerificationError("solver witness does not match the reported optimum");
  return {dp.value, std::move(extension)};
}

CornerCount optimal_value(const ColorGrid& grid, const SolveOptions& opts) {
  validate(grid, opts);
  if (grid.empty()) return CornerCount::finite(0);

  if (opts.auto_orient && prefer_transposed(grid)) {
    SolveOptions inner = opts;
    inner.auto_orient = false;
    return optimal_value(transpose(grid), inner);
  }

  check_caps(grid, opts);
  RowDpResult dp = run_row_dp(grid, full_provider(grid, opts), dp_objective(opts), false);
  if (dp.value.is_infinite())
    throw VerificationError("exhaustive table produced no extension");
  return dp.value;
}

std::vector<ColorGrid> enumerate_exact_optima(const ColorGrid& grid, const SolveOptions& opts,
                                              std::size_t max_results) {
  validate(grid, opts);
  if (grid.empty()) return {grid};

  if (opts.auto_orient && prefer_transposed(grid)) {
    SolveOptions inner = opts;
    inner.auto_orient = false;
    std::vector<ColorGrid> optima = enumerate_exact_optima(transpose(grid), inner, max_results);
    for (auto& g : optima) g = transpose(g);
    std::sort(optima.begin(), optima.end(),
              [](const ColorGrid& a, const ColorGrid& b) { return a.cells() < b.cells(); });
    return optima;
  }

  check_caps(grid, opts);
  return run_row_dp_all_optima(grid, full_provider(grid, opts), dp_objective(opts), max_results);
}

}  // namespace mincorner
