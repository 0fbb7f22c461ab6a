#include "mincorner/oracle.hpp"

#include <algorithm>

#include "mincorner/errors.hpp"

namespace mincorner {

namespace {

std::vector<std::size_t> white_positions(const ColorGrid& grid) {
  std::vector<std::size_t> whites;
  for (std::size_t x = 0; x < grid.cells().size(); ++x)
    if (grid.cells()[x] == kWhite) whites.push_back(x);
  return whites;
}

void check_cap(std::size_t whites, std::size_t domain, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (std::size_t w = 0; w < whites; ++w) {
    count *= domain;
    if (count > cap) throw ResourceLimitError("candidate space exceeds the oracle cap");
  }
}

// Calls f on every assignment of `domain` values to the white cells, in
// lexicographic (row-major, ascending color) order.
template <typename F>
void for_each_candidate(const ColorGrid& grid, const std::vector<Color>& domain, F&& f) {
  const std::vector<std::size_t> whites = white_positions(grid);
  std::vector<Color> cells = grid.cells();
  std::vector<std::size_t> digit(whites.size(), 0);
  while (true) {
    for (std::size_t w = 0; w < whites.size(); ++w) cells[whites[w]] = domain[digit[w]];
    f(cells);
    std::size_t w = whites.size();
    while (w > 0 && digit[w - 1] == domain.size() - 1) digit[--w] = 0;
    if (w == 0) break;
    ++digit[w - 1];
  }
}

}  // namespace

SolveResult brute_force_optimum(const ColorGrid& grid, const ColorSet& allowed,
                                const OracleOptions& opts) {
  if (allowed.empty()) throw Error("the fill domain must not be empty");
  const std::vector<Color> domain = allowed.to_vector();
  for (Color c : domain)
    if (c > grid.palette_size()) throw Error("fill color exceeds palette size");
  check_cap(white_positions(grid).size(), domain.size(), opts.cap);

  CornerCount best = CornerCount::infinite();
  std::vector<Color> best_cells;
  for_each_candidate(grid, domain, [&](const std::vector<Color>& cells) {
    CornerCount c = count_corners(ColorGrid(grid.rows(), grid.cols(), grid.palette_size(), cells));
    if (c < best) {
      best = c;
      best_cells = cells;
    }
  });
  return {best, ColorGrid(grid.rows(), grid.cols(), grid.palette_size(), std::move(best_cells))};
}

std::vector<ColorGrid> enumerate_optima(const ColorGrid& grid, const ColorSet& allowed,
                                        const OracleOptions& opts) {
  if (allowed.empty()) throw Error("the fill domain must not be empty");
  const std::vector<Color> domain = allowed.to_vector();
  for (Color c : domain)
    if (c > grid.palette_size()) throw Error("fill color exceeds palette size");
  check_cap(white_positions(grid).size(), domain.size(), opts.cap);

  CornerCount best = CornerCount::infinite();
  std::vector<ColorGrid> optima;
  for_each_candidate(grid, domain, [&](const std::vector<Color>& cells) {
    ColorGrid g(grid.rows(), grid.cols(), grid.palette_size(), cells);
    CornerCount c = count_corners(g);
    if (c < best) {
      best = c;
      optima.clear();
    }
    if (c == best) optima.push_back(std::move(g));
  });
  return optima;
}

std::vector<ColorGrid> enumerate_optima_grouped(const ColorGrid& grid, Color fill,
                                                const std::vector<std::vector<CellRef>>& groups,
                                                const OracleOptions& opts) {
  if (fill == kWhite || fill > grid.palette_size()) throw Error("fill color out of range");
  if (groups.size() >= 63) throw ResourceLimitError("too many cell groups");
  if ((std::uint64_t{1} << groups.size()) > opts.cap)
    throw ResourceLimitError("candidate space exceeds the oracle cap");

  std::vector<std::vector<std::size_t>> flat(groups.size());
  std::vector<bool> taken(grid.cells().size(), false);
  for (std::size_t t = 0; t < groups.size(); ++t)
    for (const auto& [i, j] : groups[t]) {
      if (grid.at(i, j) != kWhite) throw Error("cell group contains a colored cell");
      const std::size_t x = (i - 1) * grid.cols() + (j - 1);
      if (taken[x]) throw Error("cell groups overlap");
      taken[x] = true;
      flat[t].push_back(x);
    }

  CornerCount best = CornerCount::infinite();
  std::vector<ColorGrid> optima;
  std::vector<Color> cells;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << groups.size()); ++mask) {
    cells = grid.cells();
    for (std::size_t t = 0; t < groups.size(); ++t)
      if (mask & (std::uint64_t{1} << t))
        for (std::size_t x : flat[t]) cells[x] = fill;
    ColorGrid g(grid.rows(), grid.cols(), grid.palette_size(), std::move(cells));
    CornerCount c = count_corners(g);
    if (c < best) {
      best = c;
      optima.clear();
    }
    if (c == best) optima.push_back(std::move(g));
  }
  std::sort(optima.begin(), optima.end(),
            [](const ColorGrid& a, const ColorGrid& b) { return a.cells() < b.cells(); });
  return optima;
}

}  // namespace mincorner
