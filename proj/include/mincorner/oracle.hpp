#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mincorner/exact.hpp"
#include "mincorner/grid.hpp"

namespace mincorner {

struct OracleOptions {
  // Upper bound on the number of enumerated candidate extensions.
  std::uint64_t cap = std::uint64_t{1} << 24;
};

// Ground truth by full enumeration of |allowed|^#whites candidates, in
// lexicographic order over white cells (row-major). The witness is the
// lexicographically smallest optimal extension.
SolveResult brute_force_optimum(const ColorGrid& grid, const ColorSet& allowed,
                                const OracleOptions& opts = {});

// All extensions attaining the optimum, in lexicographic order.
std::vector<ColorGrid> enumerate_optima(const ColorGrid& grid, const ColorSet& allowed,
                                        const OracleOptions& opts = {});

// A cell position, 1-based.
using CellRef = std::pair<std::size_t, std::size_t>;

// Constrained enumeration: each group of white cells is either entirely
// filled with `fill` or left entirely white; ungrouped whites stay white.
// Returns the optima of that restricted candidate space, lexicographic.
std::vector<ColorGrid> enumerate_optima_grouped(const ColorGrid& grid, Color fill,
                                                const std::vector<std::vector<CellRef>>& groups,
                                                const OracleOptions& opts = {});

}  // namespace mincorner
