#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mincorner/grid.hpp"

namespace mincorner::testing {

// Deterministic random grid: dimensions in [1, max_m] x [1, max_n], palette
// size in [1, max_k], each cell white with probability in [white_lo, white_hi]
// (drawn once per grid), otherwise a uniform palette color.
inline ColorGrid random_grid(std::mt19937& rng, std::size_t max_m, std::size_t max_n, int max_k,
                             double white_lo = 0.3, double white_hi = 0.7) {
  std::uniform_int_distribution<std::size_t> dm(1, max_m), dn(1, max_n);
  std::uniform_int_distribution<int> dk(1, max_k);
  std::uniform_real_distribution<double> dd(white_lo, white_hi);
  const std::size_t m = dm(rng), n = dn(rng);
  const int k = dk(rng);
  const double white = dd(rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> dc(1, k);
  std::vector<Color> cells(m * n);
  for (auto& c : cells) c = coin(rng) < white ? kWhite : static_cast<Color>(dc(rng));
  return ColorGrid(m, n, k, std::move(cells));
}

inline RowColoring random_row(std::mt19937& rng, std::size_t n, int k, double white = 0.5) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> dc(1, k);
  std::vector<Color> cells(n);
  for (auto& c : cells) c = coin(rng) < white ? kWhite : static_cast<Color>(dc(rng));
  return RowColoring(std::move(cells));
}

inline ColorGrid grid_from(std::initializer_list<std::initializer_list<int>> rows, int k) {
  std::size_t m = rows.size();
  std::size_t n = m == 0 ? 0 : rows.begin()->size();
  std::vector<Color> cells;
  cells.reserve(m * n);
  for (const auto& r : rows)
    for (int c : r) cells.push_back(static_cast<Color>(c));
  return ColorGrid(m, n, k, std::move(cells));
}

inline RowColoring row_from(std::initializer_list<int> cells) {
  std::vector<Color> v;
  v.reserve(cells.size());
  for (int c : cells) v.push_back(static_cast<Color>(c));
  return RowColoring(std::move(v));
}

}  // namespace mincorner::testing
